#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "oplab/context.hpp"

namespace oplab {

/// One assigned coordinate: the value a trial gave to a context generator.
/// The observable itself is reachable through the owning context, so
/// records stay cheap even for large sample sets.
struct RecordedValue {
    std::uint64_t fingerprint;
    ContextPtr context;
    Eigen::Index generator_index;
    double value;

    const ContextGenerator& generator() const {
        return context->generators()[static_cast<std::size_t>(generator_index)];
    }
};

/// Contextual valuation functional of a single trial. Values exist only for
/// the contexts this trial has actually visited; the restriction to each
/// visited context is a character. Extension returns a new value; instances
/// never mutate.
class PhysicalState {
public:
    std::uint64_t trial_id() const { return trial_id_; }
    const ContextPtr& home_context() const { return visited_.front().first; }
    Eigen::Index home_character() const { return visited_.front().second; }

    /// (context, character index) pairs in visiting order, home first.
    const std::vector<std::pair<ContextPtr, Eigen::Index>>& visited() const { return visited_; }
    const std::vector<RecordedValue>& coordinate_record() const { return record_; }

    std::optional<double> recorded_value(const Observable& a) const;

    /// Value assigned to A by this trial: the recorded coordinate if A is a
    /// recorded generator, otherwise evaluation through a visited context
    /// containing A. Throws NotInContextError if no visited context serves A.
    double value_of(const Observable& a) const;
    bool can_evaluate(const Observable& a) const;

    /// Unit vector of the ensemble this trial was drawn from, if any; used
    /// for conditional Born weights during extension.
    const std::shared_ptr<const Vector>& source() const { return source_; }

    /// Low-level reconstruction of a trial from its context/character chain
    /// (deserialized logs, tests). The chain is taken as given; no
    /// admissibility filtering is applied.
    static PhysicalState restore(std::uint64_t trial_id,
                                 std::vector<std::pair<ContextPtr, Eigen::Index>> chain,
                                 std::shared_ptr<const Vector> source = nullptr);

private:
    friend PhysicalState realize_state(const ContextPtr&, const Character&, std::uint64_t,
                                       std::shared_ptr<const Vector>);
    friend PhysicalState extend_coordinates(const PhysicalState&, const ContextPtr&, RngStream&);
    PhysicalState() = default;

    void absorb_context(const ContextPtr& ctx, Eigen::Index character);

    std::uint64_t trial_id_ = 0;
    std::vector<std::pair<ContextPtr, Eigen::Index>> visited_;
    std::vector<RecordedValue> record_;
    std::shared_ptr<const Vector> source_;
};

/// Monotone process-wide trial counter; relevant sets of different
/// observables never share a trial id.
std::uint64_t next_trial_id();

/// Fresh physical state whose home-context values are those of chi; the
/// coordinate record is seeded with all generators of ctx.
PhysicalState realize_state(const ContextPtr& ctx, const Character& chi, std::uint64_t trial_id,
                            std::shared_ptr<const Vector> source = nullptr);

/// Extend the coordinate record to next_ctx. Generators already recorded
/// keep their values; the remaining ones take the values of a character of
/// next_ctx sampled among those that agree with every recorded observable
/// contained in next_ctx (conditional Born weights when a source ensemble
/// is attached, uniform otherwise). Throws InconsistentExtensionError when
/// no character is admissible.
PhysicalState extend_coordinates(const PhysicalState& phi, const ContextPtr& next_ctx,
                                 RngStream& rng);

/// Characters of ctx that agree with phi's record on every recorded
/// observable contained in ctx.
std::vector<Eigen::Index> admissible_characters(const PhysicalState& phi,
                                                const MeasurementContext& ctx);

/// Per-context slice of a state's coordinates (Eq.-style chart: one set of
/// generator values per visited context, overlaps recorded once).
struct CoordinateChart {
    struct Entry {
        std::string context_label;
        std::vector<std::pair<std::string, double>> coordinates;
    };
    std::vector<Entry> chain;
};

CoordinateChart coordinate_chart(const PhysicalState& phi);

struct SeparationWitness {
    Character character;
    double value_a1;
    double value_a2;
};

/// Either both observables agree within tolerance, or a witness character
/// whose values differ by more than tol::separation.
struct SeparationResult {
    bool equal;
    std::optional<SeparationWitness> witness;
};

/// Search for a functional separating A1 from A2. Contexts from `pool`
/// containing both are tried first; otherwise a context is built from the
/// pair (commuting) or from their difference (noncommuting), in which case
/// the witness values are the expectations of the difference's eigenvector.
SeparationResult separate(const Observable& a1, const Observable& a2,
                          const std::vector<ContextPtr>& pool = {});

}  // namespace oplab
