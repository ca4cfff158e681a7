#pragma once

#include <memory>
#include <string>
#include <vector>

#include "oplab/algebra.hpp"

namespace oplab {

class MeasurementContext;
using ContextPtr = std::shared_ptr<const MeasurementContext>;

/// One named generator of a context, diagonal in the context basis.
/// spectrum[k] is its eigenvalue on basis column k.
struct ContextGenerator {
    std::string name;
    Observable observable;
    std::vector<double> spectrum;
};

/// Maximal commutative subalgebra: a joint orthonormal eigenbasis plus the
/// generators that produced it (completed with rank-one projectors where
/// joint eigenspaces were degenerate). Immutable; always held by ContextPtr.
class MeasurementContext {
public:
    Eigen::Index dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vector basis_column(Eigen::Index k) const { return basis_.col(k); }
    const std::vector<ContextGenerator>& generators() const { return generators_; }
    const std::string& label() const { return label_; }

    /// Number of generators appended by the maximality completion.
    int completion_count() const { return completion_count_; }

private:
    friend ContextPtr context_from(std::vector<Observable> generating_set,
                                   std::vector<std::string> names, std::string label);
    MeasurementContext() = default;

    Matrix basis_;
    std::vector<ContextGenerator> generators_;
    std::string label_;
    int completion_count_ = 0;
};

/// Simultaneously diagonalize a commuting generating set and complete it to
/// a maximal abelian subalgebra. Deterministic: the randomized combination
/// uses a fixed internal seed, columns are ordered by the ascending joint
/// spectra, and column phases are normalized.
/// Throws IncompatibleGeneratorsError naming the first offending pair.
ContextPtr context_from(std::vector<Observable> generating_set,
                        std::vector<std::string> names = {}, std::string label = {});

/// Context of the rotated generator A1*cos(alpha) + A2*sin(alpha).
ContextPtr rotated_context(const Observable& a1, const Observable& a2, double alpha);

/// True iff A is diagonal in the context basis (off-diagonal mass within
/// tol::diagonal).
bool contains(const MeasurementContext& ctx, const Observable& a);

/// Clustered diagonal values of A in the context basis. Checks the
/// spectral-consistency postcondition against the global spectrum(A) and
/// throws NumericalFailureError if they disagree beyond tol::cluster.
std::vector<SpectralPoint> spectrum_in_context(const MeasurementContext& ctx, const Observable& a);

/// Multiplicative functional of a context: evaluation at one basis column.
/// Characters of different contexts are never compared.
struct Character {
    ContextPtr context;
    Eigen::Index index;
};

std::vector<Character> characters_of(const ContextPtr& ctx);

/// Value of A in the character's trial: the index-th diagonal entry of
/// basis^dagger * A * basis. Throws NotInContextError when A is not in the
/// context (one trial serves only mutually commuting observables).
double evaluate(const Character& chi, const Observable& a);

/// Diagonal of basis^dagger * A * basis (real parts); membership is not
/// checked. Shared by evaluate/spectrum_in_context and the sampling code.
Eigen::VectorXd diagonal_in_basis(const MeasurementContext& ctx, const Observable& a);

}  // namespace oplab
