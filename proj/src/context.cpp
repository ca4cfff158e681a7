#include "oplab/context.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace oplab {

namespace {

// Fixed seed for the randomized generator combination: the same generating
// set always produces the same context.
constexpr std::uint64_t kCombinationSeed = 0x5eedc0de5eedc0deULL;

struct Block {
    Eigen::Index start;
    Eigen::Index size;
};

// Split an ascending eigenvalue vector into clusters (chain rule, gap >
// tol::cluster) and return the blocks relative to `offset`.
std::vector<Block> split_blocks(const Eigen::VectorXd& ascending, Eigen::Index offset) {
    std::vector<Block> blocks;
    Eigen::Index i = 0;
    while (i < ascending.size()) {
        Eigen::Index j = i + 1;
        while (j < ascending.size() && ascending(j) - ascending(j - 1) <= tol::cluster) ++j;
        blocks.push_back({offset + i, j - i});
        i = j;
    }
    return blocks;
}

// Refine the basis on each block so that G becomes diagonal there, and
// split the blocks by G's clustered eigenvalues.
std::vector<Block> refine_by(Matrix& basis, const Observable& g, const std::vector<Block>& blocks) {
    std::vector<Block> refined;
    for (const Block& b : blocks) {
        if (b.size == 1) {
            refined.push_back(b);
            continue;
        }
        const auto cols = basis.middleCols(b.start, b.size);
        Matrix compressed = cols.adjoint() * g.entries() * cols;
        compressed = 0.5 * (compressed + compressed.adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> solver(compressed);
        if (solver.info() != Eigen::Success) {
            throw NumericalFailureError("context refinement eigendecomposition failed");
        }
        basis.middleCols(b.start, b.size) = cols * solver.eigenvectors();
        for (const Block& sub : split_blocks(solver.eigenvalues(), b.start)) refined.push_back(sub);
    }
    return refined;
}

// Normalize each column's global phase: largest-modulus entry made real
// positive (first such entry on ties), so dumps are reproducible.
void fix_phases(Matrix& basis) {
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < basis.rows(); ++i) {
            const double m = std::abs(basis(i, k));
            if (m > best + 1e-12) {
                best = m;
                pivot = i;
            }
        }
        const Complex z = basis(pivot, k);
        if (std::abs(z) > 0.0) basis.col(k) *= std::conj(z) / std::abs(z);
    }
}

std::string default_label(const std::vector<ContextGenerator>& generators) {
    std::ostringstream out;
    out << "ctx(";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out << ",";
        out << generators[i].name;
    }
    out << ")";
    return out.str();
}

std::vector<double> diagonal_of(const Matrix& basis, const Observable& g) {
    std::vector<double> d(static_cast<std::size_t>(basis.cols()));
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
        d[static_cast<std::size_t>(k)] =
            (basis.col(k).adjoint() * g.entries() * basis.col(k))(0).real();
    }
    return d;
}

}  // namespace

ContextPtr context_from(std::vector<Observable> generating_set, std::vector<std::string> names,
                        std::string label) {
    if (generating_set.empty()) {
        throw InvalidDimensionError("context_from: generating set must be nonempty");
    }
    const Eigen::Index n = generating_set.front().dim();
    for (const Observable& g : generating_set) {
        if (g.dim() != n) {
            throw DimensionMismatchError("context_from: generators of mixed dimension");
        }
    }
    while (names.size() < generating_set.size()) {
        names.push_back("G" + std::to_string(names.size()));
    }

    for (std::size_t i = 0; i < generating_set.size(); ++i) {
        for (std::size_t j = i + 1; j < generating_set.size(); ++j) {
            const auto c = commutator(generating_set[i], generating_set[j]);
            if (!c.compatible) {
                throw IncompatibleGeneratorsError(names[i], names[j], c.norm);
            }
        }
    }

    // Diagonalize a random real combination of the generators, then refine
    // per joint eigenspace with each generator in turn. The combination
    // separates most joint eigenspaces up front; the refinement pass makes
    // the result exact regardless.
    RngStream rng(kCombinationSeed);
    Matrix combo = Matrix::Zero(n, n);
    for (const Observable& g : generating_set) combo += Complex(rng.normal(), 0.0) * g.entries();
    combo = 0.5 * (combo + combo.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(combo);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailureError("context_from: eigendecomposition failed");
    }
    Matrix basis = solver.eigenvectors();
    std::vector<Block> blocks = split_blocks(solver.eigenvalues(), 0);
    for (const Observable& g : generating_set) blocks = refine_by(basis, g, blocks);

    // Order columns by the ascending joint spectra of the generators
    // (stable; refinement already sorted within blocks, this makes the
    // global order independent of the random combination).
    std::vector<std::vector<double>> diag_per_gen;
    for (const Observable& g : generating_set) diag_per_gen.push_back(diagonal_of(basis, g));
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        for (const auto& d : diag_per_gen) {
            const double da = d[static_cast<std::size_t>(a)];
            const double db = d[static_cast<std::size_t>(b)];
            if (std::abs(da - db) > tol::cluster) return da < db;
        }
        return false;
    });
    Matrix ordered(n, n);
    for (Eigen::Index k = 0; k < n; ++k) ordered.col(k) = basis.col(order[static_cast<std::size_t>(k)]);
    basis = std::move(ordered);
    fix_phases(basis);

    auto ctx = std::shared_ptr<MeasurementContext>(new MeasurementContext());
    ctx->basis_ = basis;
    for (std::size_t i = 0; i < generating_set.size(); ++i) {
        ctx->generators_.push_back(
            {names[i], generating_set[i], diagonal_of(basis, generating_set[i])});
    }

    // Complete degenerate joint eigenspaces: columns whose joint spectra
    // coincide get rank-one projectors onto all but the last of them.
    std::vector<Block> joint;
    {
        Eigen::Index start = 0;
        for (Eigen::Index k = 1; k <= n; ++k) {
            bool boundary = (k == n);
            if (!boundary) {
                for (const auto& g : ctx->generators_) {
                    if (std::abs(g.spectrum[static_cast<std::size_t>(k)] -
                                 g.spectrum[static_cast<std::size_t>(k - 1)]) > tol::cluster) {
                        boundary = true;
                        break;
                    }
                }
            }
            if (boundary) {
                joint.push_back({start, k - start});
                start = k;
            }
        }
    }
    for (const Block& b : joint) {
        for (Eigen::Index k = b.start; k < b.start + b.size - 1; ++k) {
            Matrix proj = basis.col(k) * basis.col(k).adjoint();
            proj = 0.5 * (proj + proj.adjoint());
            Observable p(std::move(proj));
            std::vector<double> spec(static_cast<std::size_t>(n), 0.0);
            spec[static_cast<std::size_t>(k)] = 1.0;
            ctx->generators_.push_back({"P" + std::to_string(k), std::move(p), std::move(spec)});
            ++ctx->completion_count_;
        }
    }

    // Maximality: every pair of columns must now be separated by some
    // generator; a failure here is a bug, not a user error.
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            bool separated = false;
            for (const auto& g : ctx->generators_) {
                if (std::abs(g.spectrum[static_cast<std::size_t>(i)] -
                             g.spectrum[static_cast<std::size_t>(j)]) > tol::cluster) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                throw NumericalFailureError("context_from: completion failed to separate columns " +
                                            std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }

    ctx->label_ = label.empty() ? default_label(ctx->generators_) : std::move(label);
    return ctx;
}

ContextPtr rotated_context(const Observable& a1, const Observable& a2, double alpha) {
    if (a1.dim() != a2.dim()) {
        throw DimensionMismatchError("rotated_context: dimensions differ");
    }
    Observable b(Matrix(std::cos(alpha) * a1.entries() + std::sin(alpha) * a2.entries()));
    std::ostringstream name;
    name << "B(" << alpha << ")";
    return context_from({std::move(b)}, {name.str()});
}

bool contains(const MeasurementContext& ctx, const Observable& a) {
    if (a.dim() != ctx.dim()) {
        throw DimensionMismatchError("contains: observable dimension differs from context");
    }
    Matrix d = ctx.basis().adjoint() * a.entries() * ctx.basis();
    d.diagonal().setZero();
    return d.norm() <= tol::diagonal;
}

Eigen::VectorXd diagonal_in_basis(const MeasurementContext& ctx, const Observable& a) {
    Eigen::VectorXd d(ctx.dim());
    for (Eigen::Index k = 0; k < ctx.dim(); ++k) {
        d(k) = (ctx.basis().col(k).adjoint() * a.entries() * ctx.basis().col(k))(0).real();
    }
    return d;
}

std::vector<SpectralPoint> spectrum_in_context(const MeasurementContext& ctx, const Observable& a) {
    if (!contains(ctx, a)) {
        throw NotInContextError("spectrum_in_context: observable is not in the context");
    }
    Eigen::VectorXd d = diagonal_in_basis(ctx, a);
    std::sort(d.begin(), d.end());
    auto local = cluster_values(d, tol::cluster);
    auto global = spectrum(a);
    bool consistent = local.size() == global.size();
    if (consistent) {
        for (std::size_t i = 0; i < local.size(); ++i) {
            if (std::abs(local[i].value - global[i].value) > tol::cluster ||
                local[i].multiplicity != global[i].multiplicity) {
                consistent = false;
                break;
            }
        }
    }
    if (!consistent) {
        throw NumericalFailureError(
            "spectrum_in_context: context spectrum disagrees with the algebra spectrum");
    }
    return local;
}

std::vector<Character> characters_of(const ContextPtr& ctx) {
    std::vector<Character> chars;
    chars.reserve(static_cast<std::size_t>(ctx->dim()));
    for (Eigen::Index k = 0; k < ctx->dim(); ++k) chars.push_back({ctx, k});
    return chars;
}

double evaluate(const Character& chi, const Observable& a) {
    if (!contains(*chi.context, a)) {
        throw NotInContextError("evaluate: observable is not in the character's context");
    }
    return (chi.context->basis().col(chi.index).adjoint() * a.entries() *
            chi.context->basis().col(chi.index))(0)
        .real();
}

}  // namespace oplab
