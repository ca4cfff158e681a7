#include "oplab/algebra.hpp"

#include <cmath>

namespace oplab {

namespace {

void require_same_dim(const AlgebraElement& r, const AlgebraElement& s, const char* op) {
    if (r.dim() != s.dim()) {
        throw DimensionMismatchError(std::string(op) + ": dimensions " + std::to_string(r.dim()) +
                                     " and " + std::to_string(s.dim()) + " differ");
    }
}

std::uint64_t mix_into(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::int64_t grid(double x) {
    // llround maps -0.0 and 0.0 to the same key.
    return std::llround(x * 1e9);
}

}  // namespace

AlgebraElement::AlgebraElement(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
        throw InvalidDimensionError("algebra element must be a square matrix of side >= 1, got " +
                                    std::to_string(entries_.rows()) + "x" +
                                    std::to_string(entries_.cols()));
    }
}

AlgebraElement AlgebraElement::unity(Eigen::Index dim) {
    if (dim < 1) throw InvalidDimensionError("unity requires dim >= 1");
    return AlgebraElement(Matrix::Identity(dim, dim));
}

AlgebraElement AlgebraElement::zero(Eigen::Index dim) {
    if (dim < 1) throw InvalidDimensionError("zero requires dim >= 1");
    return AlgebraElement(Matrix::Zero(dim, dim));
}

std::uint64_t AlgebraElement::fingerprint() const {
    std::uint64_t h = 0x243f6a8885a308d3ULL ^ static_cast<std::uint64_t>(dim());
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
        for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
            h = mix_into(h, static_cast<std::uint64_t>(grid(entries_(i, j).real())));
            h = mix_into(h, static_cast<std::uint64_t>(grid(entries_(i, j).imag())));
        }
    }
    return h;
}

AlgebraElement operator+(const AlgebraElement& r, const AlgebraElement& s) {
    require_same_dim(r, s, "add");
    return AlgebraElement(r.entries_ + s.entries_);
}

AlgebraElement operator-(const AlgebraElement& r, const AlgebraElement& s) {
    require_same_dim(r, s, "sub");
    return AlgebraElement(r.entries_ - s.entries_);
}

AlgebraElement operator*(const AlgebraElement& r, const AlgebraElement& s) {
    require_same_dim(r, s, "mul");
    return AlgebraElement(r.entries_ * s.entries_);
}

AlgebraElement operator*(Complex c, const AlgebraElement& r) {
    return AlgebraElement(c * r.entries());
}

AlgebraElement involute(const AlgebraElement& r) { return r.involute(); }

Observable::Observable(AlgebraElement element) : element_(std::move(element)) {
    const double defect = element_.hermiticity_defect();
    if (defect > tol::hermitian) throw NonHermitianError(defect, tol::hermitian);
}

CommutatorResult commutator(const Observable& a, const Observable& b) {
    require_same_dim(a.element(), b.element(), "commutator");
    AlgebraElement c(a.entries() * b.entries() - b.entries() * a.entries());
    const double norm = c.frobenius_norm();
    return CommutatorResult{std::move(c), norm, norm <= tol::commute};
}

bool commutes(const Observable& a, const Observable& b) { return commutator(a, b).compatible; }

Eigen::VectorXd hermitian_eigenvalues(const Observable& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.entries(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailureError("hermitian eigendecomposition failed");
    }
    return solver.eigenvalues();
}

std::vector<SpectralPoint> cluster_values(const Eigen::VectorXd& ascending, double gap) {
    std::vector<SpectralPoint> points;
    Eigen::Index i = 0;
    while (i < ascending.size()) {
        Eigen::Index j = i + 1;
        double sum = ascending(i);
        while (j < ascending.size() && ascending(j) - ascending(j - 1) <= gap) {
            sum += ascending(j);
            ++j;
        }
        points.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return points;
}

std::vector<SpectralPoint> spectrum(const Observable& a) {
    return cluster_values(hermitian_eigenvalues(a), tol::cluster);
}

std::vector<double> spectrum_values(const Observable& a) {
    std::vector<double> values;
    for (const auto& p : spectrum(a)) values.push_back(p.value);
    return values;
}

double operator_norm(const AlgebraElement& r) {
    // sqrt of the top eigenvalue of R*R; clamp away eigensolver noise.
    Eigen::SelfAdjointEigenSolver<Matrix> solver(r.entries().adjoint() * r.entries(),
                                                 Eigen::EigenvaluesOnly);
    const double top = solver.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, top));
}

HermitianParts split_hermitian(const AlgebraElement& r) {
    const Matrix& m = r.entries();
    Matrix a = 0.5 * (m + m.adjoint());
    Matrix b = (m - m.adjoint()) / Complex(0.0, 2.0);
    return HermitianParts{Observable(std::move(a)), Observable(std::move(b))};
}

Observable hermitian_part(const AlgebraElement& r) {
    return Observable(Matrix(0.5 * (r.entries() + r.entries().adjoint())));
}

Observable principal_sqrt(const Observable& psd) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(psd.entries());
    Eigen::VectorXd w = solver.eigenvalues();
    const double scale = std::max(1.0, std::abs(w.maxCoeff()));
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) < -tol::hermitian * scale) {
            throw NumericalFailureError("principal_sqrt: negative eigenvalue " +
                                        std::to_string(w(i)));
        }
        w(i) = std::sqrt(std::max(0.0, w(i)));
    }
    Matrix root = solver.eigenvectors() * w.asDiagonal() * solver.eigenvectors().adjoint();
    root = 0.5 * (root + root.adjoint());
    return Observable(std::move(root));
}

AlgebraElement random_element(Eigen::Index dim, RngStream& rng) {
    Matrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) m(i, j) = Complex(rng.normal(), rng.normal());
    return AlgebraElement(std::move(m));
}

Observable random_observable(Eigen::Index dim, RngStream& rng) {
    return hermitian_part(random_element(dim, rng));
}

Matrix random_unitary(Eigen::Index dim, RngStream& rng) {
    Eigen::HouseholderQR<Matrix> qr(random_element(dim, rng).entries());
    Matrix q = qr.householderQ();
    // Fix the diagonal phases of R so Q is drawn from a well-defined set.
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        const double mag = std::abs(d);
        q.col(i) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    }
    return q;
}

}  // namespace oplab
