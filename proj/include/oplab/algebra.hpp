#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "oplab/errors.hpp"
#include "oplab/rng.hpp"
#include "oplab/tolerances.hpp"

namespace oplab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Element R of the finite-dimensional involutive algebra, stored as a
/// complex square matrix. Immutable after construction.
class AlgebraElement {
public:
    explicit AlgebraElement(Matrix entries);

    static AlgebraElement unity(Eigen::Index dim);
    static AlgebraElement zero(Eigen::Index dim);

    Eigen::Index dim() const { return entries_.rows(); }
    const Matrix& entries() const { return entries_; }

    /// Conjugate transpose R*.
    AlgebraElement involute() const { return AlgebraElement(entries_.adjoint()); }

    double frobenius_norm() const { return entries_.norm(); }
    double hermiticity_defect() const { return (entries_ - entries_.adjoint()).norm(); }
    bool is_hermitian(double tolerance = tol::hermitian) const {
        return hermiticity_defect() <= tolerance;
    }

    /// Entries rounded onto a 1e-9 grid, then hashed; stable key under
    /// floating-point noise.
    std::uint64_t fingerprint() const;

    friend AlgebraElement operator+(const AlgebraElement& r, const AlgebraElement& s);
    friend AlgebraElement operator-(const AlgebraElement& r, const AlgebraElement& s);
    friend AlgebraElement operator*(const AlgebraElement& r, const AlgebraElement& s);
    friend AlgebraElement operator*(Complex c, const AlgebraElement& r);
    friend AlgebraElement operator*(const AlgebraElement& r, Complex c) { return c * r; }
    friend AlgebraElement operator*(double c, const AlgebraElement& r) {
        return Complex(c, 0.0) * r;
    }
    friend AlgebraElement operator-(const AlgebraElement& r) { return Complex(-1.0, 0.0) * r; }

private:
    Matrix entries_;
};

/// Hermitian element of the algebra (member of the real linear space of
/// observables). Construction enforces the hermiticity gate.
class Observable {
public:
    explicit Observable(AlgebraElement element);
    explicit Observable(Matrix entries) : Observable(AlgebraElement(std::move(entries))) {}

    const AlgebraElement& element() const { return element_; }
    const Matrix& entries() const { return element_.entries(); }
    Eigen::Index dim() const { return element_.dim(); }
    std::uint64_t fingerprint() const { return element_.fingerprint(); }

    operator const AlgebraElement&() const { return element_; }

private:
    AlgebraElement element_;
};

inline AlgebraElement make_unity(Eigen::Index dim) { return AlgebraElement::unity(dim); }

AlgebraElement involute(const AlgebraElement& r);

struct CommutatorResult {
    AlgebraElement element;  // AB - BA
    double norm;             // ||[A,B]||_F
    bool compatible;         // norm <= tol::commute
};

CommutatorResult commutator(const Observable& a, const Observable& b);
bool commutes(const Observable& a, const Observable& b);

/// One clustered spectral point with its multiplicity.
struct SpectralPoint {
    double value;
    int multiplicity;
};

/// Ascending real eigenvalues of a Hermitian element; eigenvalues within
/// tol::cluster of each other are merged into one point.
std::vector<SpectralPoint> spectrum(const Observable& a);

/// Convenience: the clustered spectral values only.
std::vector<double> spectrum_values(const Observable& a);

/// Raw ascending eigenvalues before clustering. Shared plumbing for the
/// spectral routines.
Eigen::VectorXd hermitian_eigenvalues(const Observable& a);

/// Cluster an ascending value list with the given gap threshold.
std::vector<SpectralPoint> cluster_values(const Eigen::VectorXd& ascending, double gap);

/// Largest singular value of R.
double operator_norm(const AlgebraElement& r);

struct HermitianParts {
    Observable real_part;  // A = (R + R*)/2
    Observable imag_part;  // B = (R - R*)/2i
};

/// Unique decomposition R = A + iB with A, B Hermitian.
HermitianParts split_hermitian(const AlgebraElement& r);

Observable hermitian_part(const AlgebraElement& r);

/// Principal square root of a Hermitian positive-semidefinite element.
/// Throws NumericalFailureError if an eigenvalue is negative beyond noise.
Observable principal_sqrt(const Observable& psd);

/// Random element with independent standard-normal real and imaginary parts.
AlgebraElement random_element(Eigen::Index dim, RngStream& rng);

/// Hermitian part of a random element.
Observable random_observable(Eigen::Index dim, RngStream& rng);

/// Haar-ish random unitary (QR of a random element), for conjugation tests.
Matrix random_unitary(Eigen::Index dim, RngStream& rng);

}  // namespace oplab
