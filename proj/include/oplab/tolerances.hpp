#pragma once

namespace oplab::tol {

// Numerical tolerances, two orders of magnitude above double-precision
// noise for dimensions up to 64.

inline constexpr double hermitian = 1e-10;   // ||R - R*||_F gate for observables
inline constexpr double cluster = 1e-8;      // eigenvalue clustering / spectral comparisons
inline constexpr double algebra = 1e-12;     // algebraic identity defects
inline constexpr double commute = 1e-10;     // ||[A,B]||_F compatibility gate
inline constexpr double diagonal = 1e-8;     // off-diagonal mass for context membership
inline constexpr double character = 1e-10;   // multiplicativity defects of characters
inline constexpr double gram_rank = 1e-10;   // GNS Gram rank-revealing threshold
inline constexpr double measure = 1e-10;     // probability normalization defects
inline constexpr double atom_floor = 1e-14;  // Born atoms below this mass are noise
inline constexpr double separation = 1e-9;   // witness gap for separating observables

}  // namespace oplab::tol
