#pragma once

namespace upst::tol {

// Hermiticity of float-only adjacency input.
inline constexpr double kHermitian = 1e-12;
// X^dagger X = I for eigenvector matrices.
inline constexpr double kUnitary = 1e-10;
// A X = X diag(lambda).
inline constexpr double kEigen = 1e-9;
// |U_vu| >= 1 - kPst counts as perfect state transfer.
inline constexpr double kPst = 1e-9;
// Agreement of transfer times (analytic vs scanned, spacing test).
inline constexpr double kTime = 1e-8;
// Phase matching (lambda_k - lambda_0) t = alpha mod 2 pi.
inline constexpr double kPhase = 1e-8;
// Target width of the peak refinement.
inline constexpr double kRefine = 1e-10;
// Vanishing non-first row/column sums of a canonical type-II matrix.
inline constexpr double kZeroSum = 1e-9;
// Two eigenvalues closer than this are treated as repeated.
inline constexpr double kDistinct = 1e-9;

inline constexpr int kDefaultScanSteps = 10000;

}  // namespace upst::tol
