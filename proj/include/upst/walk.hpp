#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "upst/graph.hpp"
#include "upst/spectra.hpp"
#include "upst/tolerances.hpp"

namespace upst {

enum class FailureReason {
  none,
  scalar_spectrum,       // one eigenvalue: every time is a return time
  disconnected,
  repeated_eigenvalues,
  not_flat,              // diagonalizer is not type-II
  no_analytic_times,     // some l has no t_l with (lambda_k - lambda_0) t_l = alpha_lk mod 2 pi
  pst_not_confirmed,     // an analytic t_l did not give |U_l0| = 1 numerically
  missing_hits,          // the scan found no transfer for some pair
  analytic_scan_mismatch,
};

std::string_view to_string(FailureReason reason);

/// Minimum transfer times t_{u,v} (first t > 0 with |U(t)_{v,u}| = 1) and the
/// phases U(t_{u,v})_{v,u}, plus the analytic times and certification verdicts.
struct TransferReport {
  int n = 0;
  std::vector<std::optional<double>> min_times;  // row-major, index u * n + v
  std::vector<std::complex<double>> phases;      // same layout
  std::vector<double> analytic_times;            // t_l, l = 0..n-1; t_0 is the return time
  std::optional<bool> literal_phase_equality;
  bool upst = false;
  std::optional<bool> circulant_timing;
  std::optional<bool> dense;
  std::vector<int> relabeling;  // vertex order used by the spacing test
  double horizon = 0.0;
  double step = 0.0;
  FailureReason reason = FailureReason::none;
  std::string detail;

  std::optional<double> min_time(int u, int v) const { return min_times[u * n + v]; }
  std::complex<double> phase(int u, int v) const { return phases[u * n + v]; }
  /// Every pair has a transfer time.
  bool complete() const;
};

/// U(t) = X diag(exp(-i lambda_k t)) X^dagger.
Eigen::MatrixXcd unitary_at(const EigenSystem& es, double t);

/// U_{v,u} when |U_{v,u}| >= 1 - tol.
std::optional<std::complex<double>> pst_at(const Eigen::MatrixXcd& unitary, int u, int v,
                                           double tol = tol::kPst);

struct AnalyticTimes {
  std::vector<double> times;  // smallest positive t_l per l
  bool literal = false;       // (lambda_k - lambda_0) t = alpha_lk also holds as real numbers
};

/// Solves (lambda_k - lambda_0) t_l = alpha_{l,k} (mod 2 pi) for a canonical X.
/// Empty if some l admits no solution. Throws SpectrumError if lambda_1 = lambda_0
/// and InputError if X is not canonical.
std::optional<AnalyticTimes> analytic_pst_times(const EigenSystem& canonical,
                                                long long max_candidates = 1000000);

/// Grid scan of |U(t)_{v,u}| on (0, horizon] with spacing `step`; local maxima
/// are refined (golden-section search, then bisection on the slope) and accepted at |U_vu| >= 1 - tol.
/// OpenMP-parallel over vertex pairs.
TransferReport scan_min_times(const EigenSystem& es, double horizon, double step,
                              double tol = tol::kPst);

/// Reference implementation of scan_min_times: serial, evaluates every grid
/// point directly. Kept for testing and benchmarking.
TransferReport scan_min_times_serial(const EigenSystem& es, double horizon, double step,
                                     double tol = tol::kPst);

/// All transfer times u -> v in (0, horizon], ascending.
std::vector<double> scan_hits(const EigenSystem& es, int u, int v, double horizon, double step,
                              double tol = tol::kPst);

struct VerifyOptions {
  int scan_steps = tol::kDefaultScanSteps;  // grid points per return time
  double horizon_factor = 1.25;
  bool parallel = true;
};

/// Full certification: canonical form, analytic times, numerical confirmation
/// at those times, a time scan, and the circulant timing test.
/// Throws InputError if es does not diagonalize the graph.
TransferReport verify_upst(const HermitianGraph& graph, const EigenSystem& es,
                           const VerifyOptions& options = {});

struct SpacingResult {
  bool circulant = false;
  std::vector<int> order;         // relabeling: order[k] is the k-th vertex by t_{0,.}
  std::vector<double> step_times; // t_{order[k], order[k+1]}, k in Z/n
  std::vector<double> row_gaps;   // t_{0,order[k+1]} - t_{0,order[k]}, with t_{0,order[0]} = 0
  double max_deviation = 0.0;
  std::string detail;
};

/// Equal-spacing test t_{k,k+1} = t_{0,1} after relabeling vertices by t_{0,.}.
/// Throws InputError unless the report is a complete UPST report.
SpacingResult spacing_test(const TransferReport& report);

struct MonomialDecomposition {
  std::vector<int> perm;  // column u carries its unit entry in row perm[u]
  std::vector<std::complex<double>> phases;
};

/// Permutation and phases when every row and column has one entry of magnitude
/// >= 1 - tol and all others <= tol.
std::optional<MonomialDecomposition> monomial_check(const Eigen::MatrixXcd& unitary, double tol);

struct DensenessResult {
  bool dense = true;
  std::vector<int> zero_indices;
};

/// Exact zero test of a_j, j = 1..n-1.
DensenessResult denseness_check(const CirculantSpec& spec);

}  // namespace upst
