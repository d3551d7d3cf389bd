#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "upst/spectra.hpp"
#include "upst/walk.hpp"

namespace upst::detail {

// U(t)_{v,u} = sum_k w_k exp(-i lambda_k t), w_k = X_vk conj(X_uk).
struct PairAmplitude {
  std::vector<std::complex<double>> weights;
  std::vector<double> lambdas;

  PairAmplitude(const EigenSystem& es, int u, int v);

  std::complex<double> value(double t) const;
  // Re(conj(S) S'), half the derivative of |S|^2.
  double slope(double t) const;
};

struct Hit {
  double time;
  std::complex<double> phase;
};

// Below this a grid maximum is not worth refining.
inline constexpr double kCandidateLevel = 0.75;

// Refines a maximum of |S| bracketed by [lo, hi]; returns the hit if the peak
// reaches 1 - tol.
std::optional<Hit> refine_peak(const PairAmplitude& amp, double lo, double hi, double tol);

// Streaming local-maximum detector over samples f_0, f_1, ...
class PeakDetector {
 public:
  // Feed sample i; returns true when sample i-1 is a candidate local maximum.
  bool push(double f) {
    const bool peak = count_ >= 2 && prev_ >= prev2_ && prev_ >= f && prev_ >= kCandidateLevel;
    prev2_ = prev_;
    prev_ = f;
    ++count_;
    return peak;
  }

 private:
  long long count_ = 0;
  double prev2_ = 0.0;
  double prev_ = 0.0;
};

long long grid_points(double horizon, double step);

void check_scan_arguments(const EigenSystem& es, double horizon, double step);

bool scalar_spectrum(const EigenSystem& es);

// Report for a spectrum with a single eigenvalue: no transfer times at all.
TransferReport scalar_refusal(int n);

// Empty report with the grid recorded.
TransferReport empty_report(int n, double horizon, double step);

}  // namespace upst::detail
