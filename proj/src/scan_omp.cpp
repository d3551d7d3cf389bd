#include <cmath>
#include <complex>
#include <vector>

#include "scan_detail.hpp"
#include "upst/walk.hpp"

namespace upst {

namespace {

// Phasors are advanced by one multiplication per grid point and recomputed
// from scratch this often to bound the accumulated rounding.
constexpr long long kReseed = 1024;

}  // namespace

TransferReport scan_min_times(const EigenSystem& es, double horizon, double step, double tol) {
  detail::check_scan_arguments(es, horizon, step);
  if (es.n > 1 && detail::scalar_spectrum(es)) return detail::scalar_refusal(es.n);
  const int n = es.n;
  const long long points = detail::grid_points(horizon, step);
  TransferReport report = detail::empty_report(n, horizon, step);

  std::vector<std::complex<double>> rotor(n);
  for (int k = 0; k < n; ++k) rotor[k] = std::polar(1.0, -es.lambdas[k] * step);
  const long long pairs = static_cast<long long>(n) * n;

#pragma omp parallel for schedule(dynamic)
  for (long long pair = 0; pair < pairs; ++pair) {
    const int u = static_cast<int>(pair / n);
    const int v = static_cast<int>(pair % n);
    const detail::PairAmplitude amp(es, u, v);
    std::vector<std::complex<double>> phasor(n);
    detail::PeakDetector detector;
    for (long long i = 0; i <= points; ++i) {
      if (i % kReseed == 0) {
        const double t = static_cast<double>(i) * step;
        for (int k = 0; k < n; ++k) phasor[k] = amp.weights[k] * std::polar(1.0, -es.lambdas[k] * t);
      } else {
        for (int k = 0; k < n; ++k) phasor[k] *= rotor[k];
      }
      std::complex<double> sum = 0.0;
      for (int k = 0; k < n; ++k) sum += phasor[k];
      if (!detector.push(std::abs(sum))) continue;
      const double center = static_cast<double>(i - 1) * step;
      const auto hit = detail::refine_peak(amp, center - step, center + step, tol);
      if (!hit || hit->time <= 0.5 * step || hit->time > horizon) continue;
      report.min_times[pair] = hit->time;
      report.phases[pair] = hit->phase;
      break;
    }
  }
  return report;
}

}  // namespace upst
