#include <cmath>

#include "scan_detail.hpp"
#include "upst/walk.hpp"

namespace upst {

TransferReport scan_min_times_serial(const EigenSystem& es, double horizon, double step,
                                     double tol) {
  detail::check_scan_arguments(es, horizon, step);
  if (es.n > 1 && detail::scalar_spectrum(es)) return detail::scalar_refusal(es.n);
  const int n = es.n;
  const long long points = detail::grid_points(horizon, step);
  TransferReport report = detail::empty_report(n, horizon, step);

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const detail::PairAmplitude amp(es, u, v);
      detail::PeakDetector detector;
      for (long long i = 0; i <= points; ++i) {
        const double t = static_cast<double>(i) * step;
        if (!detector.push(std::abs(amp.value(t)))) continue;
        const double center = static_cast<double>(i - 1) * step;
        const auto hit = detail::refine_peak(amp, center - step, center + step, tol);
        if (!hit || hit->time <= 0.5 * step || hit->time > horizon) continue;
        report.min_times[u * n + v] = hit->time;
        report.phases[u * n + v] = hit->phase;
        break;
      }
    }
  }
  return report;
}

}  // namespace upst
