#include "upst/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "scan_detail.hpp"
#include "upst/errors.hpp"

namespace upst {

namespace detail {

PairAmplitude::PairAmplitude(const EigenSystem& es, int u, int v)
    : weights(es.n), lambdas(es.lambdas) {
  for (int k = 0; k < es.n; ++k) weights[k] = es.X(v, k) * std::conj(es.X(u, k));
}

std::complex<double> PairAmplitude::value(double t) const {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) sum += weights[k] * std::polar(1.0, -lambdas[k] * t);
  return sum;
}

double PairAmplitude::slope(double t) const {
  std::complex<double> s = 0.0;
  std::complex<double> ds = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const std::complex<double> term = weights[k] * std::polar(1.0, -lambdas[k] * t);
    s += term;
    ds += std::complex<double>(0.0, -lambdas[k]) * term;
  }
  return (std::conj(s) * ds).real();
}

std::optional<Hit> refine_peak(const PairAmplitude& amp, double lo, double hi, double tol) {
  auto height = [&](double t) { return std::norm(amp.value(t)); };

  // Golden-section narrowing, then bisection on the slope.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = height(c), fd = height(d);
  for (int iter = 0; iter < 20; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = height(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = height(d);
    }
  }

  double left = a, right = b;
  if (!(amp.slope(left) > 0.0 && amp.slope(right) < 0.0)) {
    left = lo;
    right = hi;
  }
  double t = 0.5 * (a + b);
  if (amp.slope(left) > 0.0 && amp.slope(right) < 0.0) {
    for (int iter = 0; iter < 100 && right - left > 1e-15 * std::max(1.0, right); ++iter) {
      const double mid = 0.5 * (left + right);
      (amp.slope(mid) > 0.0 ? left : right) = mid;
    }
    t = 0.5 * (left + right);
  }

  const std::complex<double> value = amp.value(t);
  if (std::abs(value) < 1.0 - tol) return std::nullopt;
  return Hit{t, value};
}

long long grid_points(double horizon, double step) {
  return static_cast<long long>(std::ceil(horizon / step));
}

void check_scan_arguments(const EigenSystem& es, double horizon, double step) {
  if (es.n < 1) throw InputError("scan: empty eigensystem");
  if (!(horizon > 0.0) || !(step > 0.0) || !std::isfinite(horizon) || !std::isfinite(step))
    throw InputError("scan: horizon and step must be positive");
  if (horizon / step > 1e9) throw InputError("scan: grid too fine (more than 1e9 points)");
}

TransferReport scalar_refusal(int n) {
  TransferReport report;
  report.n = n;
  report.min_times.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  report.phases.assign(static_cast<std::size_t>(n) * n, 0.0);
  report.reason = FailureReason::scalar_spectrum;
  report.detail = "all eigenvalues coincide: U(t) is diagonal and every t is a return time";
  return report;
}

TransferReport empty_report(int n, double horizon, double step) {
  TransferReport report;
  report.n = n;
  report.min_times.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  report.phases.assign(static_cast<std::size_t>(n) * n, 0.0);
  report.horizon = horizon;
  report.step = step;
  return report;
}

bool scalar_spectrum(const EigenSystem& es) {
  const auto [lo, hi] = std::minmax_element(es.lambdas.begin(), es.lambdas.end());
  return *hi - *lo <= tol::kDistinct;
}

}  // namespace detail

namespace {

double wrap_phase(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(x, two_pi);
  return r;
}

}  // namespace

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::none: return "none";
    case FailureReason::scalar_spectrum: return "scalar_spectrum";
    case FailureReason::disconnected: return "disconnected";
    case FailureReason::repeated_eigenvalues: return "repeated_eigenvalues";
    case FailureReason::not_flat: return "not_flat";
    case FailureReason::no_analytic_times: return "no_analytic_times";
    case FailureReason::pst_not_confirmed: return "pst_not_confirmed";
    case FailureReason::missing_hits: return "missing_hits";
    case FailureReason::analytic_scan_mismatch: return "analytic_scan_mismatch";
  }
  return "unknown";
}

bool TransferReport::complete() const {
  return n > 0 && std::all_of(min_times.begin(), min_times.end(),
                              [](const auto& t) { return t.has_value(); });
}

Eigen::MatrixXcd unitary_at(const EigenSystem& es, double t) {
  Eigen::VectorXcd phases(es.n);
  for (int k = 0; k < es.n; ++k) phases(k) = std::polar(1.0, -es.lambdas[k] * t);
  return es.X * phases.asDiagonal() * es.X.adjoint();
}

std::optional<std::complex<double>> pst_at(const Eigen::MatrixXcd& unitary, int u, int v,
                                           double tol) {
  const std::complex<double> entry = unitary(v, u);
  if (std::abs(entry) >= 1.0 - tol) return entry;
  return std::nullopt;
}

std::optional<AnalyticTimes> analytic_pst_times(const EigenSystem& canonical,
                                                long long max_candidates) {
  const int n = canonical.n;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double flat = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    if (std::abs(canonical.X(0, j) - flat) > tol::kUnitary ||
        std::abs(canonical.X(j, 0) - flat) > tol::kUnitary)
      throw InputError("analytic_pst_times: X is not in canonical form");
  }
  if (n == 1) return std::nullopt;

  std::vector<double> delta(n);
  for (int k = 0; k < n; ++k) delta[k] = canonical.lambdas[k] - canonical.lambdas[0];
  if (std::abs(delta[1]) <= tol::kDistinct)
    throw SpectrumError("analytic_pst_times: lambda_1 = lambda_0");

  // alpha_{l,k} in [0, 2 pi)
  auto alpha = [&](int l, int k) {
    double a = std::arg(canonical.X(l, k));
    return a < 0.0 ? a + two_pi : a;
  };
  auto consistent = [&](int l, double t) {
    for (int k = 1; k < n; ++k)
      if (std::abs(wrap_phase(delta[k] * t - alpha(l, k))) > tol::kPhase) return false;
    return true;
  };

  const double spacing = two_pi / std::abs(delta[1]);
  AnalyticTimes out;
  out.times.assign(n, 0.0);
  out.literal = true;
  double period = 0.0;
  for (int l = 0; l < n; ++l) {
    double base = std::fmod(alpha(l, 1) / delta[1], spacing);
    if (base < 0.0) base += spacing;
    if (base <= 1e-12 * spacing) base += spacing;

    const long long limit =
        l == 0 ? max_candidates : static_cast<long long>(std::ceil(period / spacing)) + 2;
    std::optional<double> found;
    for (long long m = 0; m < limit; ++m) {
      const double t = base + static_cast<double>(m) * spacing;
      if (consistent(l, t)) {
        found = t;
        break;
      }
    }
    if (!found) return std::nullopt;
    out.times[l] = *found;
    if (l == 0) period = *found;

    const double literal_t = alpha(l, 1) / delta[1];
    for (int k = 1; k < n && out.literal; ++k)
      if (std::abs(delta[k] * literal_t - alpha(l, k)) > tol::kPhase) out.literal = false;
  }
  return out;
}

std::vector<double> scan_hits(const EigenSystem& es, int u, int v, double horizon, double step,
                              double tol) {
  detail::check_scan_arguments(es, horizon, step);
  if (u < 0 || v < 0 || u >= es.n || v >= es.n) throw InputError("scan_hits: vertex out of range");
  const detail::PairAmplitude amp(es, u, v);
  const long long points = detail::grid_points(horizon, step);
  detail::PeakDetector detector;
  std::vector<double> hits;
  for (long long i = 0; i <= points; ++i) {
    const double t = static_cast<double>(i) * step;
    if (!detector.push(std::abs(amp.value(t)))) continue;
    const double center = static_cast<double>(i - 1) * step;
    if (auto hit = detail::refine_peak(amp, center - step, center + step, tol)) {
      if (hit->time <= 0.5 * step || hit->time > horizon) continue;
      if (!hits.empty() && hit->time - hits.back() < 0.5 * step) continue;
      hits.push_back(hit->time);
    }
  }
  return hits;
}

TransferReport verify_upst(const HermitianGraph& graph, const EigenSystem& es,
                           const VerifyOptions& options) {
  const int n = graph.order();
  if (es.n != n) throw InputError("verify_upst: eigensystem order does not match graph");
  double scale = 1.0;
  for (double l : es.lambdas) scale = std::max(scale, std::abs(l));
  const double residual = es.residual(graph.adjacency());
  if (residual > tol::kEigen * scale) {
    std::ostringstream os;
    os << "verify_upst: eigensystem does not diagonalize the graph (residual " << residual << ")";
    throw InputError(os.str());
  }

  TransferReport report;
  report.n = n;
  report.min_times.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  report.phases.assign(static_cast<std::size_t>(n) * n, 0.0);
  if (const auto& spec = graph.circulant()) report.dense = denseness_check(*spec).dense;

  auto fail = [&](FailureReason reason, std::string detail) {
    report.upst = false;
    report.reason = reason;
    report.detail = std::move(detail);
    return report;
  };

  if (n == 1) return fail(FailureReason::scalar_spectrum, "single vertex");
  if (detail::scalar_spectrum(es)) {
    TransferReport refused = detail::scalar_refusal(n);
    refused.dense = report.dense;
    return refused;
  }
  if (!is_connected(graph)) return fail(FailureReason::disconnected, "graph is disconnected");
  if (es.min_gap() <= tol::kDistinct)
    return fail(FailureReason::repeated_eigenvalues, "eigenvalues are not distinct");
  if (!is_type_ii(es.X, tol::kUnitary))
    return fail(FailureReason::not_flat, "diagonalizer not flat");

  const CanonicalForm canonical = canonicalize(es.X);
  const EigenSystem switched = EigenSystem::make(canonical.X, es.lambdas);
  const auto analytic = analytic_pst_times(switched);
  if (!analytic)
    return fail(FailureReason::no_analytic_times,
                "no consistent t_l with (lambda_k - lambda_0) t_l = alpha_lk mod 2 pi");
  report.analytic_times = analytic->times;
  report.literal_phase_equality = analytic->literal;

  for (int l = 0; l < n; ++l) {
    if (!pst_at(unitary_at(es, analytic->times[l]), 0, l)) {
      std::ostringstream os;
      os << "analytic time t_" << l << " = " << analytic->times[l]
         << " does not give perfect state transfer 0 -> " << l;
      return fail(FailureReason::pst_not_confirmed, os.str());
    }
  }

  const double period = analytic->times[0];
  const double horizon = options.horizon_factor * period;
  const double step = period / std::max(options.scan_steps, 10);
  TransferReport scanned = options.parallel ? scan_min_times(es, horizon, step)
                                            : scan_min_times_serial(es, horizon, step);
  report.min_times = std::move(scanned.min_times);
  report.phases = std::move(scanned.phases);
  report.horizon = scanned.horizon;
  report.step = scanned.step;

  if (!report.complete()) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (!report.min_time(u, v)) {
          std::ostringstream os;
          os << "no transfer " << u << " -> " << v << " within horizon " << horizon;
          return fail(FailureReason::missing_hits, os.str());
        }
  }
  for (int l = 0; l < n; ++l) {
    const double gap = std::abs(*report.min_time(0, l) - analytic->times[l]);
    if (gap > tol::kTime) {
      std::ostringstream os;
      os << "t_" << l << ": analytic " << analytic->times[l] << " vs scanned "
         << *report.min_time(0, l);
      return fail(FailureReason::analytic_scan_mismatch, os.str());
    }
  }

  report.upst = true;
  report.reason = FailureReason::none;
  const SpacingResult spacing = spacing_test(report);
  report.circulant_timing = spacing.circulant;
  report.relabeling = spacing.order;
  return report;
}

SpacingResult spacing_test(const TransferReport& report) {
  if (!report.upst || !report.complete())
    throw InputError("spacing_test needs a complete UPST report");
  const int n = report.n;
  SpacingResult out;
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), 0);
  std::sort(out.order.begin() + 1, out.order.end(), [&](int x, int y) {
    return *report.min_time(0, x) < *report.min_time(0, y);
  });

  for (int k = 0; k + 1 < n; ++k) {
    const double here = k == 0 ? 0.0 : *report.min_time(0, out.order[k]);
    out.row_gaps.push_back(*report.min_time(0, out.order[k + 1]) - here);
  }
  for (int k = 0; k < n; ++k)
    out.step_times.push_back(*report.min_time(out.order[k], out.order[(k + 1) % n]));

  for (int k = 2; k < n; ++k) {
    if (*report.min_time(0, out.order[k]) - *report.min_time(0, out.order[k - 1]) <= 1e-10) {
      out.circulant = false;
      out.detail = "tied first-passage times from vertex 0";
      return out;
    }
  }
  const double reference = out.step_times.front();
  for (double t : out.step_times) out.max_deviation = std::max(out.max_deviation, std::abs(t - reference));
  out.circulant = out.max_deviation <= tol::kTime;
  return out;
}

std::optional<MonomialDecomposition> monomial_check(const Eigen::MatrixXcd& unitary, double tol) {
  const auto n = static_cast<int>(unitary.rows());
  if (unitary.cols() != n) return std::nullopt;
  MonomialDecomposition out;
  out.perm.assign(n, -1);
  out.phases.assign(n, 0.0);
  std::vector<char> row_used(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const double mag = std::abs(unitary(v, u));
      if (mag >= 1.0 - tol) {
        if (out.perm[u] != -1 || row_used[v]) return std::nullopt;
        out.perm[u] = v;
        out.phases[u] = unitary(v, u);
        row_used[v] = 1;
      } else if (mag > tol) {
        return std::nullopt;
      }
    }
    if (out.perm[u] == -1) return std::nullopt;
  }
  return out;
}

DensenessResult denseness_check(const CirculantSpec& spec) {
  DensenessResult out;
  for (int j = 1; j < spec.order(); ++j) {
    if (spec[j].is_zero()) {
      out.dense = false;
      out.zero_indices.push_back(j);
    }
  }
  return out;
}

}  // namespace upst
