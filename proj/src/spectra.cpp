#include "upst/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "upst/errors.hpp"
#include "upst/tolerances.hpp"

namespace upst {

EigenSystem EigenSystem::make(Eigen::MatrixXcd X, std::vector<double> lambdas,
                              std::optional<std::vector<Rational>> exact) {
  const auto n = static_cast<int>(lambdas.size());
  if (X.rows() != n || X.cols() != n) {
    std::ostringstream os;
    os << "eigensystem shape mismatch: X is " << X.rows() << "x" << X.cols() << ", " << n
       << " eigenvalues";
    throw ValidationError(os.str());
  }
  if (exact && static_cast<int>(exact->size()) != n)
    throw ValidationError("exact eigenvalue count does not match");
  const double defect = unitarity_defect(X);
  if (!(defect <= tol::kUnitary)) {
    std::ostringstream os;
    os << "eigenvector matrix is not unitary: max |X^H X - I| = " << defect;
    throw ValidationError(os.str());
  }
  return EigenSystem{n, std::move(X), std::move(lambdas), std::move(exact)};
}

Eigen::VectorXd EigenSystem::lambda_vector() const {
  return Eigen::Map<const Eigen::VectorXd>(lambdas.data(), n);
}

double EigenSystem::residual(const Eigen::MatrixXcd& adjacency) const {
  if (n == 0) return 0.0;
  Eigen::MatrixXcd scaled = X * lambda_vector().cast<std::complex<double>>().asDiagonal();
  return (adjacency * X - scaled).cwiseAbs().maxCoeff();
}

double EigenSystem::min_gap() const {
  std::vector<double> sorted = lambdas;
  std::sort(sorted.begin(), sorted.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < sorted.size(); ++k) gap = std::min(gap, sorted[k] - sorted[k - 1]);
  return gap;
}

Eigen::MatrixXcd fourier_matrix(int n) {
  if (n < 1) throw InputError("fourier_matrix: n must be positive");
  Eigen::MatrixXcd f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      // jk mod n keeps the angle small and exact in integers.
      const long long e = (static_cast<long long>(j) * k) % n;
      f(j, k) = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(e) / n);
    }
  return f;
}

std::vector<CycNum> circulant_eigenvalues_exact(const CirculantSpec& spec) {
  const int n = spec.order();
  const int field = std::lcm(spec.conductor(), n);
  const long long step = field / n;
  std::vector<CycNum> a;
  a.reserve(n);
  for (const auto& x : spec.coefficients()) a.push_back(x.lift(field));

  std::vector<CycNum> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    CycNum sum = CycNum::zero(field);
    for (int j = 0; j < n; ++j) {
      if (a[j].is_zero()) continue;
      sum = sum + a[j].times_zeta(step * ((static_cast<long long>(j) * k) % n));
    }
    out.push_back(std::move(sum));
  }
  return out;
}

EigenSystem circulant_eigensystem(const CirculantSpec& spec) {
  const int n = spec.order();
  std::vector<CycNum> exact = circulant_eigenvalues_exact(spec);
  std::vector<double> lambdas(n);
  bool all_rational = true;
  for (int k = 0; k < n; ++k) {
    if (exact[k] != exact[k].conj())
      throw InternalError("circulant eigenvalue " + std::to_string(k) + " is not real: " +
                          exact[k].to_string());
    const auto z = exact[k].embed();
    if (std::abs(z.imag()) > 1e-10)
      throw InternalError("circulant eigenvalue " + std::to_string(k) +
                          " has imaginary embedding " + std::to_string(z.imag()));
    lambdas[k] = z.real();
    all_rational = all_rational && exact[k].is_rational();
  }
  std::optional<std::vector<Rational>> rational;
  if (all_rational) {
    rational.emplace();
    for (const auto& x : exact) rational->push_back(x.rational_value());
  }
  return EigenSystem::make(fourier_matrix(n), std::move(lambdas), std::move(rational));
}

double unitarity_defect(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  return (m.adjoint() * m - Eigen::MatrixXcd::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
}

bool is_type_ii(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const double flat = 1.0 / std::sqrt(static_cast<double>(m.rows()));
  if ((m.cwiseAbs().array() - flat).abs().maxCoeff() > tol) return false;
  return unitarity_defect(m) <= tol;
}

CanonicalForm canonicalize(const Eigen::MatrixXcd& z) {
  if (!is_type_ii(z, tol::kUnitary))
    throw ValidationError("canonicalize: input is not a flat unitary matrix");
  const auto n = z.rows();
  const double root_n = std::sqrt(static_cast<double>(n));

  Eigen::VectorXcd d(n);
  for (Eigen::Index k = 0; k < n; ++k) d(k) = 1.0 / (root_n * z(0, k));
  Eigen::MatrixXcd scaled = z * d.asDiagonal();

  Eigen::VectorXcd s(n);
  for (Eigen::Index j = 0; j < n; ++j) s(j) = 1.0 / (root_n * scaled(j, 0));
  Eigen::MatrixXcd x = s.asDiagonal() * scaled;

  // Remove the rounding left in the first row and column.
  const std::complex<double> flat(1.0 / root_n, 0.0);
  x.row(0).setConstant(flat);
  x.col(0).setConstant(flat);
  return {std::move(x), std::move(d), std::move(s)};
}

bool zero_sum_check(const Eigen::MatrixXcd& x) {
  for (Eigen::Index j = 1; j < x.rows(); ++j)
    if (std::abs(x.row(j).sum()) > tol::kZeroSum) return false;
  for (Eigen::Index k = 1; k < x.cols(); ++k)
    if (std::abs(x.col(k).sum()) > tol::kZeroSum) return false;
  return true;
}

std::optional<std::pair<long long, long long>> rational_approximation(double x, double tol,
                                                                      long long max_denominator) {
  if (!std::isfinite(x) || std::abs(x) > 1e15) return std::nullopt;
  const double bound = tol * std::max(1.0, std::abs(x));
  // Convergents h/k of the continued fraction of x.
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  long long k_prev = 0, k = 1;
  double rest = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= bound) return {{h, k}};
    if (rest < 1e-300) break;
    const double inv = 1.0 / rest;
    const double a_real = std::floor(inv);
    if (a_real > 4e18) break;
    const auto a = static_cast<long long>(a_real);
    rest = inv - a_real;
    __int128 h_next = static_cast<__int128>(a) * h + h_prev;
    __int128 k_next = static_cast<__int128>(a) * k + k_prev;
    if (k_next > max_denominator || h_next > std::numeric_limits<long long>::max() ||
        h_next < std::numeric_limits<long long>::min())
      break;
    h_prev = h;
    k_prev = k;
    h = static_cast<long long>(h_next);
    k = static_cast<long long>(k_next);
  }
  return std::nullopt;
}

std::optional<EigenvalueForm> recognize_eigenvalue_form(const std::vector<double>& lambdas, int n,
                                                        double tol, long long max_denominator) {
  if (n < 1 || static_cast<int>(lambdas.size()) != n) return std::nullopt;

  EigenvalueForm form;
  std::vector<long long> m(n, 0);
  if (n == 1) {
    form.beta = 1.0;
  } else {
    const double delta1 = lambdas[1] - lambdas[0];
    if (std::abs(delta1) <= tol) return std::nullopt;

    // delta_k / delta_1 = num_k / den_k
    std::vector<long long> num(n), den(n);
    long long common = 1;
    for (int k = 0; k < n; ++k) {
      auto r = rational_approximation((lambdas[k] - lambdas[0]) / delta1, tol, max_denominator);
      if (!r) return std::nullopt;
      num[k] = r->first;
      den[k] = r->second;
      const __int128 next = static_cast<__int128>(common / std::gcd(common, den[k])) * den[k];
      if (next > (1LL << 62)) return std::nullopt;
      common = static_cast<long long>(next);
    }
    long long g = 0;
    std::vector<__int128> scaled(n);
    for (int k = 0; k < n; ++k) {
      scaled[k] = static_cast<__int128>(num[k]) * (common / den[k]);
      if (scaled[k] > (static_cast<__int128>(1) << 62) || scaled[k] < -(static_cast<__int128>(1) << 62))
        return std::nullopt;
      g = std::gcd(g, static_cast<long long>(scaled[k]));
    }
    if (g == 0) return std::nullopt;
    form.beta = std::abs(delta1) * static_cast<double>(g) / static_cast<double>(common);
    const long long sign = delta1 > 0 ? 1 : -1;
    for (int k = 0; k < n; ++k) m[k] = sign * static_cast<long long>(scaled[k] / g);

    const long long q = ((m[1] % n) + n) % n;
    if (std::gcd(q, static_cast<long long>(n)) != 1) return std::nullopt;
    for (int k = 0; k < n; ++k) {
      const long long residue = ((m[k] - q * k) % n + n) % n;
      if (residue != 0) return std::nullopt;
    }
    form.q = static_cast<int>(q == 0 ? 1 : q);
  }

  // alpha in [0, beta n)
  const double period = form.beta * n;
  const auto c0 = static_cast<long long>(std::floor(lambdas[0] / period + tol));
  form.alpha = lambdas[0] - period * static_cast<double>(c0);
  if (std::abs(form.alpha) <= tol * std::max(1.0, std::abs(lambdas[0]))) form.alpha = 0.0;
  form.c.resize(n);
  for (int k = 0; k < n; ++k) form.c[k] = c0 + (m[k] - static_cast<long long>(form.q) * k) / n;

  for (int k = 0; k < n; ++k) {
    const double rebuilt =
        form.alpha + form.beta * static_cast<double>(form.q * k + form.c[k] * n);
    if (std::abs(rebuilt - lambdas[k]) > tol * std::max(1.0, std::abs(lambdas[k])))
      return std::nullopt;
  }
  return form;
}

}  // namespace upst
