#include "upst/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "upst/errors.hpp"

namespace upst {

namespace {

using QPoly = std::vector<Rational>;

long long mod_n(long long k, int n) {
  long long r = k % n;
  return r < 0 ? r + n : r;
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Schoolbook division of a by b (b nonzero, trimmed). Returns the quotient;
// a is left holding the remainder.
QPoly divide(QPoly& a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    Rational c = a[i] / lead;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  return q;
}

QPoly multiply(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly subtract(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly to_qpoly(const std::vector<Integer>& p) {
  QPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

void require_conductor(int n) {
  if (n < 1) throw InputError("cyclotomic conductor must be positive, got " + std::to_string(n));
}

// Both operands in Q(zeta_lcm).
std::pair<CycNum, CycNum> common_field(const CycNum& x, const CycNum& y) {
  const int m = std::lcm(x.conductor(), y.conductor());
  return {x.lift(m), y.lift(m)};
}

}  // namespace

int euler_phi(int n) {
  require_conductor(n);
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  require_conductor(n);
  static std::mutex mutex;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  QPoly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    QPoly den = to_qpoly(cyclotomic_polynomial(d));
    QPoly rem = num;
    num = divide(rem, den);
    if (!rem.empty()) throw InternalError("x^n - 1 not divisible by Phi_d");
  }
  std::vector<Integer> phi;
  phi.reserve(num.size());
  for (const auto& c : num) {
    if (c.get_den() != 1) throw InternalError("cyclotomic polynomial with non-integer coefficient");
    phi.push_back(c.get_num());
  }

  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(phi)).first->second;
}

CycNum::CycNum() : n_(1), coeffs_(1) {}

CycNum::CycNum(int n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}

CycNum CycNum::reduce(int n, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  // Phi_n is monic, so no division is needed.
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    Rational c = poly[i];
    std::size_t shift = i - deg;
    for (std::size_t j = 0; j <= deg; ++j) poly[shift + j] -= c * phi[j];
  }
  poly.resize(deg);
  return CycNum(n, std::move(poly));
}

CycNum CycNum::zero(int n) {
  require_conductor(n);
  return CycNum(n, std::vector<Rational>(euler_phi(n)));
}

CycNum CycNum::one(int n) { return rational(n, 1); }

CycNum CycNum::rational(int n, const Rational& q) {
  CycNum out = zero(n);
  out.coeffs_[0] = q;
  return out;
}

CycNum CycNum::zeta(int n, long long k) {
  require_conductor(n);
  std::vector<Rational> v(n);
  v[mod_n(k, n)] = 1;
  return reduce(n, std::move(v));
}

CycNum CycNum::from_exponents(int n, std::span<const Rational> v) {
  require_conductor(n);
  if (static_cast<long long>(v.size()) != n)
    throw InputError("exponent vector has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(n));
  return reduce(n, std::vector<Rational>(v.begin(), v.end()));
}

CycNum CycNum::from_coefficients(int n, std::vector<Rational> coeffs) {
  require_conductor(n);
  if (static_cast<int>(coeffs.size()) != euler_phi(n))
    throw InputError("coefficient vector has length " + std::to_string(coeffs.size()) +
                     ", expected phi(n) = " + std::to_string(euler_phi(n)));
  return CycNum(n, std::move(coeffs));
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw InputError("value is not rational: " + to_string());
  return coeffs_[0];
}

bool CycNum::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

std::complex<double> CycNum::embed() const {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n_;
    sum += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(n_) + ")");

  // s * x + t * Phi = g with deg g = 0, since Phi_n is irreducible.
  QPoly r0 = to_qpoly(cyclotomic_polynomial(n_));
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (!r1.empty()) {
    QPoly rem = r0;
    QPoly q = divide(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly s2 = subtract(s0, multiply(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw InternalError("Phi_n shares a factor with a nonzero residue");
  for (auto& c : s0) c /= r0[0];
  return reduce(n_, std::move(s0));
}

CycNum CycNum::galois(long long l) const {
  const long long ell = mod_n(l, n_);
  if (std::gcd(ell, static_cast<long long>(n_)) != 1)
    throw InputError("galois: gcd(" + std::to_string(l) + ", " + std::to_string(n_) +
                     ") != 1, not an automorphism");
  std::vector<Rational> v(n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[mod_n(static_cast<long long>(k) * ell, n_)] += coeffs_[k];
  return reduce(n_, std::move(v));
}

CycNum CycNum::conj() const { return galois(n_ - 1); }

CycNum CycNum::times_zeta(long long k) const {
  std::vector<Rational> v(n_);
  const long long shift = mod_n(k, n_);
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    v[mod_n(static_cast<long long>(e) + shift, n_)] += coeffs_[e];
  return reduce(n_, std::move(v));
}

CycNum CycNum::lift(int m) const {
  require_conductor(m);
  if (m % n_ != 0)
    throw InputError("cannot lift Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" +
                     std::to_string(m) + ")");
  if (m == n_) return *this;
  const int step = m / n_;
  std::vector<Rational> v(m);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k * step] = coeffs_[k];
  return reduce(m, std::move(v));
}

CycNum CycNum::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -coeffs_[k];
  return CycNum(n_, std::move(out));
}

CycNum operator+(const CycNum& x, const CycNum& y) {
  if (x.n_ != y.n_) {
    const auto [a, b] = common_field(x, y);
    return a + b;
  }
  std::vector<Rational> out(x.coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = x.coeffs_[k] + y.coeffs_[k];
  return CycNum(x.n_, std::move(out));
}

CycNum operator-(const CycNum& x, const CycNum& y) {
  if (x.n_ != y.n_) {
    const auto [a, b] = common_field(x, y);
    return a - b;
  }
  std::vector<Rational> out(x.coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = x.coeffs_[k] - y.coeffs_[k];
  return CycNum(x.n_, std::move(out));
}

CycNum operator*(const CycNum& x, const CycNum& y) {
  if (x.n_ != y.n_) {
    const auto [a, b] = common_field(x, y);
    return a * b;
  }
  return CycNum::reduce(x.n_, multiply(x.coeffs_, y.coeffs_));
}

CycNum operator/(const CycNum& x, const CycNum& y) { return x * y.inverse(); }

bool operator==(const CycNum& x, const CycNum& y) {
  if (x.n_ != y.n_) {
    const auto [a, b] = common_field(x, y);
    return a.coeffs_ == b.coeffs_;
  }
  return x.coeffs_ == y.coeffs_;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << rational_to_string(mag);
      continue;
    }
    if (mag != 1) os << rational_to_string(mag) << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  os << " (n=" << n_ << ")";
  return os.str();
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw InputError("empty rational");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      Integer num(digits, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
      Rational out(num, den);
      out.canonicalize();
      return out;
    }
    Rational out(s, 10);
    if (out.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    out.canonicalize();
    return out;
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational number: '" + text + "'");
  }
}

}  // namespace upst
