#pragma once

#include <gmpxx.h>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace upst {

using Rational = mpq_class;
using Integer = mpz_class;

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Results are memoized; safe to call from several threads.
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// Exact element of the cyclotomic field Q(zeta_n), zeta_n = exp(2 pi i / n).
///
/// Stored in the power basis {1, zeta, ..., zeta^(phi(n)-1)} after reduction
/// modulo Phi_n, so two values are field-equal iff their coefficient vectors
/// are equal. Values are immutable; every operation returns a new value.
class CycNum {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycNum();

  static CycNum zero(int n);
  static CycNum one(int n);
  static CycNum rational(int n, const Rational& q);
  /// zeta_n^k; negative k is reduced mod n.
  static CycNum zeta(int n, long long k);
  /// Canonical form of sum_k v[k] zeta_n^k for a length-n vector v.
  static CycNum from_exponents(int n, std::span<const Rational> v);
  /// Same, from an already reduced power-basis vector of length phi(n).
  static CycNum from_coefficients(int n, std::vector<Rational> coeffs);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws InputError unless is_rational().
  Rational rational_value() const;
  bool has_integer_coefficients() const;

  /// Evaluation at zeta_n = exp(2 pi i / n) in double precision.
  std::complex<double> embed() const;

  /// Inverse, by extended Euclid against Phi_n. Throws DivisionByZero on 0.
  CycNum inverse() const;

  /// The automorphism zeta -> zeta^l. Requires gcd(l, n) = 1.
  CycNum galois(long long l) const;
  /// Complex conjugation, i.e. galois(n - 1).
  CycNum conj() const;

  /// this * zeta_n^k, without a general multiplication.
  CycNum times_zeta(long long k) const;

  /// Image under Q(zeta_n) -> Q(zeta_m) for n | m.
  CycNum lift(int m) const;

  CycNum operator-() const;
  // Operands with different conductors are lifted to Q(zeta_lcm) first.
  friend CycNum operator+(const CycNum& x, const CycNum& y);
  friend CycNum operator-(const CycNum& x, const CycNum& y);
  friend CycNum operator*(const CycNum& x, const CycNum& y);
  friend CycNum operator/(const CycNum& x, const CycNum& y);
  friend bool operator==(const CycNum& x, const CycNum& y);

  /// Human-readable form, e.g. "1 - 2/3*z + z^3 (n=12)".
  std::string to_string() const;

 private:
  CycNum(int n, std::vector<Rational> coeffs);
  static CycNum reduce(int n, std::vector<Rational> poly);

  int n_ = 1;
  std::vector<Rational> coeffs_;
};

/// Free-function spellings of the field operations.
inline CycNum invert(const CycNum& x) { return x.inverse(); }
inline CycNum galois(const CycNum& x, long long l) { return x.galois(l); }
inline std::complex<double> embed(const CycNum& x) { return x.embed(); }

/// Exact string form of a rational, "p" or "p/q".
std::string rational_to_string(const Rational& q);
/// Parses "p" or "p/q" (and plain decimals without exponent, e.g. "2.5").
Rational parse_rational(const std::string& text);

}  // namespace upst
