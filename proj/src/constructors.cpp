#include "upst/constructors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "upst/errors.hpp"
#include "upst/tolerances.hpp"

namespace upst {

namespace {

// Unchecked builder; gk_example(2) needs beta = 1.
std::pair<HermitianGraph, EigenSystem> build_noncirculant(int a, int b, int beta) {
  const int n = a * b;
  const long long modulus = static_cast<long long>(beta) * n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));

  Eigen::MatrixXcd x(n, n);
  std::vector<double> lambdas(n);
  std::vector<Rational> exact(n);
  for (int k = 0; k < n; ++k) {
    lambdas[k] = static_cast<double>(theta(b, beta, k));
    exact[k] = Rational(static_cast<long>(theta(b, beta, k)));
  }
  for (int j = 0; j < n; ++j) {
    const long long row = theta(a, beta, j);
    for (int k = 0; k < n; ++k) {
      const long long e = (row * theta(b, beta, k)) % modulus;
      x(j, k) = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                      static_cast<double>(modulus));
    }
  }
  if (unitarity_defect(x) > tol::kUnitary) {
    std::ostringstream os;
    os << "non-circulant construction (a=" << a << ", b=" << b << ", beta=" << beta
       << ") produced a non-unitary X";
    throw InternalError(os.str());
  }

  EigenSystem es = EigenSystem::make(x, lambdas, std::move(exact));
  Eigen::MatrixXcd adjacency = x * es.lambda_vector().cast<std::complex<double>>().asDiagonal() *
                               x.adjoint();
  adjacency = (0.5 * (adjacency + adjacency.adjoint())).eval();
  return {validate_hermitian(std::move(adjacency)), std::move(es)};
}

std::vector<CycNum> inverse_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<CycNum>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // 1 / (zeta^{-j} - 1), j = 1..n-1; slot 0 unused.
  std::vector<CycNum> table(n, CycNum::zero(n));
  const CycNum one = CycNum::one(n);
  for (int j = 1; j < n; ++j) table[j] = (CycNum::zeta(n, -j) - one).inverse();
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace

void NoncirculantParams::validate() const {
  if (!(a >= b && b >= 2)) {
    std::ostringstream os;
    os << "non-circulant family needs a >= b >= 2, got a=" << a << ", b=" << b;
    throw InputError(os.str());
  }
  if (beta < 2) throw InputError("non-circulant family needs beta >= 2, got " + std::to_string(beta));
}

long long theta(long long d, long long beta, long long x) {
  return beta * (x / d) * d + (x % d);
}

std::pair<HermitianGraph, EigenSystem> noncirculant_graph(const NoncirculantParams& params) {
  params.validate();
  return build_noncirculant(params.a, params.b, params.beta);
}

std::pair<HermitianGraph, EigenSystem> gk_example(int k) {
  if (k < 2 || k % 2 != 0)
    throw InputError("G_k is defined for even k >= 2, got " + std::to_string(k));
  return build_noncirculant(2, 2, k / 2);
}

CirculantSpec circulant_from_c(int n, const std::vector<long long>& c) {
  if (n < 2) throw InputError("circulant_from_c needs n >= 2");
  if (static_cast<int>(c.size()) != n)
    throw InputError("c has length " + std::to_string(c.size()) + ", expected " + std::to_string(n));

  const std::vector<CycNum> inverses = inverse_table(n);
  std::vector<CycNum> a;
  a.reserve(n);
  a.push_back(CycNum::zero(n));
  std::vector<Rational> v(n);
  for (int j = 1; j < n; ++j) {
    std::fill(v.begin(), v.end(), Rational(0));
    for (int k = 0; k < n; ++k) {
      const long long e = ((-static_cast<long long>(j) * k) % n + n) % n;
      v[e] += Rational(static_cast<long>(c[k]));
    }
    a.push_back(inverses[j] + CycNum::from_exponents(n, v));
  }
  return CirculantSpec::make(std::move(a));
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<long long> nondense_c_vector(int p, int q) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    std::ostringstream os;
    os << "nondense construction needs two distinct primes, got p=" << p << ", q=" << q;
    throw InputError(os.str());
  }
  const int n = p * q;
  const CycNum inv = (CycNum::one(n) - CycNum::zeta(n, -1)).inverse();
  if (!inv.has_integer_coefficients())
    throw InternalError("1/(1 - zeta_n^{-1}) is not integral for n = " + std::to_string(n));

  // sum_e y_e zeta^e = sum_k c_k zeta^{-k} with k = -e mod n.
  std::vector<long long> c(n, 0);
  const auto& y = inv.coeffs();
  for (std::size_t e = 0; e < y.size(); ++e) {
    if (!y[e].get_num().fits_slong_p()) throw InternalError("inverse coefficient out of range");
    c[(n - static_cast<int>(e)) % n] = y[e].get_num().get_si();
  }
  return c;
}

CirculantSpec nondense_circulant(int p, int q) {
  CirculantSpec spec = circulant_from_c(p * q, nondense_c_vector(p, q));
  if (!spec[1].is_zero() || !spec[p * q - 1].is_zero())
    throw InternalError("nondense construction left a_1 nonzero");
  return spec;
}

}  // namespace upst
