#pragma once

#include <utility>
#include <vector>

#include "upst/graph.hpp"
#include "upst/spectra.hpp"

namespace upst {

/// Parameters of the non-circulant family: n = a b with a >= b >= 2, beta >= 2.
struct NoncirculantParams {
  int a = 2;
  int b = 2;
  int beta = 2;

  int order() const { return a * b; }
  /// Throws InputError unless a >= b >= 2 and beta >= 2.
  void validate() const;

  friend bool operator==(const NoncirculantParams&, const NoncirculantParams&) = default;
};

/// beta * floor(x / d) * d + (x mod d).
long long theta(long long d, long long beta, long long x);

/// Graph and eigensystem of the non-circulant family:
/// X_jk = zeta_{beta n}^{theta_a(j) theta_b(k)} / sqrt(n), lambda_k = theta_b(k),
/// A = X diag(lambda) X^dagger.
std::pair<HermitianGraph, EigenSystem> noncirculant_graph(const NoncirculantParams& params);

/// The order-4 example G_k (even k >= 2), eigenvalues (0, 1, k, k+1):
/// the family above with a = b = 2 and beta = k / 2. Odd k is rejected.
std::pair<HermitianGraph, EigenSystem> gk_example(int k);

/// a_0 = 0 and a_j = 1/(zeta_n^{-j} - 1) + sum_k c_k zeta_n^{-jk}, exactly in Q(zeta_n).
/// The circulant has eigenvalues lambda_l = lambda_0 + l + (c_l - c_0) n.
CirculantSpec circulant_from_c(int n, const std::vector<long long>& c);

/// Integer c with sum_k c_k zeta_n^{-k} = 1/(1 - zeta_n^{-1}), n = p q: the zero-padded
/// lift of the exact inverse. Throws InternalError if the inverse is not integral.
std::vector<long long> nondense_c_vector(int p, int q);

/// Non-dense UPST circulant of order p q (distinct primes p, q): a_1 = a_{n-1} = 0.
CirculantSpec nondense_circulant(int p, int q);

bool is_prime(long long p);

}  // namespace upst
