#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "upst/errors.hpp"
#include "upst/graph.hpp"

using namespace upst;
using cd = std::complex<double>;

namespace {

// The G_6 matrix as printed, entry by entry.
Eigen::MatrixXcd printed_g6() {
  const cd w = std::polar(1.0, std::numbers::pi / 6);
  const cd p = 1.5 * (1.0 + std::conj(w)), m = 1.5 * (1.0 - std::conj(w));
  Eigen::MatrixXcd a(4, 4);
  a << 0, p, 0.5, m,
       std::conj(p), 0, std::conj(m), 0.5,
       0.5, m, 0, p,
       std::conj(m), 0.5, std::conj(p), 0;
  return a;
}

}  // namespace

TEST_CASE("Hermitian validation") {
  CHECK_NOTHROW(validate_hermitian(Eigen::MatrixXcd::Identity(4, 4)));

  Eigen::MatrixXcd bad(2, 2);
  bad << 0, cd(0, 1), cd(0, 1), 0;
  CHECK_THROWS_AS(validate_hermitian(bad), ValidationError);
  CHECK(hermitian_deviation(bad) == doctest::Approx(2.0));

  CHECK_NOTHROW(validate_hermitian(printed_g6()));
  CHECK_THROWS_AS(validate_hermitian(Eigen::MatrixXcd::Zero(2, 3)), ValidationError);

  Eigen::MatrixXcd nearly = Eigen::MatrixXcd::Identity(3, 3);
  nearly(0, 1) = 1e-13;
  CHECK_NOTHROW(validate_hermitian(nearly));
  nearly(0, 1) = 1e-11;
  CHECK_THROWS_AS(validate_hermitian(nearly), ValidationError);
}

TEST_CASE("circulant spec validation") {
  const CirculantSpec spec = fixtures::circ_0_mi_i();
  CHECK(spec.order() == 3);
  CHECK(spec.conductor() == 4);
  CHECK(spec[4] == spec[1]);
  CHECK(spec[-1] == spec[2]);
  CHECK(spec.support() == std::vector<int>{1, 2});

  CHECK_THROWS_AS(CirculantSpec::make({CycNum::zero(1), CycNum::one(1), CycNum::rational(1, 2)}),
                  ValidationError);
  CHECK_THROWS_AS(CirculantSpec::make({CycNum::zeta(4, 1), CycNum::one(1), CycNum::one(1)}),
                  ValidationError);
  CHECK_THROWS_AS(CirculantSpec::make({}), ValidationError);
  try {
    CirculantSpec::make({CycNum::zero(1), CycNum::one(1), CycNum::one(1), CycNum::rational(1, 2)});
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("index") != std::string::npos);
  }
}

TEST_CASE("circulant matrix entries") {
  const HermitianGraph g = circulant_to_graph(fixtures::circ_0_mi_i());
  Eigen::MatrixXcd expected(3, 3);
  expected << 0, cd(0, -1), cd(0, 1),
              cd(0, 1), 0, cd(0, -1),
              cd(0, -1), cd(0, 1), 0;
  CHECK((g.adjacency() - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(g.circulant().has_value());
}

TEST_CASE("circulants commute with the cyclic shift (property)") {
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 4, 5, 6, 8, 9, 12}) {
    const Eigen::MatrixXcd p = cyclic_shift_matrix(n);
    for (int trial = 0; trial < 10; ++trial) {
      const int m = std::array<int, 4>{1, 3, 4, 8}[trial % 4];
      const CirculantSpec spec = fixtures::random_hermitian_circulant(rng, n, m);
      const Eigen::MatrixXcd a = circulant_to_graph(spec).adjacency();
      CHECK((p * a * p.adjoint() - a).cwiseAbs().maxCoeff() <= 1e-12);
      // Relabeling j -> j + 1: entry (j+1, k+1) equals entry (j, k).
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          CHECK(std::abs(a((j + 1) % n, (k + 1) % n) - a(j, k)) <= 1e-12);
      CHECK(hermitian_deviation(a) <= 1e-12);
    }
  }
}

TEST_CASE("connectivity: gcd rule and breadth-first search agree (property)") {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.3);
  for (int n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<CycNum> a(n, CycNum::zero(1));
      for (int j = 1; j <= n / 2; ++j)
        if (coin(rng)) a[j] = a[n - j] = CycNum::one(1);
      const CirculantSpec spec = CirculantSpec::make(a);
      const HermitianGraph exact = circulant_to_graph(spec);
      const HermitianGraph numeric = validate_hermitian(exact.adjacency());
      CHECK(is_connected(exact) == is_connected(numeric));
      CHECK(is_connected_circulant(spec) == is_connected(numeric));
    }
  }
  // Order 4 with only a_2: two disjoint edges.
  const CirculantSpec split = CirculantSpec::make(
      {CycNum::zero(1), CycNum::zero(1), CycNum::one(1), CycNum::zero(1)});
  CHECK_FALSE(is_connected_circulant(split));
}

TEST_CASE("diagonal shift") {
  const CirculantSpec spec = fixtures::circ_0_mi_i();
  const CirculantSpec s = shift_diagonal(spec, Rational(5, 2));
  CHECK(s[0] == CycNum::rational(4, Rational(5, 2)));
  CHECK(s[1] == spec[1]);
  const HermitianGraph g = shift_diagonal(circulant_to_graph(spec), Rational(5, 2));
  CHECK(g.circulant().has_value());
  const Eigen::MatrixXcd diff =
      g.adjacency() - circulant_to_graph(spec).adjacency() - 2.5 * Eigen::MatrixXcd::Identity(3, 3);
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-15);
  const HermitianGraph plain = shift_diagonal(validate_hermitian(printed_g6()), Rational(-1));
  CHECK(plain.adjacency()(2, 2).real() == doctest::Approx(-1.0));
}
