#pragma once

// Shared fixtures and test-only oracles.

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "upst/constructors.hpp"
#include "upst/graph.hpp"
#include "upst/spectra.hpp"

namespace fixtures {

using upst::CirculantSpec;
using upst::CycNum;
using upst::EigenSystem;
using upst::HermitianGraph;

struct Fixture {
  std::string name;
  HermitianGraph graph;
  EigenSystem es;
  bool circulant = false;
  // (a, b, beta) for members of the non-circulant family.
  int a = 0, b = 0, beta = 0;
};

// Circ(0, -i, i): order 3 with coefficients in Q(zeta_4).
inline CirculantSpec circ_0_mi_i() {
  return CirculantSpec::make({CycNum::zero(4), -CycNum::zeta(4, 1), CycNum::zeta(4, 1)});
}

inline Fixture circulant_fixture(std::string name, const CirculantSpec& spec) {
  return {std::move(name), upst::circulant_to_graph(spec), upst::circulant_eigensystem(spec), true};
}

inline Fixture noncirculant_fixture(int a, int b, int beta) {
  auto [g, es] = upst::noncirculant_graph({a, b, beta});
  return {"theta(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(beta) + ")",
          std::move(g), std::move(es), false, a, b, beta};
}

inline std::vector<Fixture> circulant_fixtures() {
  return {circulant_fixture("circ(0,-i,i)", circ_0_mi_i()),
          circulant_fixture("nondense(2,3)", upst::nondense_circulant(2, 3)),
          circulant_fixture("nondense(3,5)", upst::nondense_circulant(3, 5)),
          circulant_fixture("nondense(2,5)", upst::nondense_circulant(2, 5)),
          circulant_fixture("c-form n=5", upst::circulant_from_c(5, {0, 1, -1, 2, 0})),
          circulant_fixture("c-form n=8", upst::circulant_from_c(8, {1, 0, 0, -1, 0, 2, 0, 0}))};
}

inline std::vector<Fixture> noncirculant_fixtures() {
  std::vector<Fixture> out;
  for (auto [a, b, beta] : std::vector<std::array<int, 3>>{{2, 2, 2}, {3, 2, 2}, {3, 3, 2}, {4, 2, 3}})
    out.push_back(noncirculant_fixture(a, b, beta));
  for (int k : {4, 6, 8}) {
    auto [g, es] = upst::gk_example(k);
    out.push_back({"G_" + std::to_string(k), std::move(g), std::move(es), false, 2, 2, k / 2});
  }
  return out;
}

inline std::vector<Fixture> all_fixtures() {
  auto out = circulant_fixtures();
  for (auto& f : noncirculant_fixtures()) out.push_back(std::move(f));
  return out;
}

// exp(-i A t) by Eigen's matrix-function module.
inline Eigen::MatrixXcd expm_oracle(const Eigen::MatrixXcd& a, double t) {
  Eigen::MatrixXcd m = std::complex<double>(0.0, -t) * a;
  return m.exp();
}

// Sorted eigenvalues by a dense Hermitian eigensolver.
inline std::vector<double> dense_eigenvalues(const Eigen::MatrixXcd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

// sum_k v[k] exp(2 pi i k / n), straight from the exponent vector.
inline std::complex<double> evaluate_exponents(int n, const std::vector<upst::Rational>& v,
                                               long long power = 1) {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k)
    sum += v[k].get_d() *
           std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((power * static_cast<long long>(k)) % n) / n);
  return sum;
}

inline std::vector<upst::Rational> random_exponents(std::mt19937_64& rng, int n, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  std::vector<upst::Rational> v(n);
  for (auto& x : v) {
    x = upst::Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

// Random Hermitian circulant of order n with coefficients in Q(zeta_m).
inline CirculantSpec random_hermitian_circulant(std::mt19937_64& rng, int n, int m) {
  std::vector<CycNum> a(n, CycNum::zero(m));
  std::uniform_int_distribution<int> r(-3, 3);
  a[0] = CycNum::rational(m, upst::Rational(r(rng)));
  for (int j = 1; j <= n / 2; ++j) {
    CycNum x = CycNum::from_exponents(m, random_exponents(rng, m, 2));
    if (2 * j == n) x = x + x.conj();
    a[j] = x;
    a[n - j] = x.conj();
  }
  return CirculantSpec::make(std::move(a));
}

}  // namespace fixtures
