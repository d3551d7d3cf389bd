#include "upst/graph.hpp"

#include <numeric>
#include <queue>
#include <sstream>

#include "upst/errors.hpp"
#include "upst/tolerances.hpp"

namespace upst {

CirculantSpec CirculantSpec::make(std::vector<CycNum> a) {
  if (a.empty()) throw ValidationError("circulant spec needs at least one coefficient");
  int m = 1;
  for (const auto& x : a) m = std::lcm(m, x.conductor());
  for (auto& x : a) x = x.lift(m);

  const int n = static_cast<int>(a.size());
  if (!a[0].is_rational())
    throw ValidationError("circulant a_0 is not real: " + a[0].to_string());
  for (int j = 1; j < n; ++j) {
    if (a[n - j] != a[j].conj()) {
      std::ostringstream os;
      os << "circulant is not Hermitian at index " << j << ": a_" << (n - j)
         << " != conj(a_" << j << ")";
      throw ValidationError(os.str());
    }
  }
  return CirculantSpec(std::move(a));
}

const CycNum& CirculantSpec::operator[](int j) const {
  const int n = order();
  return a_[((j % n) + n) % n];
}

std::vector<int> CirculantSpec::support() const {
  std::vector<int> out;
  for (int j = 1; j < order(); ++j)
    if (!a_[j].is_zero()) out.push_back(j);
  return out;
}

double hermitian_deviation(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() == 0) return 0.0;
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

HermitianGraph validate_hermitian(Eigen::MatrixXcd matrix) {
  if (matrix.rows() != matrix.cols()) {
    std::ostringstream os;
    os << "adjacency matrix is not square (" << matrix.rows() << "x" << matrix.cols() << ")";
    throw ValidationError(os.str());
  }
  if (matrix.rows() == 0) throw ValidationError("adjacency matrix is empty");
  const double dev = hermitian_deviation(matrix);
  if (!(dev <= tol::kHermitian)) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |A_jk - conj(A_kj)| = " << dev;
    throw ValidationError(os.str());
  }
  return HermitianGraph(std::move(matrix), std::nullopt);
}

HermitianGraph circulant_to_graph(const CirculantSpec& spec) {
  const int n = spec.order();
  std::vector<std::complex<double>> row(n);
  for (int j = 0; j < n; ++j) row[j] = spec[j].embed();
  Eigen::MatrixXcd a(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) a(j, k) = row[((k - j) % n + n) % n];
  return HermitianGraph(std::move(a), spec);
}

bool is_connected_circulant(const CirculantSpec& spec) {
  int g = spec.order();
  for (int j : spec.support()) g = std::gcd(g, j);
  return g == 1;
}

bool is_connected(const HermitianGraph& graph) {
  if (const auto& spec = graph.circulant()) return is_connected_circulant(*spec);
  const int n = graph.order();
  const auto& a = graph.adjacency();
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v = 0; v < n; ++v) {
      if (seen[v] || std::abs(a(u, v)) <= tol::kHermitian) continue;
      seen[v] = 1;
      ++count;
      frontier.push(v);
    }
  }
  return count == n;
}

CirculantSpec shift_diagonal(const CirculantSpec& spec, const Rational& shift) {
  std::vector<CycNum> a = spec.coefficients();
  a[0] = a[0] + CycNum::rational(a[0].conductor(), shift);
  return CirculantSpec::make(std::move(a));
}

HermitianGraph shift_diagonal(const HermitianGraph& graph, const Rational& shift) {
  if (const auto& spec = graph.circulant()) return circulant_to_graph(shift_diagonal(*spec, shift));
  Eigen::MatrixXcd a = graph.adjacency();
  a.diagonal().array() += shift.get_d();
  return validate_hermitian(std::move(a));
}

Eigen::MatrixXcd cyclic_shift_matrix(int n) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) p((j + 1) % n, j) = 1.0;
  return p;
}

}  // namespace upst
