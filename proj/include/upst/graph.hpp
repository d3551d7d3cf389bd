#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "upst/cyclotomic.hpp"

namespace upst {

/// First row (a_0, ..., a_{n-1}) of a Hermitian circulant, C_{jk} = a_{k-j mod n}.
///
/// All coefficients live in one cyclotomic field Q(zeta_m); m need not equal n
/// (Circ(0, -i, i) has order 3 and coefficients in Q(zeta_4)).
/// Invariants, checked exactly: a_0 is rational and a_{n-j} = conj(a_j).
class CirculantSpec {
 public:
  /// Lifts the coefficients to a common conductor and validates.
  /// Throws ValidationError naming the first offending index.
  static CirculantSpec make(std::vector<CycNum> a);

  int order() const { return static_cast<int>(a_.size()); }
  int conductor() const { return a_.front().conductor(); }
  const std::vector<CycNum>& coefficients() const { return a_; }
  const CycNum& operator[](int j) const;

  /// Support {j >= 1 : a_j != 0}, decided exactly.
  std::vector<int> support() const;

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

 private:
  explicit CirculantSpec(std::vector<CycNum> a) : a_(std::move(a)) {}
  std::vector<CycNum> a_;
};

/// Hermitian adjacency matrix, optionally with the exact circulant it came from.
class HermitianGraph {
 public:
  int order() const { return static_cast<int>(adjacency_.rows()); }
  const Eigen::MatrixXcd& adjacency() const { return adjacency_; }
  const std::optional<CirculantSpec>& circulant() const { return circulant_; }

  friend HermitianGraph validate_hermitian(Eigen::MatrixXcd matrix);
  friend HermitianGraph circulant_to_graph(const CirculantSpec& spec);

 private:
  HermitianGraph(Eigen::MatrixXcd a, std::optional<CirculantSpec> spec)
      : adjacency_(std::move(a)), circulant_(std::move(spec)) {}

  Eigen::MatrixXcd adjacency_;
  std::optional<CirculantSpec> circulant_;
};

/// Largest |A_jk - conj(A_kj)| over all entries (diagonal included).
double hermitian_deviation(const Eigen::MatrixXcd& matrix);

/// Wraps a square matrix after checking Hermiticity to 1e-12.
/// Throws ValidationError (with the max deviation) otherwise.
HermitianGraph validate_hermitian(Eigen::MatrixXcd matrix);

/// Dense matrix with entry (j, k) = embed(a_{k-j mod n}); keeps the exact spec.
HermitianGraph circulant_to_graph(const CirculantSpec& spec);

/// gcd({j : a_j != 0} u {n}) == 1, with a_j != 0 decided exactly.
bool is_connected_circulant(const CirculantSpec& spec);

/// Connectivity of the underlying graph (edges where |A_jk| > 1e-12).
bool is_connected(const HermitianGraph& graph);

/// Adds shift * I: a_0 += shift. Does not change the walk up to a global phase.
CirculantSpec shift_diagonal(const CirculantSpec& spec, const Rational& shift);
HermitianGraph shift_diagonal(const HermitianGraph& graph, const Rational& shift);

/// The cyclic permutation matrix P with P e_j = e_{j+1 mod n}.
Eigen::MatrixXcd cyclic_shift_matrix(int n);

}  // namespace upst
