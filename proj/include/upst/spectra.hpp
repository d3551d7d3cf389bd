#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "upst/cyclotomic.hpp"
#include "upst/graph.hpp"

namespace upst {

/// Unitary diagonalizer X (column k is the eigenvector of lambdas[k]) plus the
/// real eigenvalues. exact_lambdas is set when every eigenvalue is rational.
struct EigenSystem {
  int n = 0;
  Eigen::MatrixXcd X;
  std::vector<double> lambdas;
  std::optional<std::vector<Rational>> exact_lambdas;

  /// Checks shape and unitarity (1e-10); throws ValidationError.
  static EigenSystem make(Eigen::MatrixXcd X, std::vector<double> lambdas,
                          std::optional<std::vector<Rational>> exact = std::nullopt);

  Eigen::VectorXd lambda_vector() const;
  /// max |A X - X diag(lambda)|.
  double residual(const Eigen::MatrixXcd& adjacency) const;
  /// min_{j<k} |lambda_j - lambda_k|; +inf for n < 2.
  double min_gap() const;
};

/// Entry (j, k) = exp(2 pi i jk / n) / sqrt(n).
Eigen::MatrixXcd fourier_matrix(int n);

/// lambda_k = sum_j a_j zeta_n^{jk}, computed exactly and paired with Fourier
/// column k (Fourier index order, never sorted).
EigenSystem circulant_eigensystem(const CirculantSpec& spec);
/// The exact eigenvalues as cyclotomic numbers in Q(zeta_lcm(m, n)).
std::vector<CycNum> circulant_eigenvalues_exact(const CirculantSpec& spec);

/// max | X^dagger X - I |.
double unitarity_defect(const Eigen::MatrixXcd& m);

/// Flat (every |M_jk| = 1/sqrt(n)) and unitary, both within tol.
bool is_type_ii(const Eigen::MatrixXcd& m, double tol = 1e-10);

/// X = S Z D with first row and column equal to 1/sqrt(n).
struct CanonicalForm {
  Eigen::MatrixXcd X;
  Eigen::VectorXcd D;  // column scaling (diagonal)
  Eigen::VectorXcd S;  // row scaling (diagonal)
};

/// Canonical type-II form of a flat unitary Z. A matrix A diagonalized by Z
/// maps to S A S^{-1}, diagonalized by X with the same eigenvalues.
/// Throws ValidationError for non-flat or non-unitary input.
CanonicalForm canonicalize(const Eigen::MatrixXcd& z);

/// Every row sum and column sum except the first vanishes to 1e-9.
bool zero_sum_check(const Eigen::MatrixXcd& x);

/// Witness for lambda_k = alpha + beta (q k + c_k n).
struct EigenvalueForm {
  double alpha = 0.0;
  double beta = 1.0;
  int q = 1;
  std::vector<long long> c;
};

/// Recognizes the circulant UPST eigenvalue form. Ratios (lambda_k - lambda_0) /
/// (lambda_1 - lambda_0) are reconstructed as fractions with denominator at most
/// max_denominator, beta is the positive real gcd of the differences, and q is the
/// smallest positive unit with m_k = q k (mod n). alpha is normalized into
/// [0, beta n). Empty when no witness exists.
std::optional<EigenvalueForm> recognize_eigenvalue_form(const std::vector<double>& lambdas, int n,
                                                        double tol = 1e-9,
                                                        long long max_denominator = 1000000);

/// First continued-fraction convergent p/q of x with |x - p/q| <= tol * max(1, |x|)
/// and q <= max_denominator.
std::optional<std::pair<long long, long long>> rational_approximation(double x, double tol,
                                                                      long long max_denominator);

}  // namespace upst
