#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/int_matrix.hpp"

namespace qwalk {

/// Which quotient family applies to A_n: the paired partition when n is even,
/// paired cells plus the middle singleton when n is odd.
enum class Parity { even, odd };

constexpr Parity parity_of(std::size_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }
constexpr std::size_t half_up(std::size_t n) { return (n + 1) / 2; }

/// One predicted eigenpair of (B + D-bar)^T.
///
/// Even family: angle (2k-1)pi/(2r), vector entry j is
///   (-1)^{r-j} (1 + sum_{i=1}^{r-j} 2 cos(i * angle)).
/// Odd family: angle (2k-2)pi/(2r-1), vector entry j < r is
///   (-1)^{r-j} 2 cos((r-j) * angle).
/// Eigenvalue 2 - 2 cos(angle) in both; the last vector entry is exactly 1.
struct EigenpairPrediction {
  std::size_t k = 0;
  Parity family = Parity::even;
  double angle = 0.0;
  double eigenvalue = 0.0;
  Eigen::VectorXd vector;
};

struct SnfPrediction {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::vector<BigInt> factors;  // 1, 2, ..., 2
  std::size_t zeros = 0;
};

/// ceil(n/2). Throws std::invalid_argument for n == 0 (as do all n-indexed
/// functions below).
std::size_t predicted_rank(std::size_t n);
/// diag(1, 2, ..., 2, 0, ..., 0) with ceil(n/2) nonzero entries.
SnfPrediction predicted_snf(std::size_t n);
/// 2^{ceil(n/2) - 1}, the determinant of the reduced Q-walk matrix.
BigInt predicted_reduced_det(std::size_t n);

/// Throws std::out_of_range unless r >= 1 and 1 <= k <= r.
EigenpairPrediction eigenpair_even(std::size_t r, std::size_t k);
EigenpairPrediction eigenpair_odd(std::size_t r, std::size_t k);
/// Dispatches on the parity of n with r = ceil(n/2).
EigenpairPrediction eigenpair_for_n(std::size_t n, std::size_t k);
std::vector<EigenpairPrediction> eigenpairs_for_n(std::size_t n);

/// (-1)^{floor(r/2)} 2^{r-1}, the closed form of prod_k e^T v_k.
double dot_product_formula(std::size_t r, Parity parity);
/// prod_k e^T v_k evaluated from the predicted eigenvectors.
double dot_product_evaluated(std::size_t r, Parity parity);

/// prod_{j<i} (2 cos t_i - 2 cos t_j). Throws for an empty list.
double cosine_vandermonde_det(std::span<const double> thetas);
/// Rows 1, 2cos(t_j), 2cos(2 t_j), ..., 2cos((q-1) t_j).
Eigen::MatrixXd cosine_vandermonde_matrix(std::span<const double> thetas);
/// Numeric (LU) determinant of cosine_vandermonde_matrix.
double cosine_vandermonde_matrix_det(std::span<const double> thetas);

struct ProductCheck {
  double evaluated = 0.0;
  double closed = 0.0;

  double relative_error() const;
};

/// prod_{k=1}^r sin((2k-1)pi/(2r)) against (1/2)^{r-1}.
ProductCheck sine_angle_product(std::size_t r);
/// prod_{k=1}^r cos(beta_k / 2), beta_k = (2k-2)pi/(2r-1), against (1/2)^{r-1}.
ProductCheck cos_half_beta_product(std::size_t r);
/// prod_{k=1}^m cos(k pi/(2m+1)) against 2^{-m}; m = 0 gives the empty product.
ProductCheck cos_fraction_product(std::size_t m);
/// evaluated = sin(count * theta), closed = 2^{count-1} prod_{k=0}^{count-1} sin(theta + k pi/count).
ProductCheck sine_multiple_angle(std::size_t count, double theta);

struct TrigProducts {
  std::size_t r = 0;
  ProductCheck sine_angles;     // prod sin(alpha_k)
  ProductCheck cos_half_betas;  // prod cos(beta_k / 2)
  ProductCheck cos_fractions;   // m = r - 1, the instance behind cos_half_betas
  ProductCheck sine_multiple;   // count = r at theta = -pi/(2r)
};

/// Throws std::out_of_range for r == 0.
TrigProducts trig_product_identities(std::size_t r);

struct EigenWalkOptions {
  double singular_tol = 1e-12;  // |det Xi| relative to prod ||xi_j||_2
  double zero_tol = 1e-9;       // |e^T xi| relative to ||xi||_1
  double distinct_tol = 1e-9;   // eigenvalue gap relative to max(1, max |lambda|)
  double residual_tol = 1e-8;   // ||M^T xi - lambda xi||_inf, scaled
};

struct EigenWalkEstimate {
  double det = 0.0;
  /// Empty when eigenvalues are not pairwise distinct.
  std::optional<std::size_t> rank;
  double eigenvector_det = 0.0;
};

/// det W(M) = prod_{k<j}(lambda_j - lambda_k) prod_j e^T xi_j / det[xi_1 ... xi_n]
/// and rank W(M) = #{ j : e^T xi_j != 0 } from eigenpairs of M^T.
///
/// Throws std::invalid_argument when shapes disagree or a pair is not an
/// eigenpair of M^T, and std::domain_error for a numerically singular
/// eigenvector matrix.
EigenWalkEstimate walk_det_and_rank_via_eigen(const Eigen::MatrixXd& m,
                                              std::span<const double> eigvals,
                                              std::span<const Eigen::VectorXd> eigvecs,
                                              const EigenWalkOptions& opts = {});

Eigen::MatrixXd to_real(const IntMatrix& m);

/// ||(B + D-bar)^T v_k - lambda_k v_k||_inf for each k, with B and D-bar built
/// exactly by the graph code for A_n.
std::vector<double> eigen_residuals(std::size_t n);

}  // namespace qwalk
