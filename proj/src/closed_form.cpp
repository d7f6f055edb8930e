#include "qwalk/closed_form.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

void require_n(std::size_t n, const char* who) {
  if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be at least 1");
}

void require_index(std::size_t r, std::size_t k, const char* who) {
  if (r == 0) throw std::out_of_range(std::string(who) + ": r must be at least 1");
  if (k < 1 || k > r)
    throw std::out_of_range(std::string(who) + ": k = " + std::to_string(k) + " outside 1.." +
                            std::to_string(r));
}

double sign_pow(std::size_t e) { return e % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

std::size_t predicted_rank(std::size_t n) {
  require_n(n, "predicted_rank");
  return half_up(n);
}

SnfPrediction predicted_snf(std::size_t n) {
  SnfPrediction p;
  p.n = n;
  p.rank = predicted_rank(n);
  p.factors.assign(p.rank, BigInt(2));
  p.factors.front() = 1;
  p.zeros = n - p.rank;
  return p;
}

BigInt predicted_reduced_det(std::size_t n) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, predicted_rank(n) - 1);
  return d;
}

EigenpairPrediction eigenpair_even(std::size_t r, std::size_t k) {
  require_index(r, k, "eigenpair_even");
  EigenpairPrediction e;
  e.k = k;
  e.family = Parity::even;
  e.angle = static_cast<double>(2 * k - 1) * kPi / static_cast<double>(2 * r);
  e.eigenvalue = 2.0 - 2.0 * std::cos(e.angle);
  e.vector.resize(static_cast<Eigen::Index>(r));
  // Walk upward from the last entry, extending the cosine sum by one term.
  double partial = 1.0;
  for (std::size_t depth = 0; depth < r; ++depth) {
    if (depth > 0) partial += 2.0 * std::cos(static_cast<double>(depth) * e.angle);
    e.vector[static_cast<Eigen::Index>(r - 1 - depth)] = sign_pow(depth) * partial;
  }
  return e;
}

EigenpairPrediction eigenpair_odd(std::size_t r, std::size_t k) {
  require_index(r, k, "eigenpair_odd");
  EigenpairPrediction e;
  e.k = k;
  e.family = Parity::odd;
  e.angle = static_cast<double>(2 * k - 2) * kPi / static_cast<double>(2 * r - 1);
  e.eigenvalue = 2.0 - 2.0 * std::cos(e.angle);
  e.vector.resize(static_cast<Eigen::Index>(r));
  for (std::size_t j = 1; j < r; ++j) {
    const std::size_t depth = r - j;
    e.vector[static_cast<Eigen::Index>(j - 1)] =
        sign_pow(depth) * 2.0 * std::cos(static_cast<double>(depth) * e.angle);
  }
  e.vector[static_cast<Eigen::Index>(r - 1)] = 1.0;
  return e;
}

EigenpairPrediction eigenpair_for_n(std::size_t n, std::size_t k) {
  require_n(n, "eigenpair_for_n");
  return parity_of(n) == Parity::even ? eigenpair_even(half_up(n), k)
                                      : eigenpair_odd(half_up(n), k);
}

std::vector<EigenpairPrediction> eigenpairs_for_n(std::size_t n) {
  require_n(n, "eigenpairs_for_n");
  std::vector<EigenpairPrediction> out;
  for (std::size_t k = 1; k <= half_up(n); ++k) out.push_back(eigenpair_for_n(n, k));
  return out;
}

double dot_product_formula(std::size_t r, Parity) {
  if (r == 0) throw std::out_of_range("dot_product_formula: r must be at least 1");
  return sign_pow(r / 2) * std::ldexp(1.0, static_cast<int>(r) - 1);
}

double dot_product_evaluated(std::size_t r, Parity parity) {
  if (r == 0) throw std::out_of_range("dot_product_evaluated: r must be at least 1");
  double prod = 1.0;
  for (std::size_t k = 1; k <= r; ++k) {
    const auto e = parity == Parity::even ? eigenpair_even(r, k) : eigenpair_odd(r, k);
    prod *= e.vector.sum();
  }
  return prod;
}

double cosine_vandermonde_det(std::span<const double> thetas) {
  if (thetas.empty()) throw std::invalid_argument("cosine_vandermonde_det: no angles");
  double prod = 1.0;
  for (std::size_t i = 0; i < thetas.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) prod *= 2.0 * std::cos(thetas[i]) - 2.0 * std::cos(thetas[j]);
  return prod;
}

Eigen::MatrixXd cosine_vandermonde_matrix(std::span<const double> thetas) {
  const auto q = static_cast<Eigen::Index>(thetas.size());
  Eigen::MatrixXd m(q, q);
  for (Eigen::Index j = 0; j < q; ++j) {
    m(0, j) = 1.0;
    for (Eigen::Index i = 1; i < q; ++i)
      m(i, j) = 2.0 * std::cos(static_cast<double>(i) * thetas[static_cast<std::size_t>(j)]);
  }
  return m;
}

double cosine_vandermonde_matrix_det(std::span<const double> thetas) {
  if (thetas.empty()) throw std::invalid_argument("cosine_vandermonde_matrix_det: no angles");
  return cosine_vandermonde_matrix(thetas).partialPivLu().determinant();
}

double ProductCheck::relative_error() const {
  const double diff = std::abs(evaluated - closed);
  return closed == 0.0 ? diff : diff / std::abs(closed);
}

ProductCheck sine_angle_product(std::size_t r) {
  if (r == 0) throw std::out_of_range("sine_angle_product: r must be at least 1");
  ProductCheck c{1.0, std::ldexp(1.0, 1 - static_cast<int>(r))};
  for (std::size_t k = 1; k <= r; ++k) c.evaluated *= std::sin(eigenpair_even(r, k).angle);
  return c;
}

ProductCheck cos_half_beta_product(std::size_t r) {
  if (r == 0) throw std::out_of_range("cos_half_beta_product: r must be at least 1");
  ProductCheck c{1.0, std::ldexp(1.0, 1 - static_cast<int>(r))};
  for (std::size_t k = 1; k <= r; ++k) c.evaluated *= std::cos(eigenpair_odd(r, k).angle / 2.0);
  return c;
}

ProductCheck cos_fraction_product(std::size_t m) {
  ProductCheck c{1.0, std::ldexp(1.0, -static_cast<int>(m))};
  for (std::size_t k = 1; k <= m; ++k)
    c.evaluated *= std::cos(static_cast<double>(k) * kPi / static_cast<double>(2 * m + 1));
  return c;
}

ProductCheck sine_multiple_angle(std::size_t count, double theta) {
  if (count == 0) throw std::out_of_range("sine_multiple_angle: count must be at least 1");
  const double nd = static_cast<double>(count);
  ProductCheck c{std::sin(nd * theta), std::ldexp(1.0, static_cast<int>(count) - 1)};
  for (std::size_t k = 0; k < count; ++k)
    c.closed *= std::sin(theta + static_cast<double>(k) * kPi / nd);
  return c;
}

TrigProducts trig_product_identities(std::size_t r) {
  if (r == 0) throw std::out_of_range("trig_product_identities: r must be at least 1");
  TrigProducts t;
  t.r = r;
  t.sine_angles = sine_angle_product(r);
  t.cos_half_betas = cos_half_beta_product(r);
  t.cos_fractions = cos_fraction_product(r - 1);
  t.sine_multiple = sine_multiple_angle(r, -kPi / static_cast<double>(2 * r));
  return t;
}

EigenWalkEstimate walk_det_and_rank_via_eigen(const Eigen::MatrixXd& m,
                                              std::span<const double> eigvals,
                                              std::span<const Eigen::VectorXd> eigvecs,
                                              const EigenWalkOptions& opts) {
  const auto n = m.rows();
  if (m.cols() != n || n == 0)
    throw std::invalid_argument("walk_det_and_rank_via_eigen: M must be square and non-empty");
  if (eigvals.size() != static_cast<std::size_t>(n) || eigvecs.size() != eigvals.size())
    throw std::invalid_argument("walk_det_and_rank_via_eigen: need n eigenpairs");

  const Eigen::MatrixXd mt = m.transpose();
  const double scale = std::max(1.0, m.lpNorm<Eigen::Infinity>());
  Eigen::MatrixXd xi(n, n);
  double norm_prod = 1.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& v = eigvecs[static_cast<std::size_t>(j)];
    if (v.size() != n) throw std::invalid_argument("walk_det_and_rank_via_eigen: vector length");
    const double lam = eigvals[static_cast<std::size_t>(j)];
    const double res = (mt * v - lam * v).lpNorm<Eigen::Infinity>();
    if (res > opts.residual_tol * scale * std::max(1.0, v.lpNorm<Eigen::Infinity>()))
      throw std::invalid_argument("walk_det_and_rank_via_eigen: pair " + std::to_string(j + 1) +
                                  " is not an eigenpair of M^T");
    xi.col(j) = v;
    norm_prod *= v.norm();
  }

  EigenWalkEstimate est;
  est.eigenvector_det = xi.partialPivLu().determinant();
  if (!(std::abs(est.eigenvector_det) > opts.singular_tol * norm_prod))
    throw std::domain_error("walk_det_and_rank_via_eigen: eigenvectors are numerically dependent");

  double vandermonde = 1.0, lam_max = 1.0, min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < eigvals.size(); ++j) {
    lam_max = std::max(lam_max, std::abs(eigvals[j]));
    for (std::size_t k = 0; k < j; ++k) {
      vandermonde *= eigvals[j] - eigvals[k];
      min_gap = std::min(min_gap, std::abs(eigvals[j] - eigvals[k]));
    }
  }

  double dots = 1.0;
  std::size_t nonzero = 0;
  for (const auto& v : eigvecs) {
    const double d = v.sum();
    dots *= d;
    if (std::abs(d) > opts.zero_tol * v.lpNorm<1>()) ++nonzero;
  }
  est.det = vandermonde * dots / est.eigenvector_det;
  if (min_gap > opts.distinct_tol * lam_max) est.rank = nonzero;
  return est;
}

Eigen::MatrixXd to_real(const IntMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

std::vector<double> eigen_residuals(std::size_t n) {
  require_n(n, "eigen_residuals");
  const Eigen::MatrixXd gt = to_real(reduced_generator(n)).transpose();
  std::vector<double> out;
  for (const auto& e : eigenpairs_for_n(n))
    out.push_back((gt * e.vector - e.eigenvalue * e.vector).lpNorm<Eigen::Infinity>());
  return out;
}

}  // namespace qwalk
