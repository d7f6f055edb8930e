// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qwalk/closed_form.hpp"
#include "qwalk/exact.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/verifier.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

// Pinned tolerances.
constexpr double kResidualTol = 1e-8;
constexpr double kDotRelTol = 1e-9;
constexpr double kTrigRelTol = 1e-10;
constexpr double kVandermondeRelTol = 1e-8;
constexpr double kEigenDetRelTol = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::string str(const BigInt& v) { return to_string(v); }

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + str(x);
  return s;
}

std::vector<BigInt> expected_snf_diagonal(std::size_t n) {
  const std::size_t r = half_up(n);
  std::vector<BigInt> d{1};
  for (std::size_t i = 1; i < r; ++i) d.emplace_back(2);
  return d;
}

Outcome ac1() {
  Outcome o;
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto s = smith_normal_form(q_walk_matrix(dynkin_a(n)).matrix);
    // full diagonal: r nonzero factors followed by n - r zeros
    if (s.invariant_factors != expected_snf_diagonal(n) || s.rank != half_up(n))
      fail(o, "n=" + std::to_string(n) + " got " + join(s.invariant_factors));
  }
  if (o.pass) o.detail = "n=1..40 diag(1,2,...,2,0,...,0)";
  return o;
}

Outcome ac2() {
  Outcome o;
  for (std::size_t n = 1; n <= 60; ++n) {
    const auto rank = rank_exact(q_walk_matrix(dynkin_a(n)).matrix);
    if (rank != half_up(n))
      fail(o, "n=" + std::to_string(n) + " rank " + std::to_string(rank));
  }
  if (o.pass) o.detail = "n=1..60";
  return o;
}

Outcome ac3() {
  Outcome o;
  for (std::size_t n = 2; n <= 40; ++n) {
    const BigInt d = det_exact(reduced_q_walk_matrix(n));
    BigInt want;
    mpz_ui_pow_ui(want.get_mpz_t(), 2, half_up(n) - 1);
    if (d != want) fail(o, "n=" + std::to_string(n) + " det " + str(d));
  }
  if (o.pass) o.detail = "n=2..40 det = 2^(r-1)";
  return o;
}

// Reference fixtures, verbatim.
const IntMatrix kFixtureWq3 = IntMatrix::from_rows({{1, 2, 6}, {1, 4, 12}, {1, 2, 6}});
const IntMatrix kFixtureReducedWq3 = IntMatrix::from_rows({{1, 2}, {1, 4}});
const IntMatrix kFixtureWq10 = IntMatrix::from_rows({
    {1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620},
    {1, 4, 14, 50, 182, 672, 2508, 9438, 35750, 136134},
    {1, 4, 16, 62, 238, 912, 3498, 13442, 51764, 199746},
    {1, 4, 16, 64, 254, 1002, 3938, 15442, 60468, 236568},
    {1, 4, 16, 64, 256, 1002, 4068, 16142, 63868, 252072},
    {1, 4, 16, 64, 256, 1002, 4068, 16142, 63868, 252072},
    {1, 4, 16, 64, 254, 1002, 3938, 15442, 60468, 236568},
    {1, 4, 16, 62, 238, 912, 3498, 13442, 51764, 199746},
    {1, 4, 14, 50, 182, 672, 2508, 9438, 35750, 136134},
    {1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620},
});
const IntMatrix kFixtureReducedWq10 = IntMatrix::from_rows({{1, 2, 6, 20, 70},
                                                            {1, 4, 14, 50, 182},
                                                            {1, 4, 16, 62, 238},
                                                            {1, 4, 16, 64, 254},
                                                            {1, 4, 16, 64, 256}});

void compare_fixture(Outcome& o, const char* name, const IntMatrix& got, const IntMatrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) {
    fail(o, std::string(name) + " shape mismatch");
    return;
  }
  std::string diffs;
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = 0; j < got.cols(); ++j)
      if (got(i, j) != want(i, j))
        diffs += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") computed " +
                 str(got(i, j)) + " fixture " + str(want(i, j));
  if (!diffs.empty()) {
    o.pass = false;
    o.detail += std::string(o.detail.empty() ? "" : " ") + name + ":" + diffs;
  }
}

Outcome ac4() {
  Outcome o;
  compare_fixture(o, "W_Q(A_3)", q_walk_matrix(dynkin_a(3)).matrix, kFixtureWq3);
  compare_fixture(o, "reduced W_Q(A_3)", reduced_q_walk_matrix(3), kFixtureReducedWq3);
  compare_fixture(o, "W_Q(A_10)", q_walk_matrix(dynkin_a(10)).matrix, kFixtureWq10);
  compare_fixture(o, "reduced W_Q(A_10)", reduced_q_walk_matrix(10), kFixtureReducedWq10);
  if (o.pass) o.detail = "all four fixtures bit-exact";
  return o;
}

Outcome ac5() {
  Outcome o;
  for (std::size_t n = 2; n <= 60; ++n)
    if (reduced_q_walk_matrix(n) != walk_matrix(reduced_generator(n)).matrix)
      fail(o, "n=" + std::to_string(n));
  if (o.pass) o.detail = "n=2..60";
  return o;
}

Outcome ac6() {
  Outcome o;
  for (std::size_t n = 2; n <= 60; ++n) {
    const auto w = q_walk_matrix(dynkin_a(n)).matrix;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (w(i, j) != w(n - 1 - i, j)) fail(o, "n=" + std::to_string(n) + " row " + std::to_string(i + 1));
  }
  if (o.pass) o.detail = "n=2..60";
  return o;
}

Outcome ac7() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 128; ++n)
    for (double res : eigen_residuals(n)) {
      worst = std::max(worst, res);
      if (!(res <= kResidualTol)) fail(o, "n=" + std::to_string(n));
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "n=1..128 max residual %.3g (tol %.0e)", worst, kResidualTol);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome ac8() {
  Outcome o;
  double worst_dot = 0.0, worst_trig = 0.0;
  for (std::size_t r = 1; r <= 30; ++r)
    for (Parity p : {Parity::even, Parity::odd}) {
      const double scale = std::ldexp(1.0, static_cast<int>(r) - 1);
      const double err = std::abs(dot_product_evaluated(r, p) - dot_product_formula(r, p)) / scale;
      worst_dot = std::max(worst_dot, err);
      if (!(err <= kDotRelTol)) fail(o, "dot product r=" + std::to_string(r));
    }
  for (std::size_t r = 1; r <= 40; ++r) {
    const auto t = trig_product_identities(r);
    for (double e : {t.sine_angles.relative_error(), t.cos_half_betas.relative_error()}) {
      worst_trig = std::max(worst_trig, e);
      if (!(e <= kTrigRelTol)) fail(o, "trig product r=" + std::to_string(r));
    }
  }
  for (std::size_t m = 1; m <= 40; ++m) {
    const double e = cos_fraction_product(m).relative_error();
    worst_trig = std::max(worst_trig, e);
    if (!(e <= kTrigRelTol)) fail(o, "cos fraction m=" + std::to_string(m));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "dot rel err %.3g (r<=30), trig rel err %.3g (r,m<=40)", worst_dot,
                worst_trig);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome ac9() {
  Outcome o;
  std::mt19937_64 rng(0xacc9);
  std::uniform_int_distribution<std::size_t> qd(2, 8);
  std::uniform_real_distribution<double> td(0.0, std::numbers::pi);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> th(qd(rng));
    for (auto& x : th) {
      do x = td(rng); while (x == 0.0);
    }
    const double closed = cosine_vandermonde_det(th);
    const double lu = cosine_vandermonde_matrix_det(th);
    const double rel = std::abs(lu - closed) / std::abs(closed);
    worst = std::max(worst, rel);
    if (!(rel <= kVandermondeRelTol)) fail(o, "tuple " + std::to_string(t) + " q=" + std::to_string(th.size()));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "100 tuples, q<=8, max rel err %.3g", worst);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome ac10() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto gen = reduced_generator(n);
    std::vector<double> vals;
    std::vector<Eigen::VectorXd> vecs;
    for (const auto& p : eigenpairs_for_n(n)) {
      vals.push_back(p.eigenvalue);
      vecs.push_back(p.vector);
    }
    const auto est = walk_det_and_rank_via_eigen(to_real(gen), vals, vecs);
    const auto w = walk_matrix(gen).matrix;
    if (!est.rank || *est.rank != rank_exact(w)) fail(o, "rank n=" + std::to_string(n));
    if (n <= 24) {
      const double exact = det_exact(w).get_d();
      const double rel = std::abs(est.det - exact) / std::abs(exact);
      worst = std::max(worst, rel);
      if (!(rel <= kEigenDetRelTol)) fail(o, "det n=" + std::to_string(n));
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "rank n<=30, det n<=24 max rel err %.3g", worst);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome ac11() {
  Outcome o;
  const auto a = oracle_snf_fuzz(200, 4, 9);
  const auto b = oracle_snf_fuzz(100, 5, 9);
  if (!a.passed()) fail(o, std::to_string(a.mismatches) + " mismatches on 4x4");
  if (!b.passed()) fail(o, std::to_string(b.mismatches) + " mismatches on 5x5");
  if (o.pass) o.detail = "200 4x4 + 100 5x5, zero mismatches";
  return o;
}

Outcome ac12() {
  Outcome o;
  for (std::size_t n = 2; n <= 60; ++n) {
    const auto g = dynkin_a(n);
    const auto p = partition_pi(n);
    const std::string tag = "n=" + std::to_string(n);
    if (!is_equitable(g, p)) {
      fail(o, tag + " not equitable");
      continue;
    }
    const auto q = quotient(g, p);
    const auto& c = q.characteristic;
    if (adjacency_matrix(g) * c != c * q.divisor) fail(o, tag + " A*C != C*B");
    if (degree_matrix(g) * c != c * reduced_degree_matrix(n)) fail(o, tag + " D*C != C*Dbar");
    if (c * IntMatrix::ones(half_up(n)) != IntMatrix::ones(n)) fail(o, tag + " C*e != e");
  }
  if (o.pass) o.detail = "n=2..60";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 Smith normal form of W_Q(A_n)", ac1},
      {"AC2 rank of W_Q(A_n)", ac2},
      {"AC3 reduced determinant", ac3},
      {"AC4 golden fixtures", ac4},
      {"AC5 reduced matrix is the quotient walk matrix", ac5},
      {"AC6 mirror row symmetry", ac6},
      {"AC7 eigenpair residuals", ac7},
      {"AC8 product identities", ac8},
      {"AC9 cosine Vandermonde determinant", ac9},
      {"AC10 eigen determinant and rank criteria", ac10},
      {"AC11 SNF oracle equivalence", ac11},
      {"AC12 equitable partition identities", ac12},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.1f ms)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), ms);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
