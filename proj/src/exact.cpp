#include "qwalk/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace qwalk {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// Fraction-free forward elimination in place. Returns the rank and leaves the
// last pivot (the determinant up to sign, for square full-rank input) plus the
// swap parity.
struct BareissOutcome {
  std::size_t rank = 0;
  BigInt last_pivot = 1;
  bool odd_swaps = false;
};

BareissOutcome bareiss(IntMatrix& a) {
  BareissOutcome out;
  BigInt prev = 1;
  BigInt t;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      swap_rows(a, p, row);
      out.odd_swaps = !out.odd_swaps;
    }
    const BigInt& piv = a(row, col);
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        t = piv * a(i, j) - a(i, col) * a(row, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(row, col);
    ++row;
  }
  out.rank = row;
  out.last_pivot = prev;
  return out;
}

// Working state for the Smith elimination; U and V are updated in lockstep
// when transforms are requested.
class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, bool track)
      : a_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
  }

  std::vector<BigInt> run() {
    std::vector<BigInt> factors;
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_stage(t)) break;
      if (sgn(a_(t, t)) < 0) negate_row(t);
      factors.push_back(a_(t, t));
    }
    return factors;
  }

  SnfTransforms transforms() && { return {std::move(u_), std::move(v_), std::move(a_)}; }

 private:
  // Least |entry| over the working block, ties broken by (row, col).
  bool locate_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const BigInt& v = a_(i, j);
        if (sgn(v) == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), a_(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  bool reduce_stage(std::size_t t) {
    BigInt q;
    for (;;) {
      std::size_t pi = t, pj = t;
      if (!locate_pivot(t, pi, pj)) return false;
      do_swap_rows(t, pi);
      do_swap_cols(t, pj);

      bool clear = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        row_sub(i, t, q);
        if (sgn(a_(i, t)) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        col_sub(j, t, q);
        if (sgn(a_(t, j)) != 0) clear = false;
      }
      if (!clear) continue;

      // Row t and column t are clear; the pivot must divide the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < a_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
            row_sub(t, i, BigInt(-1));
            divides = false;
            break;
          }
      if (divides) return true;
    }
  }

  void do_swap_rows(std::size_t a, std::size_t b) {
    swap_rows(a_, a, b);
    if (track_) swap_rows(u_, a, b);
  }
  void do_swap_cols(std::size_t a, std::size_t b) {
    swap_cols(a_, a, b);
    if (track_) swap_cols(v_, a, b);
  }
  // row dst -= q * row src
  void row_sub(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(dst, j) -= q * a_(src, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) -= q * u_(src, j);
  }
  // col dst -= q * col src
  void col_sub(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, dst) -= q * a_(i, src);
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) -= q * v_(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(r, j) = -a_(r, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
};

// Laplace expansion along the first selected row. Independent of the
// elimination code paths so the oracle can check them.
BigInt cofactor_det(const IntMatrix& m, std::span<const std::size_t> rows,
                    std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return m(rows[0], cols[0]);
  if (k == 2)
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  BigInt total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const BigInt& e = m(rows[0], cols[c]);
    if (sgn(e) == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j)
      if (j != c) rest.push_back(cols[j]);
    BigInt sub = cofactor_det(m, rows.subspan(1), rest);
    if (c % 2 == 0)
      total += e * sub;
    else
      total -= e * sub;
  }
  return total;
}

// Advances `idx` to the next i-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t rank_exact(const IntMatrix& m) {
  IntMatrix work = m;
  return bareiss(work).rank;
}

BigInt det_exact(const IntMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("det_exact: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", not square");
  if (m.rows() == 0) return 1;
  IntMatrix work = m;
  const auto out = bareiss(work);
  if (out.rank < m.rows()) return 0;
  return out.odd_swaps ? BigInt(-out.last_pivot) : out.last_pivot;
}

SnfResult smith_normal_form(const IntMatrix& m, const SnfOptions& opts) {
  SmithReducer reducer(m, opts.with_transforms);
  SnfResult res;
  res.invariant_factors = reducer.run();
  res.rank = res.invariant_factors.size();
  if (opts.with_transforms) res.transforms = std::move(reducer).transforms();

  if (opts.with_divisors && std::min(m.rows(), m.cols()) <= opts.oracle_cap) {
    auto divisors = determinant_divisors(m, opts.oracle_cap);
    if (invariant_factors_from_divisors(divisors) != res.invariant_factors)
      throw std::logic_error("smith_normal_form: elimination disagrees with determinant divisors");
    res.determinant_divisors = std::move(divisors);
  }
  return res;
}

SnfResult smith_normal_form(const IntMatrix& m, bool with_divisors) {
  SnfOptions opts;
  opts.with_divisors = with_divisors;
  return smith_normal_form(m, opts);
}

BigInt determinant_divisor_oracle(const IntMatrix& m, std::size_t i, std::size_t cap) {
  const std::size_t lim = std::min(m.rows(), m.cols());
  if (i < 1 || i > lim)
    throw std::out_of_range("determinant_divisor_oracle: order " + std::to_string(i) +
                            " outside 1.." + std::to_string(lim));
  if (lim > cap)
    throw std::length_error("determinant_divisor_oracle: min dimension " + std::to_string(lim) +
                            " exceeds oracle cap " + std::to_string(cap));

  BigInt g = 0;
  std::vector<std::size_t> rows(i), cols(i);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  do {
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    do {
      std::vector<std::size_t> c = cols;
      g = gcd(g, cofactor_det(m, rows, c));
      if (g == 1) return g;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return g;
}

std::vector<BigInt> determinant_divisors(const IntMatrix& m, std::size_t cap) {
  std::vector<BigInt> out;
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t i = 1; i <= lim; ++i) {
    BigInt d = determinant_divisor_oracle(m, i, cap);
    if (sgn(d) == 0) break;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<BigInt> invariant_factors_from_divisors(std::span<const BigInt> divisors) {
  std::vector<BigInt> out;
  out.reserve(divisors.size());
  BigInt prev = 1;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const BigInt& d = divisors[i];
    if (sgn(d) == 0)
      throw std::domain_error("invariant_factors_from_divisors: D(" + std::to_string(i + 1) +
                              ") is zero");
    if (!mpz_divisible_p(d.get_mpz_t(), prev.get_mpz_t()))
      throw std::domain_error("invariant_factors_from_divisors: D(" + std::to_string(i) +
                              ") does not divide D(" + std::to_string(i + 1) + ")");
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

}  // namespace qwalk
