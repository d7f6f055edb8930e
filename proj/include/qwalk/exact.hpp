#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/int_matrix.hpp"

namespace qwalk {

/// Non-negative gcd with gcd(0, 0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const IntMatrix& m);

/// Exact determinant by fraction-free elimination. Throws
/// std::invalid_argument for non-square input; det of the 0x0 matrix is 1.
BigInt det_exact(const IntMatrix& m);

/// Unimodular U, V with U * m * V equal to the diagonal Smith form.
struct SnfTransforms {
  IntMatrix left;   // rows x rows
  IntMatrix right;  // cols x cols
  IntMatrix diagonal;
};

struct SnfResult {
  std::size_t rank = 0;
  std::vector<BigInt> invariant_factors;                  // d_1 | d_2 | ... | d_r, all > 0
  std::optional<std::vector<BigInt>> determinant_divisors;  // D(1)..D(r)
  std::optional<SnfTransforms> transforms;

  friend bool operator==(const SnfResult& a, const SnfResult& b) {
    return a.rank == b.rank && a.invariant_factors == b.invariant_factors &&
           a.determinant_divisors == b.determinant_divisors;
  }
};

inline constexpr std::size_t kDefaultOracleCap = 6;

struct SnfOptions {
  bool with_divisors = false;
  bool with_transforms = false;
  std::size_t oracle_cap = kDefaultOracleCap;
};

/// Smith normal form by integer row/column elimination.
///
/// Each stage moves the nonzero entry of least absolute value in the working
/// submatrix (ties: lowest row, then lowest column) to the pivot position,
/// clears its row and column with Euclidean steps and, when the pivot fails to
/// divide some remaining entry, folds that entry's row into the pivot row and
/// repeats. Invariant factors are reported positive.
///
/// With `with_divisors` set and min(rows, cols) <= oracle_cap, D(1)..D(r) are
/// filled from determinant_divisor_oracle and cross-checked against the
/// elimination result; a disagreement throws std::logic_error.
SnfResult smith_normal_form(const IntMatrix& m, const SnfOptions& opts);
SnfResult smith_normal_form(const IntMatrix& m, bool with_divisors = false);

/// D(i): gcd of all i x i minors, by exhaustive enumeration with cofactor
/// expansion. Returns 0 when every i-minor vanishes and stops early once the
/// running gcd reaches 1.
///
/// Throws std::out_of_range unless 1 <= i <= min(rows, cols), and
/// std::length_error when min(rows, cols) exceeds `cap`.
BigInt determinant_divisor_oracle(const IntMatrix& m, std::size_t i,
                                  std::size_t cap = kDefaultOracleCap);

/// The maximal nonzero prefix D(1)..D(r) of the determinant divisors.
std::vector<BigInt> determinant_divisors(const IntMatrix& m, std::size_t cap = kDefaultOracleCap);

/// d_i = D(i) / D(i-1) with D(0) = 1. Throws std::domain_error on a zero
/// divisor or when D(i-1) does not divide D(i).
std::vector<BigInt> invariant_factors_from_divisors(std::span<const BigInt> divisors);

}  // namespace qwalk
