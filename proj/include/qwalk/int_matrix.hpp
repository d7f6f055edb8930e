#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qwalk {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// 0x0, 0xN and Nx0 shapes are all legal. Every matrix in the library
/// (adjacency, degree, walk, characteristic, divisor) is carried by this type;
/// column vectors are n x 1 matrices.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument unless entries.size() == rows * cols.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// The all-ones column vector e_n.
  static IntMatrix ones(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Bounds-checked access; throws std::out_of_range.
  const BigInt& at(std::size_t i, std::size_t j) const;

  std::span<const BigInt> entries() const noexcept { return entries_; }
  std::span<const BigInt> row(std::size_t i) const {
    return std::span<const BigInt>(entries_).subspan(i * cols_, cols_);
  }

  IntMatrix column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Exact product; throws std::invalid_argument when a.cols() != b.rows().
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }
inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) { return mat_add(a, b); }

/// Leading k x k principal submatrix. Throws when k exceeds either dimension.
IntMatrix principal_submatrix(const IntMatrix& m, std::size_t k);

/// Rows in `row_idx` and columns in `col_idx`, in the given order.
IntMatrix submatrix(const IntMatrix& m, std::span<const std::size_t> row_idx,
                    std::span<const std::size_t> col_idx);

/// Block-diagonal m (+) O_z, the zero padding used to compare reduced walk
/// matrices with full ones.
IntMatrix pad_with_zeros(const IntMatrix& m, std::size_t z);

std::string to_string(const BigInt& v);

}  // namespace qwalk
