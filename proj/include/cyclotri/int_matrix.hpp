#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclotri {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix transposed() const;
  bool is_zero() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// u * m * v = d, d diagonal with d_1 | d_2 | ... and non-negative entries.
struct SmithForm {
  std::vector<Integer> factors;  ///< non-zero diagonal entries, in order
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inverse;
  IntMatrix d;

  std::size_t rank() const { return factors.size(); }
};

/// Smallest-magnitude pivoting with row and column reduction.  The result is
/// checked (u*m*v == d) before returning.
SmithForm smith_normal_form(const IntMatrix& m);

/// Invariant factors of the group Z_{e_1} + ... + Z_{e_k} (entries >= 1;
/// ones are dropped from the result).
std::vector<Integer> invariant_factors_of(const std::vector<Integer>& cyclic_orders);

}  // namespace cyclotri
