#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "locobs/abelian_group.hpp"
#include "locobs/integer.hpp"

namespace locobs {

/// Dense row-major matrix of arbitrary-precision integers. 0x0 is the empty
/// matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_int64(std::size_t rows, std::size_t cols,
                              std::span<const std::int64_t> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  IntMatrix transpose() const;
  /// Leading k x k principal submatrix.
  IntMatrix leading_minor(std::size_t k) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);

/// Kronecker product a (x) b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination. Throws
/// DimensionError for non-square input. det of the 0x0 matrix is 1.
Integer determinant(const IntMatrix& m);

/// u * m * v == d with u, v unimodular and d diagonal, nonnegative, and in
/// divisibility order. invariant_factors is the diagonal of d, length
/// min(rows, cols), unit factors included.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::vector<Integer> invariant_factors;
};

/// Smith normal form by unimodular row and column operations. The pivot at
/// each stage is the nonzero entry of least absolute value in the remaining
/// submatrix, ties going to the lexicographically smallest (row, col), so the
/// decomposition is a deterministic function of the input.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// coker(m : Z^n -> Z^n) = torsion + Z^free_rank.
struct Cokernel {
  FiniteAbelianGroup torsion;
  std::size_t free_rank = 0;

  friend bool operator==(const Cokernel&, const Cokernel&) = default;
};

Cokernel cokernel(const IntMatrix& m);

/// Sylvester's criterion on exact leading principal minors. Non-square or
/// asymmetric input is a ValidationError.
bool is_negative_definite(const IntMatrix& m);
bool is_positive_definite(const IntMatrix& m);

}  // namespace locobs
