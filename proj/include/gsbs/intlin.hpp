#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "gsbs/bigint.hpp"

namespace gsbs {

/// Dense row-major matrix over the integers. All arithmetic is exact.
class IntMatrix
{
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<BigInt const> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  BigInt const &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<BigInt> const &entries() const { return data_; }
  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;

  IntMatrix transpose() const;

  friend IntMatrix operator*(IntMatrix const &a, IntMatrix const &b);
  friend IntVector operator*(IntMatrix const &a, IntVector const &v);
  friend IntMatrix operator*(BigInt const &s, IntMatrix const &a);
  friend IntMatrix operator+(IntMatrix const &a, IntMatrix const &b);
  friend IntMatrix operator-(IntMatrix const &a, IntMatrix const &b);
  friend bool operator==(IntMatrix const &a, IntMatrix const &b);

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += f * row j
  void add_row_multiple(std::size_t i, std::size_t j, BigInt const &f);
  /// col i += f * col j
  void add_col_multiple(std::size_t i, std::size_t j, BigInt const &f);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all
/// d_i >= 0 and zeros trailing.
struct SnfDecomposition
{
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// The min(rows, cols) diagonal entries of D.
  IntVector invariant_factors() const;
};

/// Fraction-free (Bareiss) determinant. Throws InvalidInput unless square.
BigInt det(IntMatrix const &a);

/// Laplace expansion along the first row. Exponential; intended as an
/// independent cross-check for small matrices.
BigInt det_cofactor(IntMatrix const &a);

SnfDecomposition smith_normal_form(IntMatrix const &a);

/// Exact inverse of a matrix with determinant +-1 (adjugate / det).
/// Throws InvalidInput if the matrix is not unimodular.
IntMatrix inverse_unimodular(IntMatrix const &a);

bool is_unimodular(IntMatrix const &a);

/// The quotient Z^r / T Z^r for a nonsingular square T, with a fixed list of
/// coset representatives indexed in mixed radix over the invariant factors.
class Cokernel
{
public:
  explicit Cokernel(IntMatrix const &t);

  std::size_t dimension() const { return moduli_.size(); }
  /// |det T|, the number of cosets.
  BigInt const &order() const { return order_; }
  /// Invariant factors d_1 | ... | d_r of T.
  IntVector const &moduli() const { return moduli_; }
  SnfDecomposition const &snf() const { return snf_; }

  /// Mixed-radix index of the coset containing v (first coordinate least
  /// significant). Requires order() to fit in 64 bits.
  std::uint64_t index_of(IntVector const &v) const;
  IntVector representative(std::uint64_t index) const;
  /// representative(index_of(v))
  IntVector reduce(IntVector const &v) const;

  /// Unique integral k with T k == b, if any.
  std::optional<IntVector> solve(IntVector const &b) const;

private:
  IntMatrix t_;
  SnfDecomposition snf_;
  IntMatrix u_inverse_;
  IntVector moduli_;
  BigInt order_;
};

/// One representative per coset of T Z^r, |det T| of them.
/// Throws Unsupported for singular T, InvalidInput for non-square T.
std::vector<IntVector> cokernel_representatives(IntMatrix const &t);

/// The unique rational solution of T k = b when it is integral.
/// Throws Unsupported for singular T.
std::optional<IntVector> solve_integral(IntMatrix const &t, IntVector const &b);

} // namespace gsbs
