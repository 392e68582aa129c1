#include "gsbs/intlin.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gsbs/error.hpp"

namespace gsbs {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
  : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
  : rows_(rows), cols_(cols), data_(std::move(entries))
{
  if (data_.size() != rows_ * cols_)
    throw InvalidInput("matrix entry count " + std::to_string(data_.size()) +
                       " does not match shape " + std::to_string(rows_) + "x" +
                       std::to_string(cols_));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (auto const &row : rows) {
    if (row.size() != cols_)
      throw InvalidInput("ragged matrix literal");
    for (long v : row)
      data_.emplace_back(v);
  }
}

IntMatrix
IntMatrix::identity(std::size_t n)
{
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix
IntMatrix::diagonal(std::span<BigInt const> d)
{
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

IntVector
IntMatrix::column(std::size_t j) const
{
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

IntVector
IntMatrix::row(std::size_t i) const
{
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntMatrix
IntMatrix::transpose() const
{
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix
operator*(IntMatrix const &a, IntMatrix const &b)
{
  if (a.cols_ != b.rows_)
    throw InvalidInput("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      BigInt const &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector
operator*(IntMatrix const &a, IntVector const &v)
{
  if (a.cols_ != v.size())
    throw InvalidInput("matrix-vector shape mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      out[i] += a(i, j) * v[j];
  return out;
}

IntMatrix
operator*(BigInt const &s, IntMatrix const &a)
{
  IntMatrix c = a;
  for (auto &x : c.data_)
    x *= s;
  return c;
}

IntMatrix
operator+(IntMatrix const &a, IntMatrix const &b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidInput("matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i)
    c.data_[i] += b.data_[i];
  return c;
}

IntMatrix
operator-(IntMatrix const &a, IntMatrix const &b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidInput("matrix difference shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i)
    c.data_[i] -= b.data_[i];
  return c;
}

bool
operator==(IntMatrix const &a, IntMatrix const &b)
{
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void
IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
  if (i == j)
    return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap((*this)(i, k), (*this)(j, k));
}

void
IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
  if (i == j)
    return;
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap((*this)(k, i), (*this)(k, j));
}

void
IntMatrix::add_row_multiple(std::size_t i, std::size_t j, BigInt const &f)
{
  for (std::size_t k = 0; k < cols_; ++k)
    (*this)(i, k) += f * (*this)(j, k);
}

void
IntMatrix::add_col_multiple(std::size_t i, std::size_t j, BigInt const &f)
{
  for (std::size_t k = 0; k < rows_; ++k)
    (*this)(k, i) += f * (*this)(k, j);
}

void
IntMatrix::negate_row(std::size_t i)
{
  for (std::size_t k = 0; k < cols_; ++k)
    (*this)(i, k) = -(*this)(i, k);
}

void
IntMatrix::negate_col(std::size_t i)
{
  for (std::size_t k = 0; k < rows_; ++k)
    (*this)(k, i) = -(*this)(k, i);
}

IntVector
SnfDecomposition::invariant_factors() const
{
  std::size_t const n = std::min(D.rows(), D.cols());
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i)
    d[i] = D(i, i);
  return d;
}

namespace {

void
require_square(IntMatrix const &a, char const *what)
{
  if (!a.square())
    throw InvalidInput(std::string(what) + ": matrix must be square, got " +
                       std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

IntMatrix
minor_matrix(IntMatrix const &a, std::size_t skip_row, std::size_t skip_col)
{
  std::size_t const n = a.rows();
  IntMatrix m(n - 1, n - 1);
  for (std::size_t i = 0, mi = 0; i < n; ++i) {
    if (i == skip_row)
      continue;
    for (std::size_t j = 0, mj = 0; j < n; ++j) {
      if (j == skip_col)
        continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

} // namespace

BigInt
det(IntMatrix const &a)
{
  require_square(a, "det");
  std::size_t const n = a.rows();
  if (n == 0)
    return 1;

  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt
det_cofactor(IntMatrix const &a)
{
  require_square(a, "det_cofactor");
  std::size_t const n = a.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return a(0, 0);
  if (n == 2)
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0)
      continue;
    BigInt const term = a(0, j) * det_cofactor(minor_matrix(a, 0, j));
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

SnfDecomposition
smith_normal_form(IntMatrix const &a)
{
  std::size_t const rows = a.rows();
  std::size_t const cols = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto row_op = [&](std::size_t i, std::size_t j, BigInt const &f) {
    d.add_row_multiple(i, j, f);
    u.add_row_multiple(i, j, f);
  };
  auto col_op = [&](std::size_t i, std::size_t j, BigInt const &f) {
    d.add_col_multiple(i, j, f);
    v.add_col_multiple(i, j, f);
  };

  std::size_t const diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0)
            continue;
          BigInt const mag = abs(d(i, j));
          if (!found || mag < best) {
            found = true;
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (!found)
        return {std::move(u), std::move(d), std::move(v)};

      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      BigInt q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_op(i, t, -q);
        if (d(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_op(j, t, -q);
        if (d(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // Enforce d_t | every remaining entry.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_op(t, i, 1);
            clean = false;
            break;
          }
      if (clean)
        break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

bool
is_unimodular(IntMatrix const &a)
{
  return a.square() && abs(det(a)) == 1;
}

IntMatrix
inverse_unimodular(IntMatrix const &a)
{
  require_square(a, "inverse_unimodular");
  BigInt const d = det(a);
  if (abs(d) != 1)
    throw InvalidInput("matrix is not unimodular (det = " + to_string(d) + ")");
  std::size_t const n = a.rows();
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = d;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt c = det(minor_matrix(a, j, i));
      if ((i + j) % 2 == 1)
        c = -c;
      inv(i, j) = c * d; // d == 1/d
    }
  return inv;
}

Cokernel::Cokernel(IntMatrix const &t)
  : t_(t)
{
  require_square(t, "cokernel");
  snf_ = smith_normal_form(t);
  moduli_ = snf_.invariant_factors();
  order_ = 1;
  for (auto const &d : moduli_)
    order_ *= d;
  if (order_ == 0)
    throw Unsupported("singular matrix: cokernel is infinite");
  u_inverse_ = inverse_unimodular(snf_.U);
}

std::uint64_t
Cokernel::index_of(IntVector const &v) const
{
  if (!fits_u64(order_))
    throw ResourceError("cokernel too large to index: " + to_string(order_));
  IntVector const w = snf_.U * v;
  BigInt index = 0;
  BigInt stride = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    index += mod_floor(w[i], moduli_[i]) * stride;
    stride *= moduli_[i];
  }
  return to_u64(index);
}

IntVector
Cokernel::representative(std::uint64_t index) const
{
  IntVector w(moduli_.size());
  BigInt rest = from_u64(index);
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    w[i] = mod_floor(rest, moduli_[i]);
    rest = div_floor(rest, moduli_[i]);
  }
  return u_inverse_ * w;
}

IntVector
Cokernel::reduce(IntVector const &v) const
{
  IntVector w = snf_.U * v;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    w[i] = mod_floor(w[i], moduli_[i]);
  return u_inverse_ * w;
}

std::optional<IntVector>
Cokernel::solve(IntVector const &b) const
{
  IntVector z = snf_.U * b;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (!mpz_divisible_p(z[i].get_mpz_t(), moduli_[i].get_mpz_t()))
      return std::nullopt;
    mpz_divexact(z[i].get_mpz_t(), z[i].get_mpz_t(), moduli_[i].get_mpz_t());
  }
  return snf_.V * z;
}

std::vector<IntVector>
cokernel_representatives(IntMatrix const &t)
{
  Cokernel const ck(t);
  if (!fits_u64(ck.order()))
    throw ResourceError("cokernel too large to enumerate: " + to_string(ck.order()));
  std::uint64_t const count = to_u64(ck.order());
  std::vector<IntVector> reps;
  reps.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    reps.push_back(ck.representative(i));
  return reps;
}

std::optional<IntVector>
solve_integral(IntMatrix const &t, IntVector const &b)
{
  if (t.rows() != b.size())
    throw InvalidInput("solve_integral: right-hand side has wrong length");
  return Cokernel(t).solve(b);
}

} // namespace gsbs
