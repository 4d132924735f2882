#ifndef SPREADCODE_MATRIX_HPP
#define SPREADCODE_MATRIX_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spreadcode/ext_field.hpp"
#include "spreadcode/prime_field.hpp"

namespace spreadcode {

template <class F>
concept Field = requires(const F& f, const typename F::Element& a) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
};

/// Ordered tuple of 0-based row or column indices. Order is significant:
/// it fixes the sign of the minors it selects.
using IndexTuple = std::vector<std::size_t>;

inline IndexTuple append(IndexTuple t, std::size_t i) {
  t.push_back(i);
  return t;
}

inline IndexTuple iota_tuple(std::size_t first, std::size_t count) {
  IndexTuple t(count);
  for (std::size_t i = 0; i < count; ++i) t[i] = first + i;
  return t;
}

/// Dense row-major matrix over a field.
template <Field F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<std::vector<Element>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix diagonal(const F& field, const std::vector<Element>& diag) {
    Matrix m(field, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Element& e) { return field_.is_zero(e); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <Field F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  const F& f = a.field();
  Matrix<F> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (f.is_zero(a(i, t))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (f.is_zero(b(t, j))) continue;
        c(i, j) = f.add(c(i, j), f.mul(a(i, t), b(t, j)));
      }
    }
  return c;
}

template <Field F>
Matrix<F> add(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  Matrix<F> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

template <Field F>
Matrix<F> sub(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sub: shape mismatch");
  Matrix<F> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

template <Field F>
Matrix<F> transpose(const Matrix<F>& a) {
  Matrix<F> t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Vertical concatenation.
template <Field F>
Matrix<F> vstack(const Matrix<F>& top, const Matrix<F>& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix<F> m(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
  return m;
}

/// Horizontal concatenation.
template <Field F>
Matrix<F> hstack(const std::vector<Matrix<F>>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("hstack: no blocks");
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks.front().rows()) throw std::invalid_argument("hstack: row mismatch");
    cols += b.cols();
  }
  Matrix<F> m(blocks.front().field(), blocks.front().rows(), cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

/// Submatrix on the given row and column tuples, in tuple order.
template <Field F>
Matrix<F> submatrix(const Matrix<F>& m, const IndexTuple& rows, const IndexTuple& cols) {
  Matrix<F> s(m.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= m.rows() || cols[j] >= m.cols()) throw std::out_of_range("submatrix index");
      s(i, j) = m(rows[i], cols[j]);
    }
  return s;
}

/// Columns [first, first + width).
template <Field F>
Matrix<F> column_block(const Matrix<F>& m, std::size_t first, std::size_t width) {
  return submatrix(m, iota_tuple(0, m.rows()), iota_tuple(first, width));
}

/// The first `count` rows.
template <Field F>
Matrix<F> top_rows(const Matrix<F>& m, std::size_t count) {
  return submatrix(m, iota_tuple(0, count), iota_tuple(0, m.cols()));
}

template <Field F>
bool is_diagonal(const Matrix<F>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m.field().is_zero(m(i, j))) return false;
  return true;
}

template <Field F>
struct RrefResult {
  Matrix<F> reduced;    ///< reduced row echelon form R
  Matrix<F> transform;  ///< invertible T with T * M = R
  std::size_t rank;
  IndexTuple pivot_cols;  ///< ascending
};

namespace detail {

// In-place Gauss-Jordan on m; row operations are mirrored on `side` when
// non-null. Returns pivot columns.
template <Field F>
IndexTuple gauss_jordan(Matrix<F>& m, Matrix<F>* side) {
  const F& f = m.field();
  IndexTuple pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && f.is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      if (side)
        for (std::size_t j = 0; j < side->cols(); ++j) std::swap((*side)(p, j), (*side)(row, j));
    }
    if (!f.is_one(m(row, col))) {
      const auto inv = f.inv(m(row, col));
      for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
      if (side)
        for (std::size_t j = 0; j < side->cols(); ++j) (*side)(row, j) = f.mul((*side)(row, j), inv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!f.is_zero(m(row, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
      if (side)
        for (std::size_t j = 0; j < side->cols(); ++j)
          if (!f.is_zero((*side)(row, j)))
            (*side)(i, j) = f.sub((*side)(i, j), f.mul(factor, (*side)(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <Field F>
RrefResult<F> rref(const Matrix<F>& m) {
  Matrix<F> r = m;
  Matrix<F> t = Matrix<F>::identity(m.field(), m.rows());
  IndexTuple piv = detail::gauss_jordan(r, &t);
  const std::size_t rk = piv.size();
  return {std::move(r), std::move(t), rk, std::move(piv)};
}

template <Field F>
struct EchelonForm {
  Matrix<F> reduced;
  IndexTuple pivot_cols;
};

/// Reduced row echelon form and pivot columns, without the transform.
template <Field F>
EchelonForm<F> echelon(const Matrix<F>& m) {
  Matrix<F> r = m;
  IndexTuple piv = detail::gauss_jordan<F>(r, nullptr);
  return {std::move(r), std::move(piv)};
}

/// Reduced row echelon form without the transform.
template <Field F>
Matrix<F> reduced_echelon(const Matrix<F>& m) {
  Matrix<F> r = m;
  detail::gauss_jordan<F>(r, nullptr);
  return r;
}

/// Rank by forward elimination only.
template <Field F>
std::size_t rank(const Matrix<F>& m) {
  const F& f = m.field();
  Matrix<F> a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && f.is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const auto inv = f.inv(a(row, col));
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (f.is_zero(a(i, col))) continue;
      const auto factor = f.mul(a(i, col), inv);
      for (std::size_t j = col + 1; j < a.cols(); ++j)
        if (!f.is_zero(a(row, j))) a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
      a(i, col) = f.zero();
    }
    ++row;
  }
  return row;
}

/// Determinant by Gaussian elimination, O(n^3).
template <Field F>
typename F::Element determinant(const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const F& f = m.field();
  Matrix<F> a = m;
  const std::size_t n = a.rows();
  auto det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && f.is_zero(a(p, col))) ++p;
    if (p == n) return f.zero();
    if (p != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, a(col, col));
    const auto inv = f.inv(a(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (f.is_zero(a(i, col))) continue;
      const auto factor = f.mul(a(i, col), inv);
      for (std::size_t j = col + 1; j < n; ++j)
        if (!f.is_zero(a(col, j))) a(i, j) = f.sub(a(i, j), f.mul(factor, a(col, j)));
    }
  }
  return det;
}

/// The minor [rows; cols]_M: determinant of the submatrix taken in tuple
/// order. The empty minor is 1.
template <Field F>
typename F::Element minor(const Matrix<F>& m, const IndexTuple& rows, const IndexTuple& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: tuple lengths differ");
  if (rows.empty()) return m.field().one();
  return determinant(submatrix(m, rows, cols));
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<F> r = m;
  Matrix<F> t = Matrix<F>::identity(m.field(), m.rows());
  if (detail::gauss_jordan(r, &t).size() != m.rows()) throw std::domain_error("matrix is singular");
  return t;
}

/// Embeds an F_q matrix into F_{q^k}.
inline Matrix<ExtField> lift(const Matrix<PrimeField>& m, const ExtField& ext) {
  Matrix<ExtField> out(ext, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ext.embed(m(i, j));
  return out;
}

/// Product of an F_q matrix with an F_{q^k} matrix, using subfield scaling.
inline Matrix<ExtField> mixed_matmul(const Matrix<PrimeField>& a, const Matrix<ExtField>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  const ExtField& f = b.field();
  Matrix<ExtField> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Residue s = a(i, t);
      if (s.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = f.add(c(i, j), s.value == 1 ? b(t, j) : f.scale(s, b(t, j)));
    }
  return c;
}

}  // namespace spreadcode

#endif  // SPREADCODE_MATRIX_HPP
