#ifndef SPREADCODE_NONDIAGONAL_HPP
#define SPREADCODE_NONDIAGONAL_HPP

#include <stdexcept>
#include <vector>

#include "spreadcode/matrix.hpp"

/// Minors avoiding the diagonal: the non-diagonal rank and the modified
/// Gaussian elimination that finds a maximal nonvanishing one.
namespace spreadcode {

/// Row and column tuples J, L with J and L disjoint, [J;L] != 0, and
/// [J+(j); L+(l)] = 0 for every j != l outside J and L.
struct OffDiagonalMinor {
  IndexTuple rows;
  IndexTuple cols;
};

/// Modified Gaussian elimination. Each unused row j, taken in ascending
/// order, is scanned for its first nonzero entry in a column l not yet in
/// J or L; on a hit (j, l) joins (J, L) and column l is cleared below row j.
///
/// Unlike a scan restricted to the indices still awaiting processing, the
/// column scan also visits indices whose rows were already found empty;
/// without that, entries below the diagonal are never examined.
template <Field F>
OffDiagonalMinor modified_gaussian(const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("modified_gaussian: matrix must be square");
  if (is_diagonal(m)) throw std::domain_error("modified_gaussian: matrix is diagonal");
  const F& f = m.field();
  const std::size_t k = m.rows();
  Matrix<F> n = m;
  std::vector<bool> used(k, false);
  OffDiagonalMinor out;
  for (std::size_t j = 0; j < k; ++j) {
    if (used[j]) continue;
    std::size_t l = 0;
    while (l < k && (used[l] || l == j || f.is_zero(n(j, l)))) ++l;
    if (l == k) continue;
    out.rows.push_back(j);
    out.cols.push_back(l);
    used[j] = used[l] = true;
    const auto pivot_inv = f.inv(n(j, l));
    for (std::size_t i = j + 1; i < k; ++i) {
      if (f.is_zero(n(i, l))) continue;
      const auto factor = f.mul(n(i, l), pivot_inv);
      for (std::size_t c = 0; c < k; ++c)
        if (!f.is_zero(n(j, c))) n(i, c) = f.sub(n(i, c), f.mul(factor, n(j, c)));
    }
  }
  return out;
}

namespace detail {

// Visits every ascending t-subset of `pool`; stops early when fn returns true.
template <class Fn>
bool for_each_subset(const IndexTuple& pool, std::size_t t, Fn&& fn) {
  if (t > pool.size()) return false;
  std::vector<std::size_t> pos(t);
  for (std::size_t i = 0; i < t; ++i) pos[i] = i;
  IndexTuple subset(t);
  while (true) {
    for (std::size_t i = 0; i < t; ++i) subset[i] = pool[pos[i]];
    if (fn(subset)) return true;
    std::size_t i = t;
    while (i > 0 && pos[i - 1] == pool.size() - t + i - 1) --i;
    if (i == 0) return false;
    ++pos[i - 1];
    for (std::size_t r = i; r < t; ++r) pos[r] = pos[r - 1] + 1;
  }
}

}  // namespace detail

/// True if some t x t minor on disjoint row and column sets is nonzero.
template <Field F>
bool has_nonzero_disjoint_minor(const Matrix<F>& m, std::size_t t) {
  const std::size_t k = m.rows();
  const IndexTuple all = iota_tuple(0, k);
  return detail::for_each_subset(all, t, [&](const IndexTuple& rows) {
    IndexTuple rest;
    for (std::size_t i = 0; i < k; ++i)
      if (std::find(rows.begin(), rows.end(), i) == rows.end()) rest.push_back(i);
    return detail::for_each_subset(rest, t, [&](const IndexTuple& cols) {
      return !m.field().is_zero(minor(m, rows, cols));
    });
  });
}

/// Non-diagonal rank by exhaustive minor enumeration. Exponential in k.
template <Field F>
std::size_t ndrank_definitional(const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("ndrank: matrix must be square");
  std::size_t t = 1;
  while (2 * t <= m.rows() && has_nonzero_disjoint_minor(m, t)) ++t;
  return t - 1;
}

}  // namespace spreadcode

#endif  // SPREADCODE_NONDIAGONAL_HPP
