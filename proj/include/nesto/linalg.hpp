#pragma once

// Dense exact linear algebra over a field type F (Rational or Zp<P>).

#include <optional>
#include <utility>
#include <vector>

#include "nesto/field.hpp"

namespace nesto {

template <class F>
using Vec = std::vector<F>;

template <class F>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<F> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, F(0)) {}

  F& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const F& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  Vec<F> apply(const Vec<F>& x) const {
    Vec<F> y(rows, F(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!is_zero((*this)(i, j)) && !is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(int rows, const std::vector<Vec<F>>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }
};

/// Row-reduces `m` in place to reduced echelon form and returns pivot columns.
/// When `t` is given, the same row operations are applied to it.
template <class F>
std::vector<int> rref(Matrix<F>& m, Matrix<F>* t = nullptr) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
      if (t)
        for (int j = 0; j < t->cols; ++j) std::swap((*t)(p, j), (*t)(r, j));
    }
    F inv = F(1) / m(r, c);
    if (!(inv == F(1))) {
      for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
      if (t)
        for (int j = 0; j < t->cols; ++j) (*t)(r, j) *= inv;
    }
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (int j = c; j < m.cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      if (t)
        for (int j = 0; j < t->cols; ++j)
          if (!is_zero((*t)(r, j))) (*t)(i, j) -= f * (*t)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of {x : m x = 0}.
template <class F>
std::vector<Vec<F>> nullspace(Matrix<F> m) {
  auto piv = rref(m);
  std::vector<char> is_piv(m.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<Vec<F>> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    Vec<F> x(m.cols, F(0));
    x[f] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Precomputed solver for A x = b with a fixed A; reuses the elimination.
template <class F>
class ColumnSolver {
 public:
  ColumnSolver() = default;
  explicit ColumnSolver(const Matrix<F>& a) : rows_(a.rows), cols_(a.cols), r_(a), t_(a.rows, a.rows) {
    for (int i = 0; i < rows_; ++i) t_(i, i) = F(1);
    pivots_ = rref(r_, &t_);
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Some x with A x = b, or nullopt if b is not in the column space.
  std::optional<Vec<F>> solve(const Vec<F>& b) const {
    Vec<F> y = t_.apply(b);
    for (int i = rank(); i < rows_; ++i)
      if (!is_zero(y[i])) return std::nullopt;
    Vec<F> x(cols_, F(0));
    for (int i = 0; i < rank(); ++i) x[pivots_[i]] = y[i];
    return x;
  }

  bool in_image(const Vec<F>& b) const {
    Vec<F> y = t_.apply(b);
    for (int i = rank(); i < rows_; ++i)
      if (!is_zero(y[i])) return false;
    return true;
  }

 private:
  int rows_ = 0, cols_ = 0;
  Matrix<F> r_;
  Matrix<F> t_;
  std::vector<int> pivots_;
};

template <class F>
bool is_zero_vec(const Vec<F>& v) {
  for (const F& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace nesto
