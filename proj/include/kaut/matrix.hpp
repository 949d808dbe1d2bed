#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/field.hpp"
#include "kaut/poly.hpp"

namespace kaut {

/// Dense row-major matrix over an exact field.
template <Field F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  explicit Matrix(F field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  static Matrix from_rows(const F& f, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) fail(errc::kShapeMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_ints(const F& f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<Elem>> r;
    for (const auto& row : rows) {
      std::vector<Elem> v;
      for (auto n : row) v.push_back(f.from_int(n));
      r.push_back(std::move(v));
    }
    return from_rows(f, r);
  }
  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(const F& f, std::size_t rows, const std::vector<std::vector<Elem>>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Elem> column(std::size_t j) const {
    std::vector<Elem> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  std::vector<Elem> row(std::size_t i) const {
    return std::vector<Elem>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }
  Matrix scaled(const Elem& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = field_.mul(x, s);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(errc::kShapeMismatch, "matrix product shape mismatch");
    const F& f = a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem& x = a(i, k);
        if (f.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
      }
    }
    return c;
  }
  friend std::vector<Elem> operator*(const Matrix& a, const std::vector<Elem>& v) {
    if (a.cols_ != v.size()) fail(errc::kShapeMismatch, "matrix-vector shape mismatch");
    const F& f = a.field_;
    std::vector<Elem> out(a.rows_, f.zero());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] = f.add(out[i], f.mul(a(i, k), v[k]));
    }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(errc::kShapeMismatch, "matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(errc::kShapeMismatch, "matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.field_.sub(a.a_[i], b.a_[i]);
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
      if (!a.field_.equal(a.a_[i], b.a_[i])) return false;
    }
    return true;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

template <Field F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <Field F>
Echelon<F> rref(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const auto s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto x = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(x, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

/// Basis of the column space in reduced column echelon form.
template <Field F>
Matrix<F> column_echelon(const Matrix<F>& m) {
  auto e = rref(m.transpose());
  return e.reduced.block(0, 0, e.pivots.size(), m.rows()).transpose();
}

/// Kernel basis as columns, in reduced column echelon form.
template <Field F>
Matrix<F> kernel(const Matrix<F>& m) {
  const F& f = m.field();
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Elem>> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    gens.push_back(std::move(v));
  }
  return column_echelon(Matrix<F>::from_columns(f, m.cols(), gens));
}

template <Field F>
bool is_invertible(const Matrix<F>& m) {
  return m.is_square() && rank(m) == m.rows();
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) fail(errc::kShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<F>::identity(m.field(), n));
  auto e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    fail(errc::kDivisionByZero, "matrix is singular");
  }
  return e.reduced.block(0, n, n, n);
}

/// The unique X with A X = B; A must have full column rank and B's columns
/// must lie in A's column space.
template <Field F>
Matrix<F> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) fail(errc::kShapeMismatch, "solve shape mismatch");
  Matrix<F> aug(a.field(), a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  auto e = rref(aug);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= a.cols()) fail(errc::kInvalidArgument, "right-hand side not in the column space");
    if (e.pivots[i] != i) fail(errc::kInvalidArgument, "coefficient matrix lacks full column rank");
  }
  if (e.pivots.size() != a.cols()) fail(errc::kInvalidArgument, "coefficient matrix lacks full column rank");
  return e.reduced.block(0, a.cols(), a.cols(), b.cols());
}

template <Field F>
typename F::Elem det(Matrix<F> m) {
  if (!m.is_square()) fail(errc::kShapeMismatch, "determinant of a non-square matrix");
  const F& f = m.field();
  auto d = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    const auto s = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto x = f.mul(m(i, c), s);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(x, m(c, j)));
    }
  }
  return d;
}

template <Field F>
Matrix<F> power(const Matrix<F>& a, std::uint64_t e) {
  Matrix<F> r = Matrix<F>::identity(a.field(), a.rows());
  Matrix<F> b = a;
  while (e != 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return r;
}

/// p(A) by Horner's rule.
template <Field F>
Matrix<F> eval_poly(const Poly<F>& p, const Matrix<F>& a) {
  const F& f = a.field();
  Matrix<F> r(f, a.rows(), a.cols());
  const Matrix<F> id = Matrix<F>::identity(f, a.rows());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * a + id.scaled(*it);
  return r;
}

template <Field F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

template <Field F>
Matrix<F> hconcat(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) fail(errc::kShapeMismatch, "hconcat row mismatch");
  Matrix<F> m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

/// Smallest l with A^l = 0, or nullopt when A is not nilpotent.
template <Field F>
std::optional<std::size_t> nilpotency_index(const Matrix<F>& a) {
  if (!a.is_square()) fail(errc::kShapeMismatch, "nilpotency of a non-square matrix");
  Matrix<F> p = Matrix<F>::identity(a.field(), a.rows());
  for (std::size_t l = 0; l <= a.rows(); ++l) {
    if (p.is_zero()) return l;
    p = p * a;
  }
  return std::nullopt;
}

template <Field F>
bool is_nilpotent(const Matrix<F>& a) {
  return nilpotency_index(a).has_value();
}

/// Matrix N of A restricted to the A-invariant subspace with basis columns
/// K, i.e. A K = K N.
template <Field F>
Matrix<F> restrict_to(const Matrix<F>& a, const Matrix<F>& basis) {
  return solve(basis, a * basis);
}

}  // namespace kaut
