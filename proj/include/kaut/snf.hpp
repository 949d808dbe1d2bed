#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/matrix.hpp"
#include "kaut/poly.hpp"

namespace kaut {

/// Dense matrix over F[t].
template <Field F>
class PolyMatrix {
 public:
  PolyMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, Poly<F>(field_)) {}

  static PolyMatrix identity(const F& f, std::size_t n) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly<F>::one(f);
    return m;
  }

  /// t I - A
  static PolyMatrix characteristic(const Matrix<F>& a) {
    const F& f = a.field();
    PolyMatrix m(f, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        m(i, j) = Poly<F>::constant(f, f.neg(a(i, j)));
        if (i == j) m(i, j) += Poly<F>::x(f);
      }
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly<F>& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Poly<F>& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  /// row_i <- row_i - q row_k
  void row_axpy(std::size_t i, const Poly<F>& q, std::size_t k) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) -= q * (*this)(k, c);
  }
  void col_axpy(std::size_t j, const Poly<F>& q, std::size_t k) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) -= (*this)(r, k) * q;
  }
  /// (row_k, row_i) <- (s row_k + t row_i, u row_k + v row_i)
  void row_mix(std::size_t k, std::size_t i, const Poly<F>& s, const Poly<F>& t, const Poly<F>& u, const Poly<F>& v) {
    for (std::size_t c = 0; c < cols_; ++c) {
      Poly<F> a = (*this)(k, c), b = (*this)(i, c);
      (*this)(k, c) = s * a + t * b;
      (*this)(i, c) = u * a + v * b;
    }
  }
  void col_mix(std::size_t k, std::size_t j, const Poly<F>& s, const Poly<F>& t, const Poly<F>& u, const Poly<F>& v) {
    for (std::size_t r = 0; r < rows_; ++r) {
      Poly<F> a = (*this)(r, k), b = (*this)(r, j);
      (*this)(r, k) = a * s + b * t;
      (*this)(r, j) = a * u + b * v;
    }
  }
  void scale_row(std::size_t i, const typename F::Elem& c) {
    for (std::size_t col = 0; col < cols_; ++col) (*this)(i, col) = (*this)(i, col).scaled(c);
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) fail(errc::kShapeMismatch, "polynomial matrix product shape mismatch");
    PolyMatrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    }
    return c;
  }
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly<F>> a_;
};

/// Determinant over F[t] by Bareiss fraction-free elimination.
template <Field F>
Poly<F> det(PolyMatrix<F> m) {
  if (m.rows() != m.cols()) fail(errc::kShapeMismatch, "determinant of a non-square matrix");
  const F& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Poly<F>::one(f);
  Poly<F> prev = Poly<F>::one(f);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return Poly<F>(f);
      m.swap_rows(k, piv);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Poly<F>(f);
    }
    prev = m(k, k);
  }
  Poly<F> d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// U M V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...),
/// d_i monic, d_i | d_{i+1}.
template <Field F>
struct SmithForm {
  PolyMatrix<F> u;
  PolyMatrix<F> d;
  PolyMatrix<F> v;

  std::vector<Poly<F>> diagonal() const {
    std::vector<Poly<F>> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

/// Nonzero entry of minimal degree in the trailing block from (k, k);
/// ties go to the smallest (row, column).
template <Field F>
std::optional<std::pair<std::size_t, std::size_t>> min_degree_entry(const PolyMatrix<F>& m, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  int best_deg = 0;
  for (std::size_t i = k; i < m.rows(); ++i) {
    for (std::size_t j = k; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (e.is_zero()) continue;
      if (!best || e.degree() < best_deg) {
        best = {i, j};
        best_deg = e.degree();
      }
    }
  }
  return best;
}

}  // namespace detail

/// Smith normal form over F[t] by Euclidean elimination: minimal-degree
/// pivoting and extended-gcd row/column combinations.
template <Field F>
SmithForm<F> smith_normal_form(PolyMatrix<F> m) {
  const F& f = m.field();
  PolyMatrix<F> u = PolyMatrix<F>::identity(f, m.rows());
  PolyMatrix<F> v = PolyMatrix<F>::identity(f, m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < n; ++k) {
    bool done = false;
    while (!done) {
      auto piv = detail::min_degree_entry(m, k);
      if (!piv) return {std::move(u), std::move(m), std::move(v)};
      if (piv->first != k) {
        m.swap_rows(k, piv->first);
        u.swap_rows(k, piv->first);
      }
      if (piv->second != k) {
        m.swap_cols(k, piv->second);
        v.swap_cols(k, piv->second);
      }
      for (std::size_t i = k + 1; i < m.rows(); ++i) {
        if (m(i, k).is_zero()) continue;
        auto [q, r] = divmod(m(i, k), m(k, k));
        if (r.is_zero()) {
          m.row_axpy(i, q, k);
          u.row_axpy(i, q, k);
        } else {
          auto [g, s, t] = xgcd(m(k, k), m(i, k));
          Poly<F> a = m(k, k) / g, b = m(i, k) / g;
          m.row_mix(k, i, s, t, -b, a);
          u.row_mix(k, i, s, t, -b, a);
        }
      }
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        if (m(k, j).is_zero()) continue;
        auto [q, r] = divmod(m(k, j), m(k, k));
        if (r.is_zero()) {
          m.col_axpy(j, q, k);
          v.col_axpy(j, q, k);
        } else {
          auto [g, s, t] = xgcd(m(k, k), m(k, j));
          Poly<F> a = m(k, k) / g, b = m(k, j) / g;
          m.col_mix(k, j, s, t, -b, a);
          v.col_mix(k, j, s, t, -b, a);
        }
      }
      bool clear = true;
      for (std::size_t i = k + 1; i < m.rows() && clear; ++i) clear = m(i, k).is_zero();
      for (std::size_t j = k + 1; j < m.cols() && clear; ++j) clear = m(k, j).is_zero();
      if (!clear) continue;
      done = true;
      for (std::size_t i = k + 1; i < m.rows() && done; ++i) {
        for (std::size_t j = k + 1; j < m.cols(); ++j) {
          if (!divides(m(k, k), m(i, j))) {
            // pull the offending row into row k; the next pass lowers the pivot degree
            m.row_axpy(k, -Poly<F>::one(f), i);
            u.row_axpy(k, -Poly<F>::one(f), i);
            done = false;
            break;
          }
        }
      }
    }
    const auto s = f.inv(m(k, k).lc());
    m.scale_row(k, s);
    u.scale_row(k, s);
  }
  return {std::move(u), std::move(m), std::move(v)};
}

}  // namespace kaut
