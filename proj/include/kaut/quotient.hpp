#pragma once

#include <cstddef>
#include <vector>

#include "kaut/matrix.hpp"

namespace kaut {

/// The quotient F^n / S for a subspace S given by spanning columns.
/// Quotient coordinates are the non-pivot coordinates of the reduced row
/// echelon basis of S; lifting puts them back with zeros elsewhere.
template <Field F>
class Quotient {
 public:
  using Elem = typename F::Elem;

  Quotient(const Matrix<F>& span, std::size_t n) : field_(span.field()), n_(n), basis_(span.field()) {
    auto e = rref(span.transpose());
    basis_ = e.reduced.block(0, 0, e.pivots.size(), n);
    pivots_ = e.pivots;
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_pivot[i]) free_.push_back(i);
    }
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return free_.size(); }
  std::size_t sub_dim() const { return pivots_.size(); }

  /// Representative with zero pivot coordinates.
  std::vector<Elem> reduce(std::vector<Elem> v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Elem c = v[pivots_[r]];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = field_.sub(v[j], field_.mul(c, basis_(r, j)));
    }
    return v;
  }
  bool contains(const std::vector<Elem>& v) const {
    for (const auto& x : reduce(v)) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }
  std::vector<Elem> project(const std::vector<Elem>& v) const {
    auto w = reduce(v);
    std::vector<Elem> out;
    out.reserve(free_.size());
    for (auto i : free_) out.push_back(w[i]);
    return out;
  }
  std::vector<Elem> lift(const std::vector<Elem>& q) const {
    std::vector<Elem> v(n_, field_.zero());
    for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
    return v;
  }
  /// Columns of the matrix lifting the standard quotient basis.
  Matrix<F> lift_basis() const {
    Matrix<F> m(field_, n_, free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) m(free_[i], i) = field_.one();
    return m;
  }
  Matrix<F> project_columns(const Matrix<F>& m) const {
    Matrix<F> out(field_, free_.size(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto p = project(m.column(j));
      for (std::size_t i = 0; i < p.size(); ++i) out(i, j) = p[i];
    }
    return out;
  }

 private:
  F field_;
  std::size_t n_;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

/// Map induced on quotients by a linear map `map`: V -> W that sends the
/// subspace of `src` into that of `dst`.
template <Field F>
Matrix<F> induced_map(const Matrix<F>& map, const Quotient<F>& src, const Quotient<F>& dst) {
  return dst.project_columns(map * src.lift_basis());
}

}  // namespace kaut
