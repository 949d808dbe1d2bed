#pragma once

// Reference computations used only to cross-check the library in tests and
// in the self-test. They deliberately avoid the library's structural
// shortcuts (Smith forms, annihilator coordinates, Jordan bases).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kaut/coherent_functor.hpp"
#include "kaut/matrix.hpp"

namespace kaut::oracle {

/// Basis of {X : X A = B X} (X is rows(B) x rows(A)), each X flattened
/// row-major into a column of the result.
template <Field F>
Matrix<F> intertwiner_space(const Matrix<F>& a, const Matrix<F>& b) {
  const F& f = a.field();
  const std::size_t n = a.rows(), m = b.rows();
  Matrix<F> sys(f, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t eq = i * n + j;
      // (X A)_{ij} = sum_k x_{ik} a_{kj}
      for (std::size_t k = 0; k < n; ++k) sys(eq, i * n + k) = f.add(sys(eq, i * n + k), a(k, j));
      // - (B X)_{ij} = - sum_k b_{ik} x_{kj}
      for (std::size_t k = 0; k < m; ++k) sys(eq, k * n + j) = f.sub(sys(eq, k * n + j), b(i, k));
    }
  }
  return kernel(sys);
}

template <Field F>
Matrix<F> unflatten(const std::vector<typename F::Elem>& v, const F& f, std::size_t rows, std::size_t cols) {
  Matrix<F> x(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) x(i, j) = v[i * cols + j];
  }
  return x;
}

/// Calls fn on every matrix of the given shape over a finite field.
template <FiniteField F, class Fn>
void for_each_matrix(const F& f, std::size_t rows, std::size_t cols, Fn&& fn) {
  const std::uint64_t q = *f.order();
  const std::size_t cells = rows * cols;
  std::vector<std::uint64_t> idx(cells, 0);
  for (;;) {
    Matrix<F> m(f, rows, cols);
    for (std::size_t c = 0; c < cells; ++c) m(c / cols, c % cols) = f.element_at(idx[c]);
    fn(m);
    std::size_t c = 0;
    while (c < cells && ++idx[c] == q) idx[c++] = 0;
    if (c == cells) return;
  }
}

/// Number of intertwiners counted by enumeration (tiny cases only).
template <FiniteField F>
std::uint64_t count_intertwiners(const Matrix<F>& a, const Matrix<F>& b) {
  std::uint64_t n = 0;
  for_each_matrix(a.field(), b.rows(), a.rows(), [&](const Matrix<F>& x) {
    if (x * a == b * x) ++n;
  });
  return n;
}

/// A and B conjugate, decided by searching GL_n(F) exhaustively.
template <FiniteField F>
bool conjugate_by_search(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) return false;
  bool found = false;
  for_each_matrix(a.field(), a.rows(), a.rows(), [&](const Matrix<F>& p) {
    if (!found && p * a == b * p && is_invertible(p)) found = true;
  });
  return found;
}

/// Monic irreducibles of degree d over F_q: (1/d) sum_{e | d} mu(e) q^(d/e).
inline std::uint64_t necklace_count(std::uint64_t q, int d) {
  auto mobius = [](int n) {
    int res = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      n /= p;
      if (n % p == 0) return 0;
      res = -res;
    }
    return n > 1 ? -res : res;
  };
  std::int64_t total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    std::int64_t qp = 1;
    for (int i = 0; i < d / e; ++i) qp *= static_cast<std::int64_t>(q);
    total += mobius(e) * qp;
  }
  return static_cast<std::uint64_t>(total / d);
}

/// dim F M_s computed from intertwiner spaces: Hom(M_s, B') modulo
/// beta o Hom(M_s, B).
template <Field F>
std::size_t functor_dim(const CoherentFunctor<F>& fn, int s) {
  const F& f = fn.field;
  Matrix<F> js = jordan_block(f, static_cast<std::size_t>(s));
  Matrix<F> jb(f, 0, 0), jbp(f, 0, 0);
  for (int b : fn.source) jb = direct_sum(jb, jordan_block(f, static_cast<std::size_t>(b)));
  for (int b : fn.target) jbp = direct_sum(jbp, jordan_block(f, static_cast<std::size_t>(b)));
  const auto hom_target = intertwiner_space(js, jbp);
  const auto hom_source = intertwiner_space(js, jb);
  const auto bm = fn.beta_matrix();
  std::vector<std::vector<typename F::Elem>> images;
  for (std::size_t c = 0; c < hom_source.cols(); ++c) {
    const auto x = unflatten(hom_source.column(c), f, jb.rows(), js.rows());
    const auto y = bm * x;
    std::vector<typename F::Elem> flat;
    for (std::size_t i = 0; i < y.rows(); ++i) {
      for (std::size_t j = 0; j < y.cols(); ++j) flat.push_back(y(i, j));
    }
    images.push_back(std::move(flat));
  }
  const std::size_t img = images.empty() ? 0 : rank(Matrix<F>::from_columns(f, jbp.rows() * js.rows(), images));
  return hom_target.cols() - img;
}

/// dim of the space of natural transformations between evaluated functors:
/// families theta_s commuting with t, u and d.
template <Field F>
std::size_t nat_dim(const FunctorData<F>& a, const FunctorData<F>& b) {
  const F& f = a.field;
  const int smax = std::max(a.s_max, b.s_max);
  std::vector<std::size_t> off{0};
  for (int s = 1; s <= smax; ++s) off.push_back(off.back() + b.dim(s) * a.dim(s));
  const std::size_t unknowns = off.back();
  std::vector<std::vector<typename F::Elem>> rows;
  // entry (i, j) of theta_s
  auto var = [&](int s, std::size_t i, std::size_t j) { return off[static_cast<std::size_t>(s - 1)] + i * a.dim(s) + j; };
  // lhs theta_y * P = Q * theta_x, P: V^a_x -> V^a_y, Q: V^b_x -> V^b_y
  auto add_square = [&](int x, int y, const Matrix<F>& p, const Matrix<F>& q) {
    for (std::size_t i = 0; i < b.dim(y); ++i) {
      for (std::size_t j = 0; j < a.dim(x); ++j) {
        std::vector<typename F::Elem> row(unknowns, f.zero());
        for (std::size_t k = 0; k < a.dim(y); ++k) row[var(y, i, k)] = f.add(row[var(y, i, k)], p(k, j));
        for (std::size_t k = 0; k < b.dim(x); ++k) row[var(x, k, j)] = f.sub(row[var(x, k, j)], q(i, k));
        rows.push_back(std::move(row));
      }
    }
  };
  for (int s = 1; s <= smax; ++s) {
    add_square(s, s, a.t_map(s), b.t_map(s));
    if (s < smax) {
      add_square(s, s + 1, a.u_map(s), b.u_map(s));
      add_square(s + 1, s, a.d_map(s), b.d_map(s));
    }
  }
  if (unknowns == 0) return 0;
  if (rows.empty()) return unknowns;
  return unknowns - rank(Matrix<F>::from_rows(f, rows));
}

}  // namespace kaut::oracle
