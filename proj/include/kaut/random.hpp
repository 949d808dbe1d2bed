#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "kaut/coherent_functor.hpp"
#include "kaut/jordan.hpp"
#include "kaut/matrix.hpp"
#include "kaut/poly.hpp"
#include "kaut/torsion_module.hpp"

namespace kaut {

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <Field F>
Matrix<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<F> m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.random(rng);
  }
  return m;
}

template <Field F>
Matrix<F> random_invertible(const F& f, std::size_t n, Rng& rng) {
  for (;;) {
    auto m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

template <Field F>
Matrix<F> conjugate(const Matrix<F>& a, const Matrix<F>& p) {
  return p * a * inverse(p);
}

/// Random partition of n (parts in random order).
inline std::vector<int> random_partition(int n, Rng& rng) {
  std::vector<int> parts;
  while (n > 0) {
    const int k = uniform_int(rng, 1, n);
    parts.push_back(k);
    n -= k;
  }
  return parts;
}

/// Conjugate of a random sum of Jordan blocks of total size n.
template <Field F>
Matrix<F> random_nilpotent(const F& f, std::size_t n, Rng& rng) {
  Matrix<F> a(f, 0, 0);
  for (int b : random_partition(static_cast<int>(n), rng)) a = direct_sum(a, jordan_block(f, static_cast<std::size_t>(b)));
  return conjugate(a, random_invertible(f, n, rng));
}

template <Field F>
Poly<F> random_poly(const F& f, int degree, Rng& rng) {
  std::vector<typename F::Elem> c;
  for (int i = 0; i < degree; ++i) c.push_back(f.random(rng));
  auto lead = f.random(rng);
  while (f.is_zero(lead)) lead = f.random(rng);
  c.push_back(lead);
  return Poly<F>(f, std::move(c));
}

/// Random element of Hom(M_s, M_r) as a combination of the standard basis.
template <Field F>
JordanHom<F> random_jordan_hom(const F& f, int s, int r, Rng& rng) {
  Poly<F> p(f);
  for (const auto& h : jordan_hom_basis(s, r, f)) p += h.p.scaled(f.random(rng));
  return JordanHom<F>::make(s, r, p);
}

/// Random epimorphism presentation with block sizes in [1, max_block].
template <Field F>
CoherentFunctor<F> random_presentation(const F& f, int max_block, Rng& rng) {
  for (;;) {
    std::vector<int> src, tgt;
    const int nt = uniform_int(rng, 1, 3);
    const int ns = uniform_int(rng, nt, nt + 2);
    for (int i = 0; i < nt; ++i) tgt.push_back(uniform_int(rng, 1, max_block));
    for (int j = 0; j < ns; ++j) src.push_back(uniform_int(rng, 1, max_block));
    std::vector<std::vector<JordanHom<F>>> beta;
    for (int r : tgt) {
      std::vector<JordanHom<F>> row;
      for (int s : src) row.push_back(random_jordan_hom(f, s, r, rng));
      beta.push_back(std::move(row));
    }
    CoherentFunctor<F> cand{f, src, tgt, beta};
    const auto bm = cand.beta_matrix();
    if (rank(bm) == bm.rows()) return cand;
  }
}

}  // namespace kaut
