#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/matrix.hpp"
#include "kaut/poly.hpp"

namespace kaut {

/// The F[t]-linear map M_s -> M_r, x |-> p x, between Jordan blocks
/// M_k = F[t]/t^k. p is stored reduced mod t^r; when s < r, t^(r-s) must
/// divide p. Block size 0 denotes the zero module.
template <Field F>
struct JordanHom {
  int s;
  int r;
  Poly<F> p;

  static JordanHom make(int s, int r, const Poly<F>& p) {
    if (s < 0 || r < 0) fail(errc::kInvalidArgument, "block sizes must be non-negative");
    Poly<F> q = p.truncated(r);
    if (s < r && !q.is_zero() && q.t_adic_valuation() < r - s) {
      fail(errc::kInvalidArgument, "t^(r-s) must divide p when s < r");
    }
    return {s, r, std::move(q)};
  }

  friend bool operator==(const JordanHom& a, const JordanHom& b) {
    return a.s == b.s && a.r == b.r && a.p == b.p;
  }
};

/// Basis of Hom(M_s, M_r): p = t^j for max(r-s, 0) <= j < r; min(r, s)
/// elements.
template <Field F>
std::vector<JordanHom<F>> jordan_hom_basis(int s, int r, const F& field) {
  if (s < 0 || r < 0) fail(errc::kInvalidArgument, "block sizes must be non-negative");
  std::vector<JordanHom<F>> out;
  for (int j = std::max(r - s, 0); j < r; ++j) {
    out.push_back(JordanHom<F>::make(s, r, Poly<F>::monomial(field, field.one(), j)));
  }
  return out;
}

/// r x s matrix of x |-> p x in the bases 1, t, ..., t^(k-1).
template <Field F>
Matrix<F> hom_to_matrix(const JordanHom<F>& h, const F& field) {
  Matrix<F> m(field, static_cast<std::size_t>(h.r), static_cast<std::size_t>(h.s));
  for (int j = 0; j < h.s; ++j) {
    for (int i = j; i < h.r; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = h.p.coeff(i - j);
  }
  return m;
}

/// g o h for h: M_s -> M_k and g: M_k -> M_r.
template <Field F>
JordanHom<F> compose(const JordanHom<F>& g, const JordanHom<F>& h) {
  if (g.s != h.r) fail(errc::kShapeMismatch, "composing incompatible Jordan homomorphisms");
  return JordanHom<F>::make(h.s, g.r, g.p * h.p);
}

/// Jordan type of a nilpotent matrix: block size -> number of blocks, from
/// the rank sequence rk_j = rank A^j (blocks of size >= r number
/// rk_{r-1} - rk_r).
template <Field F>
std::map<int, std::int64_t> jordan_type(const Matrix<F>& a) {
  if (!is_nilpotent(a)) fail(errc::kNotNilpotent, "jordan_type needs a nilpotent matrix");
  std::vector<std::int64_t> rk{static_cast<std::int64_t>(a.rows())};
  Matrix<F> p = a;
  while (rk.back() != 0) {
    rk.push_back(static_cast<std::int64_t>(rank(p)));
    p = p * a;
  }
  rk.push_back(0);
  std::map<int, std::int64_t> out;
  for (std::size_t r = 1; r + 1 < rk.size(); ++r) {
    const std::int64_t n = (rk[r - 1] - rk[r]) - (rk[r] - rk[r + 1]);
    if (n != 0) out[static_cast<int>(r)] = n;
  }
  return out;
}

}  // namespace kaut
