#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/jordan.hpp"
#include "kaut/matrix.hpp"
#include "kaut/quotient.hpp"
#include "kaut/torsion_module.hpp"

namespace kaut {

/// Finitely supported r -> nu_r.
using NuVector = std::map<int, std::int64_t>;

/// coker([-, beta]) for an epimorphism beta: B -> B' of nilpotent modules,
/// B = sum M_{source[j]}, B' = sum M_{target[i]}; beta[i][j]: M_source[j] -> M_target[i].
template <Field F>
struct CoherentFunctor {
  F field;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<std::vector<JordanHom<F>>> beta;

  /// beta as an F-linear map, (sum target) x (sum source).
  Matrix<F> beta_matrix() const {
    std::size_t rows = 0, cols = 0;
    for (int b : target) rows += static_cast<std::size_t>(b);
    for (int b : source) cols += static_cast<std::size_t>(b);
    Matrix<F> m(field, rows, cols);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
      std::size_t c0 = 0;
      for (std::size_t j = 0; j < source.size(); ++j) {
        m.set_block(r0, c0, hom_to_matrix(beta[i][j], field));
        c0 += static_cast<std::size_t>(source[j]);
      }
      r0 += static_cast<std::size_t>(target[i]);
    }
    return m;
  }
};

template <Field F>
CoherentFunctor<F> presentation_make(const F& field, std::vector<int> source, std::vector<int> target,
                                     const std::vector<std::vector<JordanHom<F>>>& beta) {
  if (beta.size() != target.size()) fail(errc::kShapeMismatch, "beta needs one row per target block");
  for (int b : source) {
    if (b < 0) fail(errc::kShapeMismatch, "negative block size");
  }
  for (int b : target) {
    if (b < 0) fail(errc::kShapeMismatch, "negative block size");
  }
  std::vector<std::vector<JordanHom<F>>> norm;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (beta[i].size() != source.size()) fail(errc::kShapeMismatch, "beta needs one column per source block");
    std::vector<JordanHom<F>> row;
    for (std::size_t j = 0; j < source.size(); ++j) {
      const auto& h = beta[i][j];
      if (h.s != source[j] || h.r != target[i]) fail(errc::kShapeMismatch, "entry does not match block sizes");
      if (!(h.p.field() == field)) fail(errc::kFieldMismatch, "entry over a different field");
      row.push_back(JordanHom<F>::make(h.s, h.r, h.p));
    }
    norm.push_back(std::move(row));
  }
  CoherentFunctor<F> out{field, std::move(source), std::move(target), std::move(norm)};
  const auto bm = out.beta_matrix();
  if (rank(bm) != bm.rows()) fail(errc::kNotEpimorphism, "beta is not surjective");
  return out;
}

/// Convenience: entries given as polynomials.
template <Field F>
CoherentFunctor<F> presentation_make(const F& field, std::vector<int> source, std::vector<int> target,
                                     const std::vector<std::vector<Poly<F>>>& beta) {
  std::vector<std::vector<JordanHom<F>>> hs;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    std::vector<JordanHom<F>> row;
    for (std::size_t j = 0; j < beta[i].size(); ++j) {
      const int s = j < source.size() ? source[j] : 0;
      const int r = i < target.size() ? target[i] : 0;
      row.push_back(JordanHom<F>::make(s, r, beta[i][j]));
    }
    hs.push_back(std::move(row));
  }
  return presentation_make(field, std::move(source), std::move(target), hs);
}

/// Block-diagonal presentation of the direct sum of two functors.
template <Field F>
CoherentFunctor<F> direct_sum(const CoherentFunctor<F>& a, const CoherentFunctor<F>& b) {
  CoherentFunctor<F> out{a.field, a.source, a.target, {}};
  out.source.insert(out.source.end(), b.source.begin(), b.source.end());
  out.target.insert(out.target.end(), b.target.begin(), b.target.end());
  auto zero = [&](int s, int r) { return JordanHom<F>{s, r, Poly<F>(a.field)}; };
  for (std::size_t i = 0; i < a.target.size(); ++i) {
    auto row = a.beta[i];
    for (int s : b.source) row.push_back(zero(s, a.target[i]));
    out.beta.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < b.target.size(); ++i) {
    std::vector<JordanHom<F>> row;
    for (int s : a.source) row.push_back(zero(s, b.target[i]));
    row.insert(row.end(), b.beta[i].begin(), b.beta[i].end());
    out.beta.push_back(std::move(row));
  }
  return out;
}

/// beta_r: M_{r-1} + M_{r+1} -> M_r, (x, y) |-> t x + y.
template <Field F>
CoherentFunctor<F> f_r(const F& field, int r) {
  if (r < 1) fail(errc::kInvalidArgument, "F_r needs r >= 1");
  const auto t = Poly<F>::x(field);
  const auto one = Poly<F>::one(field);
  return presentation_make(field, {r - 1, r + 1}, {r}, std::vector<std::vector<Poly<F>>>{{t, one}});
}

/// Evaluated functor on M_1, ..., M_{s_max}; V_s = 0 beyond. Maps are
/// stored for 1 <= s < s_max; the accessors extend them by zero.
template <Field F>
struct FunctorData {
  F field;
  int s_max = 0;
  std::vector<Matrix<F>> t;  // t[s-1] on V_s
  std::vector<Matrix<F>> u;  // u[s-1]: V_s -> V_{s+1}
  std::vector<Matrix<F>> d;  // d[s-1]: V_{s+1} -> V_s

  explicit FunctorData(F f) : field(std::move(f)) {}

  std::size_t dim(int s) const { return s >= 1 && s <= s_max ? t[static_cast<std::size_t>(s - 1)].rows() : 0; }
  Matrix<F> t_map(int s) const {
    return s >= 1 && s <= s_max ? t[static_cast<std::size_t>(s - 1)] : Matrix<F>(field, dim(s), dim(s));
  }
  Matrix<F> u_map(int s) const {
    return s >= 1 && s < s_max ? u[static_cast<std::size_t>(s - 1)] : Matrix<F>(field, dim(s + 1), dim(s));
  }
  Matrix<F> d_map(int s) const {
    return s >= 1 && s < s_max ? d[static_cast<std::size_t>(s - 1)] : Matrix<F>(field, dim(s), dim(s + 1));
  }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (int s = 1; s <= s_max; ++s) out.push_back(dim(s));
    return out;
  }
};

namespace detail {

/// Coordinates of ann(t^s) inside a sum of Jordan blocks: block offset + i
/// with i >= size - s.
inline std::vector<std::size_t> annihilator_coords(const std::vector<int>& blocks, int s) {
  std::vector<std::size_t> out;
  std::size_t off = 0;
  for (int b : blocks) {
    for (int i = std::max(b - s, 0); i < b; ++i) out.push_back(off + static_cast<std::size_t>(i));
    off += static_cast<std::size_t>(b);
  }
  return out;
}

template <Field F>
Matrix<F> submatrix(const Matrix<F>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix<F> out(m.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

template <Field F>
Matrix<F> blocks_action(const F& f, const std::vector<int>& blocks) {
  Matrix<F> a(f, 0, 0);
  for (int b : blocks) a = direct_sum(a, jordan_block(f, static_cast<std::size_t>(b)));
  return a;
}

template <Field F>
struct Degree {
  std::vector<std::size_t> coords;
  Quotient<F> q;
};

template <Field F>
Degree<F> degree(const CoherentFunctor<F>& fn, const Matrix<F>& bm, int s) {
  auto tgt = annihilator_coords(fn.target, s);
  auto src = annihilator_coords(fn.source, s);
  // Hom(M_s, X) = ann_X(t^s) via f |-> f(1); beta maps ann into ann.
  Quotient<F> q(submatrix(bm, tgt, src), tgt.size());
  return {std::move(tgt), std::move(q)};
}

}  // namespace detail

/// dim F M_s for any s >= 0.
template <Field F>
std::size_t evaluate_dim(const CoherentFunctor<F>& fn, int s) {
  if (s <= 0) return 0;
  return detail::degree(fn, fn.beta_matrix(), s).q.dim();
}

template <Field F>
FunctorData<F> evaluate(const CoherentFunctor<F>& fn) {
  const F& f = fn.field;
  FunctorData<F> out(f);
  for (int b : fn.source) out.s_max = std::max(out.s_max, b);
  const auto bm = fn.beta_matrix();
  const auto tb = detail::blocks_action(f, fn.target);
  std::vector<detail::Degree<F>> deg;
  for (int s = 1; s <= out.s_max; ++s) deg.push_back(detail::degree(fn, bm, s));
  for (std::size_t i = 0; i < deg.size(); ++i) {
    const auto& a = deg[i];
    out.t.push_back(induced_map(detail::submatrix(tb, a.coords, a.coords), a.q, a.q));
    if (i + 1 == deg.size()) break;
    const auto& b = deg[i + 1];
    // u: inclusion ann(t^s) -> ann(t^(s+1)); d: multiplication by t
    Matrix<F> inc(f, b.coords.size(), a.coords.size());
    for (std::size_t j = 0; j < a.coords.size(); ++j) {
      const auto pos = std::find(b.coords.begin(), b.coords.end(), a.coords[j]) - b.coords.begin();
      inc(static_cast<std::size_t>(pos), j) = f.one();
    }
    out.u.push_back(induced_map(inc, a.q, b.q));
    out.d.push_back(induced_map(detail::submatrix(tb, a.coords, b.coords), b.q, a.q));
  }
  return out;
}

template <Field F>
std::size_t dim_functor(const FunctorData<F>& d) {
  std::size_t n = 0;
  for (int s = 1; s <= d.s_max; ++s) n += d.dim(s);
  return n;
}

/// d_s u_s = t_s, u_s d_s = t_{s+1} and t_s^s = 0.
template <Field F>
bool relations_hold(const FunctorData<F>& d) {
  for (int s = 1; s <= d.s_max; ++s) {
    if (!(d.d_map(s) * d.u_map(s) == d.t_map(s))) return false;
    if (!(d.u_map(s) * d.d_map(s) == d.t_map(s + 1))) return false;
    if (!power(d.t_map(s), static_cast<std::uint64_t>(s)).is_zero()) return false;
  }
  return true;
}

/// Membership in F': all u_s and d_s vanish; then nu_r = dim V_r.
template <Field F>
std::optional<NuVector> in_f_prime(const FunctorData<F>& d) {
  NuVector nu;
  for (int s = 1; s <= d.s_max; ++s) {
    if (!d.u_map(s).is_zero() || !d.d_map(s).is_zero()) return std::nullopt;
    if (d.dim(s) != 0) nu[s] = static_cast<std::int64_t>(d.dim(s));
  }
  return nu;
}

/// The image (FM_r)_r of a functor in F'.
template <Field F>
std::vector<std::pair<int, std::size_t>> phi(const FunctorData<F>& d) {
  auto nu = in_f_prime(d);
  if (!nu) fail(errc::kNotInFPrime, "functor has nonzero structure maps");
  std::vector<std::pair<int, std::size_t>> out;
  for (const auto& [r, n] : *nu) out.emplace_back(r, static_cast<std::size_t>(n));
  return out;
}

/// Per-degree subspaces (basis columns) closed under t, u and d.
template <Field F>
struct Subfunctor {
  std::vector<Matrix<F>> spans;  // spans[s-1] inside V_s
};

template <Field F>
bool is_subfunctor(const FunctorData<F>& d, const Subfunctor<F>& sub) {
  auto span = [&](int s) { return s >= 1 && s <= d.s_max ? sub.spans[static_cast<std::size_t>(s - 1)] : Matrix<F>(d.field, d.dim(s), 0); };
  auto inside = [](const Matrix<F>& img, const Matrix<F>& sp) { return rank(hconcat(sp, img)) == rank(sp); };
  for (int s = 1; s <= d.s_max; ++s) {
    if (!inside(d.t_map(s) * span(s), span(s))) return false;
    if (!inside(d.u_map(s) * span(s), span(s + 1))) return false;
    if (s > 1 && !inside(d.d_map(s - 1) * span(s), span(s - 1))) return false;
  }
  return true;
}

/// Degreewise quotient with induced maps.
template <Field F>
FunctorData<F> quotient(const FunctorData<F>& d, const Subfunctor<F>& sub) {
  std::vector<Quotient<F>> qs;
  for (int s = 1; s <= d.s_max; ++s) qs.emplace_back(sub.spans[static_cast<std::size_t>(s - 1)], d.dim(s));
  FunctorData<F> out(d.field);
  out.s_max = d.s_max;
  for (int s = 1; s <= d.s_max; ++s) {
    const auto i = static_cast<std::size_t>(s - 1);
    out.t.push_back(induced_map(d.t_map(s), qs[i], qs[i]));
    if (s == d.s_max) break;
    out.u.push_back(induced_map(d.u_map(s), qs[i], qs[i + 1]));
    out.d.push_back(induced_map(d.d_map(s), qs[i + 1], qs[i]));
  }
  return out;
}

template <Field F>
struct Mono {
  int r;
  std::vector<typename F::Elem> v;
};

namespace detail {

template <Field F>
std::optional<Mono<F>> find_mono(const FunctorData<F>& d, std::uint64_t seed, Rng& rng) {
  const F& f = d.field;
  for (int r = 1; r <= d.s_max; ++r) {
    if (d.dim(r) == 0) continue;
    const Matrix<F> k = kernel(d.u_map(r));
    if (k.cols() == 0) continue;
    std::vector<typename F::Elem> v = k.column(0);
    if (seed != 0) {
      for (;;) {
        std::vector<typename F::Elem> c;
        bool nonzero = false;
        for (std::size_t j = 0; j < k.cols(); ++j) {
          c.push_back(f.random(rng));
          nonzero = nonzero || !f.is_zero(c.back());
        }
        if (nonzero) {
          v = k * c;
          break;
        }
      }
    }
    const Matrix<F> t = d.t_map(r);
    for (;;) {
      auto w = t * v;
      if (std::all_of(w.begin(), w.end(), [&](const auto& x) { return f.is_zero(x); })) break;
      v = std::move(w);
    }
    return Mono<F>{r, std::move(v)};
  }
  return std::nullopt;
}

}  // namespace detail

/// A copy of F_r inside the functor: r minimal with u_r not injective and
/// v in ker u_r with t v = 0. Seed 0 takes the first echelon kernel vector,
/// other seeds a random kernel element.
template <Field F>
std::optional<Mono<F>> find_mono(const FunctorData<F>& d, std::uint64_t seed = 0) {
  Rng rng(seed);
  return detail::find_mono(d, seed, rng);
}

template <Field F>
Subfunctor<F> line_subfunctor(const FunctorData<F>& d, const Mono<F>& m) {
  Subfunctor<F> sub;
  for (int s = 1; s <= d.s_max; ++s) {
    if (s == m.r) {
      sub.spans.push_back(Matrix<F>::from_columns(d.field, d.dim(s), {m.v}));
    } else {
      sub.spans.emplace_back(d.field, d.dim(s), 0);
    }
  }
  return sub;
}

struct DevissageResult {
  NuVector nu;
  std::size_t steps = 0;
};

/// Split off copies of F_r one at a time until nothing is left.
template <Field F>
DevissageResult devissage_functor(FunctorData<F> d, std::uint64_t seed = 0) {
  Rng rng(seed);
  DevissageResult res;
  while (auto m = detail::find_mono(d, seed, rng)) {
    ++res.nu[m->r];
    ++res.steps;
    d = quotient(d, line_subfunctor(d, *m));
  }
  return res;
}

}  // namespace kaut
