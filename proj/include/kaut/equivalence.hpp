#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/jordan.hpp"
#include "kaut/matrix.hpp"
#include "kaut/poly.hpp"
#include "kaut/residue_field.hpp"
#include "kaut/torsion_module.hpp"

namespace kaut {

/// The m-primary summand of a module. `basis` holds the columns spanning the
/// summand inside the ambient F^d (identity when built by hand).
template <Field F>
struct PrimaryComponent {
  Poly<F> m;
  TorsionModule<F> module;
  Matrix<F> basis;

  static PrimaryComponent of(const Poly<F>& m, const TorsionModule<F>& mod) {
    return {m.monic(), mod, Matrix<F>::identity(mod.field(), mod.dim())};
  }
  const F& field() const { return module.field(); }
};

template <Field L, Field F, class Fn>
Matrix<L> map_entries(const L& target, const Matrix<F>& a, Fn&& fn) {
  Matrix<L> out(target, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = fn(a(i, j));
  }
  return out;
}

/// m(A)^dim vanishes.
template <Field F>
bool is_primary_for(const TorsionModule<F>& mod, const Poly<F>& m) {
  if (mod.dim() == 0) return true;
  return power(eval_poly(m, mod.mat()), mod.dim()).is_zero();
}

namespace detail {

template <Field F>
std::vector<PrimaryComponent<F>> split(const TorsionModule<F>& mod, std::uint64_t seed, bool admit_t) {
  const F& f = mod.field();
  std::vector<PrimaryComponent<F>> out;
  const auto cls = elementary_divisors(mod, seed);
  const Poly<F> t = Poly<F>::x(f);
  for (const auto& [key, mult] : cls.entries) {
    if (!out.empty() && out.back().m == key.m) continue;
    if (!admit_t && key.m == t) fail(errc::kNotAutomorphism, "primary_split expects an automorphism; use endo_classify");
    const Matrix<F> k = kernel(power(eval_poly(key.m, mod.mat()), mod.dim()));
    out.push_back({key.m, TorsionModule<F>(restrict_to(mod.mat(), k)), k});
  }
  return out;
}

}  // namespace detail

/// Components ker m(A)^d, one per maximal ideal (m) != (t), in canonical
/// key order.
template <Field F>
std::vector<PrimaryComponent<F>> primary_split(const TorsionModule<F>& mod, std::uint64_t seed = 0) {
  return detail::split(mod, seed, false);
}

/// As primary_split, but a singular endomorphism contributes its
/// (t)-component (the nilpotent Fitting part).
template <Field F>
std::vector<PrimaryComponent<F>> endo_classify(const TorsionModule<F>& mod, std::uint64_t seed = 0) {
  return detail::split(mod, seed, true);
}

template <Field F>
TorsionModule<F> shift_to_nilpotent(const PrimaryComponent<F>& c, const typename F::Elem& alpha) {
  const F& f = c.field();
  if (!(c.m == Poly<F>::linear(f, alpha))) fail(errc::kNotLinearIdeal, "component is not at (t - alpha)");
  return TorsionModule<F>(c.module.mat() - Matrix<F>::identity(f, c.module.dim()).scaled(alpha));
}

template <Field F>
TorsionModule<F> shift_from_nilpotent(const TorsionModule<F>& n, const typename F::Elem& alpha) {
  if (!is_nilpotent(n.mat())) fail(errc::kNotNilpotent, "inverse shift expects a nilpotent module");
  return TorsionModule<F>(n.mat() + Matrix<F>::identity(n.field(), n.dim()).scaled(alpha));
}

template <Field F>
struct FExtResult {
  using L = residue_field_t<F>;
  ResidueField<F> residue;
  TorsionModule<L> nilpotent;
  Matrix<L> eigenbasis;  // columns: basis of the generalized alpha-eigenspace in L^d
};

/// Base change to L = F[t]/m, then the generalized alpha-eigenspace with
/// t shifted by -alpha.
template <Field F>
FExtResult<F> fext_forward(const PrimaryComponent<F>& c, std::uint64_t seed = 0) {
  using L = residue_field_t<F>;
  if (!is_separable(c.m)) fail(errc::kInseparable, "residue field transport needs a separable ideal");
  auto res = residue_field(c.field(), c.m, seed);
  if (!is_primary_for(c.module, c.m)) fail(errc::kNotPrimary, "module is not m-primary");
  const L& lf = res.field();
  const std::size_t d = c.module.dim();
  const Matrix<L> al = map_entries(lf, c.module.mat(), [&](const auto& x) { return res.embed(x); });
  const Matrix<L> b = al - Matrix<L>::identity(lf, d).scaled(res.alpha());
  Matrix<L> e = kernel(power(b, d));
  TorsionModule<L> n(restrict_to(b, e));
  return {std::move(res), std::move(n), std::move(e)};
}

/// Restriction of scalars: L^e viewed over F with basis alpha^i e_j
/// (index j k + i), t acting as alpha + N.
template <Field F>
TorsionModule<F> fext_backward(const ResidueField<F>& res, const TorsionModule<residue_field_t<F>>& n, const Poly<F>& m) {
  if (!(m.monic() == res.modulus())) fail(errc::kFieldMismatch, "residue field was built from a different ideal");
  if (!(n.field() == res.field())) fail(errc::kFieldMismatch, "nilpotent module is not over the residue field");
  if (!is_nilpotent(n.mat())) fail(errc::kNotNilpotent, "fext_backward expects a nilpotent module");
  const F& f = res.base();
  const auto& lf = res.field();
  const std::size_t e = n.dim();
  const auto k = static_cast<std::size_t>(res.degree());
  Matrix<F> t(f, e * k, e * k);
  for (std::size_t j = 0; j < e; ++j) {
    auto ai = lf.one();
    for (std::size_t i = 0; i < k; ++i) {
      // t(alpha^i e_j) = alpha^(i+1) e_j + sum_l N[l][j] alpha^i e_l
      for (std::size_t l = 0; l < e; ++l) {
        auto v = lf.mul(ai, n.mat()(l, j));
        if (l == j) v = lf.add(v, lf.mul(ai, res.alpha()));
        const auto cs = res.coords(v);
        for (std::size_t q = 0; q < k; ++q) t(l * k + q, j * k + i) = cs[q];
      }
      ai = lf.mul(ai, res.alpha());
    }
  }
  return TorsionModule<F>(std::move(t));
}

/// Unit eta: M -> R(L(M)) and counit eps: L(R(N)) -> N of the residue-field
/// adjunction, with exact certificates.
template <Field F>
struct FExtWitness {
  using L = residue_field_t<F>;
  TorsionModule<F> source;
  TorsionModule<L> target;
  TorsionModule<F> back;  // fext_backward(target)
  Matrix<F> unit;         // F-linear, source -> back
  Matrix<L> counit;       // L-linear, L(back) -> target
  bool unit_invertible = false;
  bool unit_natural = false;
  bool counit_invertible = false;
  bool counit_natural = false;
  bool round_trip_similar = false;
  bool nil_class_preserved = false;
  bool dimension_identity = false;

  bool valid() const {
    return unit_invertible && unit_natural && counit_invertible && counit_natural && round_trip_similar &&
           nil_class_preserved && dimension_identity;
  }
};

template <Field F>
FExtWitness<F> verify_adjunction(const PrimaryComponent<F>& c, std::uint64_t seed = 0) {
  using L = residue_field_t<F>;
  auto fwd = fext_forward(c, seed);
  const auto& res = fwd.residue;
  const L& lf = res.field();
  const F& f = c.field();
  const std::size_t d = c.module.dim();
  const std::size_t e = fwd.nilpotent.dim();
  const auto k = static_cast<std::size_t>(res.degree());
  auto back = fext_backward(res, fwd.nilpotent, c.m);

  // eta: project onto the eigenspace along the image of (A_L - alpha)^d
  const Matrix<L> al = map_entries(lf, c.module.mat(), [&](const auto& x) { return res.embed(x); });
  const Matrix<L> bpow = power(al - Matrix<L>::identity(lf, d).scaled(res.alpha()), d);
  const Matrix<L> pinv = inverse(hconcat(fwd.eigenbasis, column_echelon(bpow)));
  Matrix<F> unit(f, e * k, d);
  for (std::size_t col = 0; col < d; ++col) {
    for (std::size_t j = 0; j < e; ++j) {
      const auto cs = res.coords(pinv(j, col));
      for (std::size_t i = 0; i < k; ++i) unit(j * k + i, col) = cs[i];
    }
  }

  // eps: lambda (alpha^i e_j) |-> lambda alpha^i e_j, on the eigenspace of L(back)
  const Matrix<L> tl = map_entries(lf, back.mat(), [&](const auto& x) { return res.embed(x); });
  const Matrix<L> b2 = tl - Matrix<L>::identity(lf, e * k).scaled(res.alpha());
  const Matrix<L> e2 = kernel(power(b2, e * k));
  const Matrix<L> n2 = restrict_to(b2, e2);
  Matrix<L> mu(lf, e, e * k);
  for (std::size_t j = 0; j < e; ++j) {
    auto ai = lf.one();
    for (std::size_t i = 0; i < k; ++i) {
      mu(j, j * k + i) = ai;
      ai = lf.mul(ai, res.alpha());
    }
  }
  Matrix<L> counit = mu * e2;

  FExtWitness<F> w{c.module, fwd.nilpotent, back, unit, counit};
  w.dimension_identity = d == e * k;
  w.unit_invertible = is_invertible(unit);
  w.unit_natural = w.dimension_identity && unit * c.module.mat() == back.mat() * unit;
  w.counit_invertible = is_invertible(counit);
  w.counit_natural = counit * n2 == fwd.nilpotent.mat() * counit;
  w.round_trip_similar = similar(back, c.module);
  w.nil_class_preserved = jordan_type(n2) == jordan_type(fwd.nilpotent.mat());
  return w;
}

}  // namespace kaut
