#pragma once

#include <cstdint>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/extension_field.hpp"
#include "kaut/factor.hpp"
#include "kaut/matrix.hpp"
#include "kaut/poly.hpp"

namespace kaut {

template <Field F>
struct residue_field_of;
template <>
struct residue_field_of<PrimeField> {
  using type = GaloisField;
};
template <>
struct residue_field_of<GaloisField> {
  using type = GaloisField;
};
template <>
struct residue_field_of<RationalField> {
  using type = NumberField;
};

template <Field F>
using residue_field_t = typename residue_field_of<F>::type;

template <Field F>
class ResidueField;

template <Field F>
ResidueField<F> residue_field(const F& base, const Poly<F>& m, std::uint64_t seed = 0);

/// The residue field L = F[t]/m, together with the class alpha of t, the
/// embedding F -> L and F-coordinates of L with respect to the basis
/// 1, alpha, ..., alpha^(k-1), k = deg m.
///
/// L is always presented over the prime field (or Q). For an extension
/// base F_q = F_p[y]/(f) the tower is flattened: L = F_p[z]/(g) with
/// deg g = deg f * deg m, and y maps to a root of f in L.
template <Field F>
class ResidueField {
 public:
  using L = residue_field_t<F>;
  using BaseElem = typename F::Elem;
  using Elem = typename L::Elem;

  const F& base() const { return base_; }
  const L& field() const { return field_; }
  const Poly<F>& modulus() const { return modulus_; }
  const Elem& alpha() const { return alpha_; }
  int degree() const { return modulus_.degree(); }

  Elem embed(const BaseElem& a) const {
    if constexpr (std::same_as<F, GaloisField>) {
      if (flat_) {
        Elem r = field_.zero();
        Elem pw = field_.one();
        for (const auto& c : a) {
          r = field_.add(r, field_.mul(field_.embed_base(c), pw));
          pw = field_.mul(pw, base_image_);
        }
        return r;
      }
      return a;
    } else {
      return field_.embed_base(a);
    }
  }

  /// Coordinates c_0..c_{k-1} in F with l = sum c_j alpha^j.
  std::vector<BaseElem> coords(const Elem& l) const {
    if constexpr (std::same_as<F, GaloisField>) {
      if (!flat_) return {l};
      const int n = base_.degree();
      const int k = degree();
      auto v = to_prime_ * l;
      std::vector<BaseElem> out;
      for (int j = 0; j < k; ++j) {
        BaseElem c(v.begin() + j * n, v.begin() + (j + 1) * n);
        out.push_back(std::move(c));
      }
      return out;
    } else {
      // alpha is the generator x, so coordinates are the coefficient vector.
      return l;
    }
  }

  Elem from_coords(const std::vector<BaseElem>& c) const {
    Elem r = field_.zero();
    Elem pw = field_.one();
    for (const auto& x : c) {
      r = field_.add(r, field_.mul(embed(x), pw));
      pw = field_.mul(pw, alpha_);
    }
    return r;
  }

  Poly<L> embed_poly(const Poly<F>& p) const {
    std::vector<Elem> v;
    for (const auto& c : p.coeffs()) v.push_back(embed(c));
    return Poly<L>(field_, std::move(v));
  }

  template <Field G>
  friend ResidueField<G> residue_field(const G& base, const Poly<G>& m, std::uint64_t seed);

 private:
  ResidueField(F base, Poly<F> modulus, L field, Elem alpha)
      : base_(std::move(base)), modulus_(std::move(modulus)), field_(std::move(field)), alpha_(std::move(alpha)) {}

  F base_;
  Poly<F> modulus_;
  L field_;
  Elem alpha_;
  // flattened-tower data (GaloisField base with deg m > 1)
  bool flat_ = false;
  Elem base_image_{};
  Matrix<PrimeField> to_prime_{PrimeField(2)};
};

/// Residue field F[t]/m for a monic irreducible m (ReducibleModulus
/// otherwise). The seed drives the search for the flattened modulus.
template <Field F>
ResidueField<F> residue_field(const F& base, const Poly<F>& m_in, std::uint64_t seed) {
  if (!(m_in.field() == base)) fail(errc::kFieldMismatch, "modulus is not over the base field");
  if (m_in.degree() < 1 || !is_irreducible(m_in)) {
    fail(errc::kReducibleModulus, "residue field modulus must be irreducible");
  }
  const Poly<F> m = m_in.monic();
  using L = residue_field_t<F>;
  if constexpr (std::same_as<F, GaloisField>) {
    if (m.degree() == 1) return ResidueField<F>(base, m, base, base.neg(m.coeff(0)));
    const PrimeField& fp = base.base();
    const int n = base.degree();
    const int k = m.degree();
    const int total = n * k;
    Rng rng(seed);
    // Random monic degree-(n k) polynomials over F_p until one is irreducible.
    Poly<PrimeField> g(fp);
    for (;;) {
      std::vector<std::uint64_t> c;
      for (int i = 0; i < total; ++i) c.push_back(fp.random(rng));
      c.push_back(1);
      g = Poly<PrimeField>(fp, std::move(c));
      if (is_irreducible(g)) break;
    }
    L lf(fp, g);
    // y -> first root of f in L
    std::vector<typename L::Elem> fc;
    for (const auto& c : base.modulus().coeffs()) fc.push_back(lf.embed_base(c));
    auto beta = roots(Poly<L>(lf, std::move(fc)), seed).front();
    ResidueField<F> r(base, m, lf, lf.zero());
    r.flat_ = true;
    r.base_image_ = beta;
    auto ml = r.embed_poly(m);
    auto rts = roots(ml, seed);
    std::sort(rts.begin(), rts.end(), [&](const auto& a, const auto& b) { return lf.compare(a, b) < 0; });
    r.alpha_ = rts.front();
    // prime-field coordinates of the basis beta^i alpha^j, index j n + i
    std::vector<std::vector<std::uint64_t>> cols;
    auto aj = lf.one();
    for (int j = 0; j < k; ++j) {
      auto bi = aj;
      for (int i = 0; i < n; ++i) {
        cols.push_back(bi);
        bi = lf.mul(bi, beta);
      }
      aj = lf.mul(aj, r.alpha_);
    }
    r.to_prime_ = inverse(Matrix<PrimeField>::from_columns(fp, static_cast<std::size_t>(total), cols));
    return r;
  } else {
    L lf(base, m);
    return ResidueField<F>(base, m, lf, lf.generator());
  }
}

/// Embedding of a base element into a residue field built over `base`.
template <Field F>
typename ResidueField<F>::Elem embed(const F& base, const ResidueField<F>& ext, const typename F::Elem& a) {
  if (!(base == ext.base())) fail(errc::kFieldMismatch, "extension was not constructed over this base");
  return ext.embed(a);
}

}  // namespace kaut
