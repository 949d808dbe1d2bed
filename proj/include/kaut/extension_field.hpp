#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/factor.hpp"
#include "kaut/field.hpp"
#include "kaut/poly.hpp"
#include "kaut/prime_field.hpp"
#include "kaut/rational_field.hpp"

namespace kaut {

/// Simple extension Base[x]/(modulus) of a prime field or of Q. Towers are
/// always flattened, so Base is never itself an extension.
///
/// Elements are coefficient vectors of length exactly deg(modulus). The
/// handle shares its modulus, so copies are cheap.
template <Field Base>
class ExtensionField {
 public:
  using BaseElem = typename Base::Elem;
  using Elem = std::vector<BaseElem>;
  static constexpr bool is_finite = Base::is_finite;

  /// Verifies that the modulus is irreducible (ReducibleModulus otherwise).
  ExtensionField(Base base, Poly<Base> modulus) {
    if (modulus.degree() < 1 || !is_irreducible(modulus)) {
      fail(errc::kReducibleModulus, "extension modulus must be irreducible of degree >= 1");
    }
    impl_ = std::make_shared<Impl>(Impl{std::move(base), modulus.monic()});
  }

  const Base& base() const { return impl_->base; }
  const Poly<Base>& modulus() const { return impl_->modulus; }
  int degree() const { return impl_->modulus.degree(); }
  std::uint64_t characteristic() const { return base().characteristic(); }

  std::optional<std::uint64_t> order() const
    requires FiniteField<Base>
  {
    auto q = base().order();
    unsigned __int128 n = 1;
    for (int i = 0; i < degree(); ++i) {
      n *= *q;
      if (n >> 62U) return std::nullopt;
    }
    return static_cast<std::uint64_t>(n);
  }

  Elem zero() const { return Elem(static_cast<std::size_t>(degree()), base().zero()); }
  Elem one() const { return embed_base(base().one()); }
  Elem from_int(std::int64_t n) const { return embed_base(base().from_int(n)); }
  Elem embed_base(const BaseElem& a) const {
    Elem e = zero();
    e[0] = a;
    return e;
  }
  /// The class of x.
  Elem generator() const {
    if (degree() == 1) return embed_base(base().neg(modulus().coeff(0)));
    Elem e = zero();
    e[1] = base().one();
    return e;
  }
  Elem from_poly(const Poly<Base>& p) const {
    Poly<Base> r = p % modulus();
    Elem e = zero();
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) e[i] = r.coeffs()[i];
    return e;
  }
  Poly<Base> to_poly(const Elem& a) const { return Poly<Base>(base(), a); }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(a.size(), base().zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base().add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(a.size(), base().zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base().sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(a.size(), base().zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base().neg(a[i]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    const Base& k = base();
    const std::size_t n = a.size();
    std::vector<BaseElem> prod(2 * n - 1, k.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (k.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < n; ++j) prod[i + j] = k.add(prod[i + j], k.mul(a[i], b[j]));
    }
    const auto& m = modulus().coeffs();
    for (std::size_t top = 2 * n - 2; top >= n; --top) {
      if (k.is_zero(prod[top])) continue;
      BaseElem c = prod[top];
      for (std::size_t i = 0; i < n; ++i) prod[top - n + i] = k.sub(prod[top - n + i], k.mul(c, m[i]));
    }
    prod.resize(n);
    return prod;
  }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) fail(errc::kDivisionByZero, "inverse of zero in extension field");
    auto [g, s, t] = xgcd(to_poly(a), modulus());
    (void)t;
    return from_poly(s.scaled(base().inv(g.lc())));
  }
  bool is_zero(const Elem& a) const {
    for (const auto& c : a) {
      if (!base().is_zero(c)) return false;
    }
    return true;
  }
  bool equal(const Elem& a, const Elem& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!base().equal(a[i], b[i])) return false;
    }
    return true;
  }
  /// Order of the canonical integer encoding sum c_i p^i (highest
  /// coefficient most significant).
  std::strong_ordering compare(const Elem& a, const Elem& b) const {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (auto c = base().compare(a[i], b[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  Elem frobenius(const Elem& a) const
    requires FiniteField<Base>
  {
    return pow(*this, a, characteristic());
  }
  Elem pth_root(const Elem& a) const
    requires FiniteField<Base>
  {
    Elem r = a;
    for (int i = 1; i < degree() * base().degree(); ++i) r = frobenius(r);
    return r;
  }
  Elem element_at(std::uint64_t idx) const
    requires FiniteField<Base>
  {
    const std::uint64_t q = *base().order();
    Elem e = zero();
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = base().element_at(idx % q);
      idx /= q;
    }
    return e;
  }

  Elem random(Rng& rng) const {
    Elem e = zero();
    for (auto& c : e) c = base().random(rng);
    return e;
  }

  FieldDescriptor descriptor() const {
    if constexpr (std::same_as<Base, PrimeField>) {
      return FieldDescriptor::extension(characteristic(), modulus().coeffs());
    } else {
      return FieldDescriptor::number_field(modulus().coeffs());
    }
  }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.impl_ == b.impl_ || (a.base() == b.base() && a.modulus() == b.modulus());
  }

 private:
  struct Impl {
    Base base;
    Poly<Base> modulus;
  };
  std::shared_ptr<const Impl> impl_;
};

using GaloisField = ExtensionField<PrimeField>;
using NumberField = ExtensionField<RationalField>;

/// F_{p^n} from an integer modulus (little-endian).
inline GaloisField make_galois_field(std::uint64_t p, const std::vector<std::int64_t>& modulus) {
  PrimeField fp(p);
  return GaloisField(fp, Poly<PrimeField>::from_ints(fp, modulus));
}

}  // namespace kaut
