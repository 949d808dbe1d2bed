#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kaut/equivalence.hpp"
#include "kaut/error.hpp"
#include "kaut/jordan.hpp"
#include "kaut/torsion_module.hpp"

namespace kaut {

/// Element of the Grothendieck group of automorphisms: integer
/// combination of the classes [F[t]/m^r], m != t. Zero coefficients are
/// never stored.
template <Field F>
struct K0Class {
  F field;
  DivisorMap<F> entries;

  explicit K0Class(F f) : field(std::move(f)) {}

  void add(const Poly<F>& m, int r, std::int64_t c) {
    if (c == 0) return;
    auto& slot = entries[DivisorKey<F>{m, r}];
    slot += c;
    if (slot == 0) entries.erase(DivisorKey<F>{m, r});
  }
  bool empty() const { return entries.empty(); }
};

/// Block size -> integer coefficient.
struct NilK0Class {
  std::map<int, std::int64_t> entries;

  friend bool operator==(const NilK0Class&, const NilK0Class&) = default;
};

template <Field F>
K0Class<F> aut_k0_class(const TorsionModule<F>& mod, std::uint64_t seed = 0) {
  if (!is_automorphism(mod)) fail(errc::kNotAutomorphism, "module has a (t)-primary part");
  K0Class<F> out(mod.field());
  for (const auto& [key, mult] : elementary_divisors(mod, seed).entries) out.add(key.m, key.r, mult);
  return out;
}

inline NilK0Class nil_class_of(std::map<int, std::int64_t> jt) { return NilK0Class{std::move(jt)}; }

template <Field F>
NilK0Class nil_k0_class(const TorsionModule<F>& n) {
  return nil_class_of(jordan_type(n.mat()));
}

template <Field F>
K0Class<F> k0_add(const K0Class<F>& a, const K0Class<F>& b) {
  if (!(a.field == b.field)) fail(errc::kFieldMismatch, "K0 classes over different fields");
  K0Class<F> out = a;
  for (const auto& [k, c] : b.entries) out.add(k.m, k.r, c);
  return out;
}

template <Field F>
K0Class<F> k0_neg(const K0Class<F>& a) {
  K0Class<F> out(a.field);
  for (const auto& [k, c] : a.entries) out.add(k.m, k.r, -c);
  return out;
}

template <Field F>
bool k0_eq(const K0Class<F>& a, const K0Class<F>& b) {
  if (!(a.field == b.field)) fail(errc::kFieldMismatch, "K0 classes over different fields");
  return a.entries == b.entries;
}

inline NilK0Class nil_k0_add(const NilK0Class& a, const NilK0Class& b) {
  NilK0Class out = a;
  for (const auto& [r, c] : b.entries) {
    if ((out.entries[r] += c) == 0) out.entries.erase(r);
  }
  return out;
}

/// Direct sum of companion matrices of m^r; virtual classes are rejected.
template <Field F>
TorsionModule<F> realize(const K0Class<F>& c) {
  DivisorClass<F> d(c.field);
  for (const auto& [k, coeff] : c.entries) {
    if (coeff < 0) fail(errc::kNegativeCoefficient, "cannot realize a virtual class");
    d.add(k.m, k.r, coeff);
  }
  return build_module(c.field, d);
}

/// The exponents of C's elementary divisors agree with the Jordan type of
/// the transported nilpotent module.
template <Field F>
bool transport_check(const PrimaryComponent<F>& c, std::uint64_t seed = 0) {
  std::map<int, std::int64_t> exps;
  for (const auto& [k, mult] : elementary_divisors(c.module, seed).entries) {
    if (!(k.m == c.m)) return false;
    exps[k.r] += mult;
  }
  const auto fwd = fext_forward(c, seed);
  return exps == jordan_type(fwd.nilpotent.mat());
}

}  // namespace kaut
