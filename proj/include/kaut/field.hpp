#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kaut {

/// Serializable description of an exact field.
///
/// `Extension` over a prime field stores the modulus in `modulus`; the
/// number-field case (extension of the rationals) stores it in
/// `rational_modulus`. Coefficients are little-endian.
struct FieldDescriptor {
  enum class Kind { Prime, Extension, Rationals };

  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> modulus;
  std::vector<mpq_class> rational_modulus;

  static FieldDescriptor prime(std::uint64_t p) { return {Kind::Prime, p, {}, {}}; }
  static FieldDescriptor extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    return {Kind::Extension, p, std::move(modulus), {}};
  }
  static FieldDescriptor number_field(std::vector<mpq_class> modulus) {
    return {Kind::Extension, 0, {}, std::move(modulus)};
  }
  static FieldDescriptor rationals() { return {}; }

  bool over_rationals() const { return kind == Kind::Rationals || (kind == Kind::Extension && p == 0); }

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind == b.kind && a.p == b.p && a.modulus == b.modulus &&
           a.rational_modulus == b.rational_modulus;
  }
};

using Rng = std::mt19937_64;

template <class F>
concept Field = std::copy_constructible<F> &&
    requires(const F& f, const typename F::Elem& a, std::int64_t n, Rng& rng) {
  typename F::Elem;
  { F::is_finite } -> std::convertible_to<bool>;
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(n) } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
  { f.compare(a, a) } -> std::same_as<std::strong_ordering>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
  { f.random(rng) } -> std::same_as<typename F::Elem>;
  { f.descriptor() } -> std::same_as<FieldDescriptor>;
  { f == f } -> std::convertible_to<bool>;
};

/// Finite fields additionally expose the Frobenius structure used by
/// factorization: degree over the prime field, a^p, and p-th roots.
template <class F>
concept FiniteField = Field<F> && F::is_finite &&
    requires(const F& f, const typename F::Elem& a, std::uint64_t i) {
  { f.degree() } -> std::convertible_to<int>;
  { f.frobenius(a) } -> std::same_as<typename F::Elem>;
  { f.pth_root(a) } -> std::same_as<typename F::Elem>;
  { f.order() } -> std::same_as<std::optional<std::uint64_t>>;
  { f.element_at(i) } -> std::same_as<typename F::Elem>;
};

template <Field F>
typename F::Elem pow(const F& f, typename F::Elem a, std::uint64_t e) {
  auto r = f.one();
  while (e != 0) {
    if (e & 1U) r = f.mul(r, a);
    e >>= 1U;
    if (e != 0) a = f.mul(a, a);
  }
  return r;
}

}  // namespace kaut
