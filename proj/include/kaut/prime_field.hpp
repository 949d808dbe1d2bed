#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "kaut/error.hpp"
#include "kaut/field.hpp"
#include "kaut/integer.hpp"

namespace kaut {

/// F_p with word-sized residues, p < 2^61.
class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_finite = true;
  static constexpr std::uint64_t kMaxPrime = (1ULL << 61);

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= kMaxPrime) fail(errc::kPrimeTooLarge, "p must be below 2^61");
    if (!is_prime_u64(p)) fail(errc::kNotPrime, std::to_string(p) + " is not prime");
  }

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return 1; }
  std::optional<std::uint64_t> order() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const {
    auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = n % m;
    return static_cast<Elem>(r < 0 ? r + m : r);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return mulmod(a, b, p_); }
  Elem inv(Elem a) const {
    if (a == 0) fail(errc::kDivisionByZero, "inverse of zero in F_p");
    return powmod(a, p_ - 2, p_);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::strong_ordering compare(Elem a, Elem b) const { return a <=> b; }

  Elem frobenius(Elem a) const { return a; }
  Elem pth_root(Elem a) const { return a; }
  Elem element_at(std::uint64_t i) const { return i % p_; }
  Elem random(Rng& rng) const { return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng); }

  FieldDescriptor descriptor() const { return FieldDescriptor::prime(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace kaut
