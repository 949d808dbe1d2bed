#pragma once

#include <compare>
#include <cstdint>

#include <gmpxx.h>

#include "kaut/error.hpp"
#include "kaut/field.hpp"

namespace kaut {

/// The rationals with GMP fractions, always kept canonical.
class RationalField {
 public:
  using Elem = mpq_class;
  static constexpr bool is_finite = false;

  std::uint64_t characteristic() const { return 0; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const { return Elem(static_cast<long>(n)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) fail(errc::kDivisionByZero, "inverse of zero in Q");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::strong_ordering compare(const Elem& a, const Elem& b) const {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Small integers in [-3, 3]; the range used by the desk-scale suites.
  Elem random(Rng& rng) const {
    return from_int(std::uniform_int_distribution<int>(-3, 3)(rng));
  }

  FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace kaut
