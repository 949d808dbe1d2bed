#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/field.hpp"

namespace kaut {

/// Univariate polynomial over F, little-endian coefficients with no
/// trailing zeros (the zero polynomial is the empty vector).
template <Field F>
class Poly {
 public:
  using Elem = typename F::Elem;

  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& f, Elem c) { return Poly(f, {std::move(c)}); }
  static Poly monomial(const F& f, Elem c, int deg) {
    std::vector<Elem> v(static_cast<std::size_t>(deg) + 1, f.zero());
    v.back() = std::move(c);
    return Poly(f, std::move(v));
  }
  static Poly x(const F& f) { return monomial(f, f.one(), 1); }
  static Poly one(const F& f) { return constant(f, f.one()); }
  /// t - a
  static Poly linear(const F& f, const Elem& a) { return Poly(f, {f.neg(a), f.one()}); }
  /// Integer coefficients, reduced into F.
  static Poly from_ints(const F& f, const std::vector<std::int64_t>& ints) {
    std::vector<Elem> v;
    v.reserve(ints.size());
    for (auto n : ints) v.push_back(f.from_int(n));
    return Poly(f, std::move(v));
  }

  const F& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && field_.equal(c_[0], field_.one()); }
  bool is_monic() const { return !c_.empty() && field_.equal(c_.back(), field_.one()); }
  const Elem& lc() const { return c_.back(); }
  Elem coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : field_.zero();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(lc()));
  }
  Poly scaled(const Elem& s) const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(field_.mul(a, s));
    return Poly(field_, std::move(v));
  }
  Poly derivative() const {
    std::vector<Elem> v;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      v.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]));
    }
    return Poly(field_, std::move(v));
  }
  Elem eval(const Elem& x) const {
    Elem r = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
    return r;
  }
  /// Multiplication by t^k.
  Poly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<Elem> v(static_cast<std::size_t>(k), field_.zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
  }
  /// Reduction modulo t^k.
  Poly truncated(int k) const {
    if (static_cast<int>(c_.size()) <= k) return *this;
    return Poly(field_, std::vector<Elem>(c_.begin(), c_.begin() + k));
  }
  /// Largest k with t^k dividing this polynomial (zero polynomial: -1).
  int t_adic_valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!field_.is_zero(c_[i])) return static_cast<int>(i);
    }
    return -1;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const F& f = a.field_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = f.add(v[i], b.c_[i]);
    return Poly(f, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const F& f = a.field_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = f.sub(v[i], b.c_[i]);
    return Poly(f, std::move(v));
  }
  friend Poly operator-(const Poly& a) { return Poly(a.field_) - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const F& f = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(f, std::move(v));
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    }
    return true;
  }

 private:
  static void check_same_field(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_)) fail(errc::kFieldMismatch, "polynomials over different fields");
  }
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;
};

template <Field F>
void require_same_field(const Poly<F>& a, const Poly<F>& b) {
  if (!(a.field() == b.field())) fail(errc::kFieldMismatch, "polynomials over different fields");
}

/// (q, r) with a = q b + r and deg r < deg b.
template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  require_same_field(a, b);
  if (b.is_zero()) fail(errc::kDivisionByZeroPoly, "division by the zero polynomial");
  const F& f = a.field();
  using Elem = typename F::Elem;
  if (a.degree() < b.degree()) return {Poly<F>(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db) + 1, f.zero());
  const Elem lead_inv = f.inv(b.lc());
  for (int k = a.degree() - db; k >= 0; --k) {
    Elem c = f.mul(r[static_cast<std::size_t>(k + db)], lead_inv);
    q[static_cast<std::size_t>(k)] = c;
    if (f.is_zero(c)) continue;
    for (int i = 0; i <= db; ++i) {
      auto& slot = r[static_cast<std::size_t>(k + i)];
      slot = f.sub(slot, f.mul(c, bc[static_cast<std::size_t>(i)]));
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<F>(f, std::move(q)), Poly<F>(f, std::move(r))};
}

template <Field F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}

template <Field F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

template <Field F>
bool divides(const Poly<F>& d, const Poly<F>& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

/// Monic gcd; gcd(0, 0) = 0.
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (g, s, t) with s a + t b = g, g monic.
template <Field F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const Poly<F>& a, const Poly<F>& b) {
  require_same_field(a, b);
  const F& f = a.field();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::one(f), s1(f);
  Poly<F> t0(f), t1 = Poly<F>::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto li = f.inv(r0.lc());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

template <Field F>
Poly<F> pow(Poly<F> a, std::uint64_t e) {
  Poly<F> r = Poly<F>::one(a.field());
  while (e != 0) {
    if (e & 1U) r *= a;
    e >>= 1U;
    if (e != 0) a *= a;
  }
  return r;
}

template <Field F>
Poly<F> pow_mod(Poly<F> a, std::uint64_t e, const Poly<F>& m) {
  Poly<F> r = Poly<F>::one(a.field()) % m;
  a = a % m;
  while (e != 0) {
    if (e & 1U) r = (r * a) % m;
    e >>= 1U;
    if (e != 0) a = (a * a) % m;
  }
  return r;
}

/// Canonical order on polynomials: degree first, then coefficients from
/// the constant term upward using the field's canonical element order.
template <Field F>
std::strong_ordering canonical_compare(const Poly<F>& a, const Poly<F>& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& f = a.field();
  for (int i = 0; i <= a.degree(); ++i) {
    if (auto c = f.compare(a.coeffs()[static_cast<std::size_t>(i)], b.coeffs()[static_cast<std::size_t>(i)]); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

template <Field F>
struct CanonicalLess {
  bool operator()(const Poly<F>& a, const Poly<F>& b) const { return canonical_compare(a, b) < 0; }
};

template <Field F>
bool is_separable(const Poly<F>& f) {
  if (f.is_zero()) fail(errc::kZeroPolynomial, "is_separable of the zero polynomial");
  return gcd(f, f.derivative()).is_constant();
}

}  // namespace kaut
