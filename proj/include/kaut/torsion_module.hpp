#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/factor.hpp"
#include "kaut/matrix.hpp"
#include "kaut/poly.hpp"
#include "kaut/snf.hpp"

namespace kaut {

/// A finite-dimensional F-vector space with an endomorphism, i.e. a
/// finitely generated torsion F[t]-module. t acts by `mat`.
template <Field F>
class TorsionModule {
 public:
  explicit TorsionModule(Matrix<F> mat) : mat_(std::move(mat)) {
    if (!mat_.is_square()) fail(errc::kShapeMismatch, "module matrix must be square");
  }
  static TorsionModule zero(const F& f) { return TorsionModule(Matrix<F>(f, 0, 0)); }

  const F& field() const { return mat_.field(); }
  const Matrix<F>& mat() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

  friend TorsionModule direct_sum(const TorsionModule& a, const TorsionModule& b) {
    return TorsionModule(kaut::direct_sum(a.mat_, b.mat_));
  }

 private:
  Matrix<F> mat_;
};

/// Key (m, r) of an elementary divisor F[t]/m^r.
template <Field F>
struct DivisorKey {
  Poly<F> m;
  int r;

  friend bool operator==(const DivisorKey& a, const DivisorKey& b) { return a.r == b.r && a.m == b.m; }
};

template <Field F>
struct DivisorKeyLess {
  bool operator()(const DivisorKey<F>& a, const DivisorKey<F>& b) const {
    if (auto c = canonical_compare(a.m, b.m); c != 0) return c < 0;
    return a.r < b.r;
  }
};

template <Field F>
using DivisorMap = std::map<DivisorKey<F>, std::int64_t, DivisorKeyLess<F>>;

/// Multiset of elementary divisors; the complete similarity invariant.
template <Field F>
struct DivisorClass {
  F field;
  DivisorMap<F> entries;

  explicit DivisorClass(F f) : field(std::move(f)) {}

  void add(const Poly<F>& m, int r, std::int64_t mult = 1) {
    auto& slot = entries[DivisorKey<F>{m, r}];
    slot += mult;
    if (slot == 0) entries.erase(DivisorKey<F>{m, r});
  }
  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& [k, mult] : entries) d += static_cast<std::size_t>(mult) * static_cast<std::size_t>(k.r * k.m.degree());
    return d;
  }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    if (!(a.field == b.field)) fail(errc::kFieldMismatch, "divisor classes over different fields");
    for (const auto& [k, mult] : b.entries) a.add(k.m, k.r, mult);
    return a;
  }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.field == b.field && a.entries == b.entries;
  }
};

template <Field F>
SmithForm<F> char_matrix_snf(const TorsionModule<F>& m) {
  return smith_normal_form(PolyMatrix<F>::characteristic(m.mat()));
}

/// Nonconstant invariant factors d_1 | d_2 | ... of tI - A.
template <Field F>
std::vector<Poly<F>> invariant_factors(const TorsionModule<F>& m) {
  std::vector<Poly<F>> out;
  for (auto& d : char_matrix_snf(m).diagonal()) {
    if (!d.is_constant()) out.push_back(std::move(d));
  }
  return out;
}

template <Field F>
Poly<F> characteristic_polynomial(const TorsionModule<F>& m) {
  Poly<F> p = Poly<F>::one(m.field());
  for (const auto& d : invariant_factors(m)) p *= d;
  return p;
}

template <Field F>
DivisorClass<F> divisor_class_of_invariant_factors(const F& field, const std::vector<Poly<F>>& factors,
                                                   std::uint64_t seed) {
  DivisorClass<F> c(field);
  for (const auto& d : factors) {
    for (const auto& [m, e] : factor(d, seed).factors) c.add(m, e);
  }
  return c;
}

template <Field F>
DivisorClass<F> elementary_divisors(const TorsionModule<F>& m, std::uint64_t seed = 0) {
  return divisor_class_of_invariant_factors(m.field(), invariant_factors(m), seed);
}

/// No elementary divisor at (t), i.e. t does not divide the last invariant
/// factor.
template <Field F>
bool is_automorphism(const TorsionModule<F>& m) {
  auto inv = invariant_factors(m);
  return inv.empty() || !m.field().is_zero(inv.back().coeff(0));
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal, the
/// last column carries the negated coefficients.
template <Field F>
Matrix<F> companion(const Poly<F>& p) {
  const F& f = p.field();
  if (!p.is_monic()) fail(errc::kInvalidArgument, "companion matrix needs a monic polynomial");
  const auto n = static_cast<std::size_t>(p.degree());
  Matrix<F> c(f, n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = f.one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = f.neg(p.coeffs()[i]);
  return c;
}

/// Jordan block M_r = F[t]/t^r (nilpotent shift, basis 1, t, ..., t^(r-1)).
template <Field F>
Matrix<F> jordan_block(const F& f, std::size_t r) {
  return companion(Poly<F>::monomial(f, f.one(), static_cast<int>(r)));
}

/// Block diagonal sum of companion matrices of m^r.
template <Field F>
TorsionModule<F> build_module(const F& field, const DivisorClass<F>& c) {
  Matrix<F> a(field, 0, 0);
  for (const auto& [k, mult] : c.entries) {
    if (mult < 0) fail(errc::kNegativeCoefficient, "cannot realize a virtual class");
    const Matrix<F> block = companion(pow(k.m, static_cast<std::uint64_t>(k.r)));
    for (std::int64_t i = 0; i < mult; ++i) a = direct_sum(a, block);
  }
  return TorsionModule<F>(std::move(a));
}

/// Similarity via invariant factors (no factorization involved).
template <Field F>
bool similar(const TorsionModule<F>& a, const TorsionModule<F>& b) {
  if (!(a.field() == b.field())) fail(errc::kFieldMismatch, "modules over different fields");
  if (a.dim() != b.dim()) return false;
  return invariant_factors(a) == invariant_factors(b);
}

/// Similarity via elementary divisors; must agree with `similar`.
template <Field F>
bool similar_by_divisors(const TorsionModule<F>& a, const TorsionModule<F>& b, std::uint64_t seed = 0) {
  if (!(a.field() == b.field())) fail(errc::kFieldMismatch, "modules over different fields");
  return elementary_divisors(a, seed) == elementary_divisors(b, seed);
}

}  // namespace kaut
