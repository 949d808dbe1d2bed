#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kaut/error.hpp"
#include "kaut/field.hpp"
#include "kaut/integer.hpp"
#include "kaut/poly.hpp"
#include "kaut/rational_field.hpp"

namespace kaut {

/// unit * prod(factor^exponent); factors monic irreducible, distinct,
/// canonically sorted.
template <Field F>
struct Factorization {
  typename F::Elem unit;
  std::vector<std::pair<Poly<F>, int>> factors;

  Poly<F> expand(const F& f) const {
    Poly<F> r = Poly<F>::constant(f, unit);
    for (const auto& [g, e] : factors) r *= pow(g, static_cast<std::uint64_t>(e));
    return r;
  }
};

/// Degree cap for the Kronecker search over the rationals.
inline constexpr int kRationalDegreeCap = 6;

namespace detail {

template <Field F>
void sort_and_merge(std::vector<std::pair<Poly<F>, int>>& fs) {
  std::sort(fs.begin(), fs.end(),
            [](const auto& a, const auto& b) { return canonical_compare(a.first, b.first) < 0; });
  std::vector<std::pair<Poly<F>, int>> out;
  for (auto& fe : fs) {
    if (!out.empty() && out.back().first == fe.first) {
      out.back().second += fe.second;
    } else {
      out.push_back(std::move(fe));
    }
  }
  fs = std::move(out);
}

// ---------------------------------------------------------------- finite ---

/// Input has nonzero coefficients only in degrees divisible by p.
template <FiniteField F>
Poly<F> poly_pth_root(const Poly<F>& f) {
  const F& k = f.field();
  const std::uint64_t p = k.characteristic();
  std::vector<typename F::Elem> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(k.pth_root(f.coeffs()[i]));
  return Poly<F>(k, std::move(v));
}

/// h^q mod g, q the order of the field, as deg(F/F_p) successive p-th powers.
template <FiniteField F>
Poly<F> frobenius_mod(Poly<F> h, const Poly<F>& g) {
  const F& k = g.field();
  for (int i = 0; i < k.degree(); ++i) h = pow_mod(h, k.characteristic(), g);
  return h;
}

/// Squarefree decomposition of a monic polynomial in characteristic p.
template <FiniteField F>
std::vector<std::pair<Poly<F>, int>> squarefree_finite(const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, int>> out;
  if (f.degree() < 1) return out;
  const int p = static_cast<int>(std::min<std::uint64_t>(f.field().characteristic(), 1U << 30));
  Poly<F> g = f.derivative();
  if (g.is_zero()) {
    for (auto& [h, e] : squarefree_finite(poly_pth_root(f))) out.emplace_back(std::move(h), e * p);
    return out;
  }
  Poly<F> c = gcd(f, g);
  Poly<F> w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly<F> y = gcd(w, c);
    Poly<F> z = w / y;
    if (!z.is_constant()) out.emplace_back(std::move(z), i);
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_constant()) {
    for (auto& [h, e] : squarefree_finite(poly_pth_root(c.monic()))) out.emplace_back(std::move(h), e * p);
  }
  return out;
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// pairs (product of all irreducible factors of degree d, d).
template <FiniteField F>
std::vector<std::pair<Poly<F>, int>> distinct_degree(Poly<F> f) {
  std::vector<std::pair<Poly<F>, int>> out;
  const F& k = f.field();
  const Poly<F> x = Poly<F>::x(k);
  Poly<F> h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = frobenius_mod(h, f);
    Poly<F> g = gcd(h - x, f);
    if (!g.is_one()) {
      f = f / g;
      h = h % f;
      out.emplace_back(std::move(g), d);
    }
  }
  if (f.degree() > 0) {
    int df = f.degree();
    out.emplace_back(std::move(f), df);
  }
  return out;
}

template <FiniteField F>
Poly<F> random_poly_below(const F& k, int deg_bound, Rng& rng) {
  std::vector<typename F::Elem> v;
  v.reserve(static_cast<std::size_t>(deg_bound));
  for (int i = 0; i < deg_bound; ++i) v.push_back(k.random(rng));
  return Poly<F>(k, std::move(v));
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree d.
template <FiniteField F>
void equal_degree(const Poly<F>& g, int d, Rng& rng, std::vector<Poly<F>>& out) {
  if (g.degree() <= d) {
    out.push_back(g);
    return;
  }
  const F& k = g.field();
  const std::uint64_t p = k.characteristic();
  const int ext = k.degree() * d;  // residue fields have order p^ext
  for (;;) {
    Poly<F> a = random_poly_below(k, g.degree(), rng);
    if (a.is_constant()) continue;
    Poly<F> cand(k);
    if (p == 2) {
      Poly<F> cur = a;
      Poly<F> tr = a;
      for (int i = 1; i < ext; ++i) {
        cur = (cur * cur) % g;
        tr += cur;
      }
      cand = gcd(tr, g);
    } else {
      // a^((p^ext - 1)/2) = (prod_i a^(p^i))^((p-1)/2)
      Poly<F> cur = a;
      Poly<F> norm = a;
      for (int i = 1; i < ext; ++i) {
        cur = pow_mod(cur, p, g);
        norm = (norm * cur) % g;
      }
      Poly<F> b = pow_mod(norm, (p - 1) / 2, g);
      cand = gcd(b - Poly<F>::one(k), g);
    }
    if (cand.degree() > 0 && cand.degree() < g.degree()) {
      equal_degree(cand, d, rng, out);
      equal_degree(g / cand, d, rng, out);
      return;
    }
  }
}

template <FiniteField F>
Factorization<F> factor_finite(const Poly<F>& f, std::uint64_t seed) {
  const F& k = f.field();
  Factorization<F> res{f.lc(), {}};
  Rng rng(seed);
  for (auto& [s, e] : squarefree_finite(f.monic())) {
    for (auto& [g, d] : distinct_degree(s)) {
      std::vector<Poly<F>> parts;
      equal_degree(g, d, rng, parts);
      for (auto& h : parts) res.factors.emplace_back(h.monic(), e);
    }
  }
  (void)k;
  sort_and_merge(res.factors);
  return res;
}

// -------------------------------------------------------------- rationals ---

using QPoly = Poly<RationalField>;
using ZVec = std::vector<mpz_class>;

/// Yun's squarefree decomposition (characteristic 0), f monic.
inline std::vector<std::pair<QPoly, int>> squarefree_rational(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() < 1) return out;
  QPoly fp = f.derivative();
  QPoly b = gcd(f, fp);
  QPoly c = f / b;
  QPoly d = fp / b - c.derivative();
  int i = 1;
  while (!c.is_one() && !c.is_constant()) {
    QPoly a = gcd(c, d);
    if (!a.is_constant()) out.emplace_back(a, i);
    c = c / a;
    d = d / a - c.derivative();
    ++i;
  }
  return out;
}

/// Primitive integer multiple of f with positive leading coefficient.
inline ZVec primitive_part(const QPoly& f) {
  mpz_class l = 1;
  for (const auto& a : f.coeffs()) l = lcm(l, mpz_class(a.get_den()));
  ZVec v;
  mpz_class content = 0;
  for (const auto& a : f.coeffs()) {
    mpq_class s = a * l;
    v.push_back(s.get_num());
    content = gcd(content, v.back());
  }
  if (f.lc() < 0) content = -content;
  for (auto& a : v) a /= content;
  return v;
}

inline QPoly from_zvec(const ZVec& v) {
  std::vector<mpq_class> c(v.begin(), v.end());
  return QPoly(RationalField{}, std::move(c));
}

inline mpz_class eval_z(const ZVec& v, const mpz_class& x) {
  mpz_class r = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) r = r * x + *it;
  return r;
}

/// Kronecker search for a factor of degree e of h (no rational roots).
inline std::optional<QPoly> kronecker_factor(const QPoly& h, int e) {
  ZVec z = primitive_part(h);
  // e+1 interpolation points, preferring values with few divisors.
  std::vector<std::pair<std::size_t, long>> scored;
  for (long x = -8; x <= 8; ++x) {
    mpz_class v = eval_z(z, x);
    scored.emplace_back(positive_divisors(v).size(), x);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<long> xs;
  std::vector<std::vector<mpz_class>> choices;
  for (int j = 0; j <= e; ++j) {
    long x = scored[static_cast<std::size_t>(j)].second;
    xs.push_back(x);
    std::vector<mpz_class> ds;
    for (const auto& d : positive_divisors(eval_z(z, x))) {
      ds.push_back(d);
      if (j > 0) ds.push_back(-d);
    }
    choices.push_back(std::move(ds));
  }
  const RationalField q;
  std::vector<std::size_t> idx(xs.size(), 0);
  for (;;) {
    // Lagrange interpolation through (xs[j], choices[j][idx[j]]).
    QPoly g(q);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      QPoly basis = QPoly::one(q);
      mpq_class denom = 1;
      for (std::size_t l = 0; l < xs.size(); ++l) {
        if (l == j) continue;
        basis *= QPoly::linear(q, mpq_class(xs[l]));
        denom *= mpq_class(xs[j] - xs[l]);
      }
      g += basis.scaled(mpq_class(choices[j][idx[j]]) / denom);
    }
    if (g.degree() == e && divides(g, h)) return g.monic();
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
    if (j == idx.size()) return std::nullopt;
  }
}

inline void factor_squarefree_rational(QPoly h, std::vector<QPoly>& out) {
  const RationalField q;
  h = h.monic();
  if (h.degree() < 1) return;
  if (h.coeff(0) == 0) {
    out.push_back(QPoly::x(q));
    h = h / QPoly::x(q);
  }
  // rational roots u/v with u | a0, v | an
  bool found = true;
  while (found && h.degree() >= 1) {
    found = false;
    ZVec z = primitive_part(h);
    for (const auto& u : positive_divisors(z.front())) {
      for (const auto& v : positive_divisors(z.back())) {
        for (int sign : {1, -1}) {
          mpq_class r(sign * u, v);
          r.canonicalize();
          if (h.eval(r) == 0) {
            out.push_back(QPoly::linear(q, r));
            h = h / QPoly::linear(q, r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (h.degree() < 1) return;
  if (h.degree() <= 3) {
    out.push_back(h);
    return;
  }
  if (h.degree() > kRationalDegreeCap) {
    fail(errc::kDegreeCapExceeded, "rational factorization supports root-free parts of degree <= 6");
  }
  for (int e = 2; 2 * e <= h.degree(); ++e) {
    if (auto g = kronecker_factor(h, e)) {
      out.push_back(*g);
      factor_squarefree_rational(h / *g, out);
      return;
    }
  }
  out.push_back(h);
}

inline Factorization<RationalField> factor_rational(const QPoly& f) {
  Factorization<RationalField> res{f.lc(), {}};
  for (auto& [s, e] : squarefree_rational(f.monic())) {
    std::vector<QPoly> parts;
    factor_squarefree_rational(s, parts);
    for (auto& g : parts) res.factors.emplace_back(std::move(g), e);
  }
  sort_and_merge(res.factors);
  return res;
}

}  // namespace detail

/// Complete factorization. Finite fields: always supported, deterministic
/// for a fixed seed. Rationals: root-free squarefree parts up to degree 6.
template <Field F>
Factorization<F> factor(const Poly<F>& f, std::uint64_t seed = 0) {
  if (f.is_zero()) fail(errc::kZeroPolynomial, "factor of the zero polynomial");
  if constexpr (FiniteField<F>) {
    return detail::factor_finite(f, seed);
  } else if constexpr (std::same_as<F, RationalField>) {
    return detail::factor_rational(f);
  } else {
    fail(errc::kUnsupportedField, "factorization over this field is not supported");
  }
}

template <Field F>
bool is_irreducible(const Poly<F>& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if constexpr (FiniteField<F>) {
    Poly<F> m = f.monic();
    if (!gcd(m, m.derivative()).is_one()) return false;
    auto dd = detail::distinct_degree(m);
    return dd.size() == 1 && dd.front().second == m.degree();
  } else {
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors.front().second == 1;
  }
}

/// All monic irreducibles of degree 1..d over a finite field, canonically
/// ordered.
template <Field F>
std::vector<Poly<F>> irreducibles_up_to(const F& k, int d) {
  if constexpr (!FiniteField<F>) {
    fail(errc::kInfiniteField, "irreducibles_up_to needs a finite field");
  } else {
    if (d < 1) fail(errc::kInvalidArgument, "degree bound must be >= 1");
    auto q = k.order();
    if (!q) fail(errc::kInvalidArgument, "field too large to enumerate");
    std::vector<Poly<F>> out;
    for (int deg = 1; deg <= d; ++deg) {
      std::uint64_t count = 1;
      for (int i = 0; i < deg; ++i) count *= *q;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<typename F::Elem> c;
        std::uint64_t rest = idx;
        for (int i = 0; i < deg; ++i) {
          c.push_back(k.element_at(rest % *q));
          rest /= *q;
        }
        c.push_back(k.one());
        Poly<F> g(k, std::move(c));
        if (is_irreducible(g)) out.push_back(std::move(g));
      }
    }
    std::sort(out.begin(), out.end(), CanonicalLess<F>{});
    return out;
  }
}

/// Roots in k of a nonzero polynomial, canonically ordered, without
/// multiplicity.
template <FiniteField F>
std::vector<typename F::Elem> roots(const Poly<F>& f, std::uint64_t seed = 0) {
  std::vector<typename F::Elem> out;
  for (const auto& [g, e] : factor(f, seed).factors) {
    if (g.degree() == 1) out.push_back(g.field().neg(g.coeff(0)));
  }
  const F& k = f.field();
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return k.compare(a, b) < 0; });
  return out;
}

}  // namespace kaut
