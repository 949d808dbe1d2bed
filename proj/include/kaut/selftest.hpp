#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kaut/coherent_functor.hpp"
#include "kaut/devissage.hpp"
#include "kaut/equivalence.hpp"
#include "kaut/extension_field.hpp"
#include "kaut/factor.hpp"
#include "kaut/k0.hpp"
#include "kaut/oracles.hpp"
#include "kaut/prime_field.hpp"
#include "kaut/random.hpp"
#include "kaut/rational_field.hpp"
#include "kaut/snf.hpp"

namespace kaut::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;
  double budget_seconds = 0;  // 0: no time limit

  bool passed() const { return failures == 0 && cases > 0 && (budget_seconds == 0 || seconds < budget_seconds); }
};

/// Tally of checks within one criterion.
class Tally {
 public:
  explicit Tally(CriterionResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what();
  }

 private:
  CriterionResult& r_;
};

template <Field F>
std::string describe(const Matrix<F>& a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols() << " matrix over " << (F::is_finite ? "F_" + std::to_string(a.field().characteristic()) : "Q");
  return os.str();
}

// -- 1 ---------------------------------------------------------------------

template <Field F>
bool snf_certificate(const Matrix<F>& a) {
  const F& f = a.field();
  const auto m = PolyMatrix<F>::characteristic(a);
  const auto s = smith_normal_form(m);
  if (!(s.u * m * s.v == s.d)) return false;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !s.d(i, j).is_zero()) return false;
    }
  }
  Poly<F> prod = Poly<F>::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.d(i, i).is_monic()) return false;
    if (i + 1 < n && !divides(s.d(i, i), s.d(i + 1, i + 1))) return false;
    prod *= s.d(i, i);
  }
  const auto du = det(s.u), dv = det(s.v);
  if (du.degree() != 0 || dv.degree() != 0) return false;
  // det(tI - A) by fraction-free elimination is monic: equality up to a unit
  return prod == det(m);
}

template <Field F>
void snf_suite(const F& f, std::size_t count, Rng& rng, Tally& tally) {
  for (std::size_t c = 0; c < count; ++c) {
    const auto d = static_cast<std::size_t>(uniform_int(rng, 0, 5));
    const auto a = random_matrix(f, d, d, rng);
    tally.check(snf_certificate(a), [&] { return "SNF certificate failed for " + describe(a); });
  }
}

inline CriterionResult criterion_snf(std::uint64_t seed) {
  CriterionResult r{.id = 1, .name = "SNF certificate suite (F_2, F_3, F_5, Q; 500 each)"};
  r.budget_seconds = 30;
  Tally t(r);
  Rng rng(seed + 101);
  snf_suite(PrimeField(2), 500, rng, t);
  snf_suite(PrimeField(3), 500, rng, t);
  snf_suite(PrimeField(5), 500, rng, t);
  snf_suite(RationalField(), 500, rng, t);
  return r;
}

// -- 2 ---------------------------------------------------------------------

template <FiniteField F>
std::vector<Matrix<F>> general_linear_group(const F& f, std::size_t n) {
  std::vector<Matrix<F>> out;
  oracle::for_each_matrix(f, n, n, [&](const Matrix<F>& m) {
    if (is_invertible(m)) out.push_back(m);
  });
  return out;
}

template <FiniteField F>
void classification_pair(const Matrix<F>& a, const Matrix<F>& b, Tally& tally) {
  const TorsionModule<F> ma(a), mb(b);
  const auto ca = aut_k0_class(ma), cb = aut_k0_class(mb);
  const bool eq = k0_eq(ca, cb);
  const bool conj = oracle::conjugate_by_search(a, b);
  tally.check(eq == conj, [&] { return "class equality disagrees with conjugacy search on " + describe(a); });
  tally.check(eq == similar(ma, mb), [&] { return "class equality disagrees with similar() on " + describe(a); });
  tally.check(k0_eq(aut_k0_class(TorsionModule<F>(direct_sum(a, b))), k0_add(ca, cb)),
              [&] { return "class not additive on " + describe(a); });
  for (const auto& [k, c] : ca.entries) {
    tally.check(!(k.m == Poly<F>::x(a.field())), [&] { return std::string("class has a key at (t)"); });
  }
}

template <FiniteField F>
void classification_exhaustive(const F& f, std::size_t n, Tally& tally) {
  const auto g = general_linear_group(f, n);
  for (const auto& a : g) {
    for (const auto& b : g) classification_pair(a, b, tally);
  }
}

template <FiniteField F>
void classification_random(const F& f, std::size_t n, std::size_t pairs, Rng& rng, Tally& tally) {
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto a = random_invertible(f, n, rng);
    // half the pairs are conjugate by construction
    const auto b = (i % 2 == 0) ? conjugate(a, random_invertible(f, n, rng)) : random_invertible(f, n, rng);
    classification_pair(a, b, tally);
    tally.check(k0_eq(aut_k0_class(TorsionModule<F>(b)), aut_k0_class(TorsionModule<F>(conjugate(b, random_invertible(f, n, rng))))),
                [&] { return "class not conjugation invariant on " + describe(b); });
  }
}

inline CriterionResult criterion_classification(std::uint64_t seed) {
  CriterionResult r{.id = 2, .name = "Classification completeness (GL_2(F_2), GL_1(F_4), GL_3(F_2), GL_2(F_3))"};
  Tally t(r);
  Rng rng(seed + 202);
  const PrimeField f2(2), f3(3);
  const auto gl22 = general_linear_group(f2, 2);
  t.check(gl22.size() == 6, [&] { return "GL_2(F_2) has " + std::to_string(gl22.size()) + " elements"; });
  classification_exhaustive(f2, 2, t);
  classification_exhaustive(make_galois_field(2, {1, 1, 1}), 1, t);
  classification_random(f2, 3, 500, rng, t);
  classification_random(f3, 2, 500, rng, t);
  return r;
}

// -- 3 ---------------------------------------------------------------------

inline std::vector<std::vector<int>> exponent_multisets(int max_weight) {
  std::vector<std::vector<int>> out;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& cur, int lo, int left) {
    if (!cur.empty()) out.push_back(cur);
    for (int e = lo; e <= 3 && e <= left; ++e) {
      cur.push_back(e);
      rec(cur, e, left - e);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(cur, 1, max_weight);
  return out;
}

template <FiniteField F>
void fext_round_trips(const F& f, std::uint64_t seed, Tally& tally) {
  for (const auto& m : irreducibles_up_to(f, 3)) {
    for (const auto& exps : exponent_multisets(3)) {
      DivisorClass<F> dc(f);
      for (int e : exps) dc.add(m, e);
      const auto c = PrimaryComponent<F>::of(m, build_module(f, dc));
      const auto w = verify_adjunction(c, seed);
      auto where = [&] {
        std::ostringstream os;
        os << "m of degree " << m.degree() << " over F_" << f.characteristic() << ", exponents";
        for (int e : exps) os << " " << e;
        return os.str();
      };
      tally.check(w.round_trip_similar, [&] { return "round trip not similar: " + where(); });
      tally.check(w.dimension_identity, [&] { return "dimension identity fails: " + where(); });
      tally.check(w.unit_invertible && w.unit_natural && w.counit_invertible && w.counit_natural,
                  [&] { return "unit/counit certificate fails: " + where(); });
      tally.check(transport_check(c, seed), [&] { return "exponent multiset not preserved: " + where(); });
    }
  }
}

inline CriterionResult criterion_fext(std::uint64_t seed) {
  CriterionResult r{.id = 3, .name = "Residue-field round trip (deg m <= 3 over F_2, F_3)"};
  r.budget_seconds = 60;
  Tally t(r);
  fext_round_trips(PrimeField(2), seed, t);
  fext_round_trips(PrimeField(3), seed, t);
  return r;
}

// -- 4 ---------------------------------------------------------------------

template <Field F>
void fr_table(const F& f, Tally& tally) {
  for (int r = 1; r <= 6; ++r) {
    const auto fn = f_r(f, r);
    for (int s = 1; s <= 6; ++s) {
      const std::size_t want = r == s ? 1 : 0;
      tally.check(evaluate_dim(fn, s) == want, [&] {
        return "dim F_" + std::to_string(r) + " M_" + std::to_string(s) + " over F_" + std::to_string(f.characteristic());
      });
    }
  }
}

inline CriterionResult criterion_fr_table(std::uint64_t) {
  CriterionResult r{.id = 4, .name = "dim F_r M_s = delta_rs, 1 <= r, s <= 6 over F_2, F_3, F_5"};
  Tally t(r);
  fr_table(PrimeField(2), t);
  fr_table(PrimeField(3), t);
  fr_table(PrimeField(5), t);
  return r;
}

// -- 5 ---------------------------------------------------------------------

template <Field F>
CoherentFunctor<F> presentation_of(const F& f, const NuVector& nu, Rng& rng) {
  std::vector<int> blocks;
  for (const auto& [r, n] : nu) {
    for (std::int64_t i = 0; i < n; ++i) blocks.push_back(r);
  }
  std::shuffle(blocks.begin(), blocks.end(), rng);
  CoherentFunctor<F> out{f, {}, {}, {}};
  for (int r : blocks) out = direct_sum(out, f_r(f, r));
  return out;
}

/// coker of the projection M_{s+k} -> M_s; d_1 is nonzero for s >= 2.
template <Field F>
CoherentFunctor<F> projection_cokernel(const F& f, int s, int k) {
  return presentation_make(f, {s + k}, {s}, std::vector<std::vector<Poly<F>>>{{Poly<F>::one(f)}});
}

inline CriterionResult criterion_f_prime(std::uint64_t seed) {
  CriterionResult r{.id = 5, .name = "F' membership and Phi (100 members, 20 non-members)"};
  Tally t(r);
  Rng rng(seed + 505);
  const std::vector<PrimeField> fields{PrimeField(2), PrimeField(3), PrimeField(5)};
  for (int i = 0; i < 100; ++i) {
    const auto& f = fields[static_cast<std::size_t>(i) % fields.size()];
    NuVector nu;
    while (nu.empty()) {
      for (int rr = 1; rr <= 4; ++rr) {
        const int n = uniform_int(rng, 0, 2);
        if (n > 0) nu[rr] = n;
      }
    }
    const auto d = evaluate(presentation_of(f, nu, rng));
    const auto got = in_f_prime(d);
    t.check(got.has_value() && *got == nu, [&] { return "constructed F' functor not recovered"; });
    if (got) {
      std::vector<std::pair<int, std::size_t>> want;
      for (const auto& [rr, n] : nu) want.emplace_back(rr, static_cast<std::size_t>(n));
      t.check(phi(d) == want, [&] { return std::string("Phi disagrees with nu"); });
    }
  }
  std::vector<CoherentFunctor<PrimeField>> non;
  for (const auto& f : fields) {
    for (int s = 2; s <= 4; ++s) {
      for (int k = 1; k <= 2; ++k) non.push_back(projection_cokernel(f, s, k));
    }
  }
  non.push_back(direct_sum(f_r(fields[0], 1), projection_cokernel(fields[0], 2, 1)));
  non.push_back(direct_sum(projection_cokernel(fields[1], 3, 1), f_r(fields[1], 4)));
  for (const auto& fn : non) {
    const auto d = evaluate(fn);
    t.check(!in_f_prime(d).has_value(), [&] { return std::string("non-member accepted"); });
    bool threw = false;
    try {
      (void)phi(d);
    } catch (const Error& e) {
      threw = e.code() == errc::kNotInFPrime;
    }
    t.check(threw, [&] { return std::string("phi accepted a non-member"); });
  }
  t.check(non.size() == 20, [&] { return std::string("expected 20 non-members"); });
  return r;
}

// -- 6 ---------------------------------------------------------------------

template <Field F>
void functor_devissage(const F& f, std::size_t count, Rng& rng, Tally& tally) {
  for (std::size_t i = 0; i < count; ++i) {
    const auto fn = random_presentation(f, 4, rng);
    const auto d = evaluate(fn);
    const auto n = dim_functor(d);
    std::size_t oracle_n = 0;
    for (int s = 1; s <= d.s_max + 2; ++s) oracle_n += oracle::functor_dim(fn, s);
    tally.check(n == oracle_n, [&] { return std::string("evaluation disagrees with the intertwiner oracle"); });
    tally.check(relations_hold(d), [&] { return std::string("functor relations fail"); });
    std::optional<NuVector> first;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto res = devissage_functor(d, seed);
      std::int64_t total = 0;
      for (const auto& [rr, c] : res.nu) total += c;
      tally.check(res.steps == n, [&] { return "devissage took " + std::to_string(res.steps) + " steps for dim " + std::to_string(n); });
      tally.check(static_cast<std::size_t>(total) == n, [&] { return std::string("sum of nu differs from dim"); });
      if (!first) first = res.nu;
      tally.check(res.nu == *first, [&] { return "nu depends on the seed (seed " + std::to_string(seed) + ")"; });
    }
  }
}

inline CriterionResult criterion_functor_devissage(std::uint64_t seed) {
  CriterionResult r{.id = 6, .name = "Functor devissage (50 random presentations, 5 seeds)"};
  Tally t(r);
  Rng rng(seed + 606);
  functor_devissage(PrimeField(2), 25, rng, t);
  functor_devissage(PrimeField(3), 25, rng, t);
  return r;
}

// -- 7 ---------------------------------------------------------------------

template <Field F>
void nilpotent_devissage(const F& f, Rng& rng, Tally& tally) {
  const int d = uniform_int(rng, 1, 6);
  const auto parts = random_partition(d, rng);
  Matrix<F> j(f, 0, 0);
  for (int b : parts) j = direct_sum(j, jordan_block(f, static_cast<std::size_t>(b)));
  const TorsionModule<F> m(conjugate(j, random_invertible(f, static_cast<std::size_t>(d), rng)));
  const auto filt = devissage_filtration(m);
  const int index = *std::max_element(parts.begin(), parts.end());
  tally.check(filt.length() == static_cast<std::size_t>(index), [&] { return "filtration length differs from nilpotency index on " + describe(m.mat()); });
  const auto dims = filt.quotient_dims();
  for (int k = 1; k <= index && static_cast<std::size_t>(k) <= dims.size(); ++k) {
    const auto want = static_cast<std::size_t>(std::count_if(parts.begin(), parts.end(), [&](int b) { return b >= k; }));
    tally.check(dims[static_cast<std::size_t>(k - 1)] == want, [&] { return std::string("quotient dimension mismatch"); });
  }
  for (std::size_t k = 0; k < filt.length(); ++k) {
    tally.check(induced_quotient_action(m, filt, k).is_zero(), [&] { return std::string("nonzero induced action on a quotient"); });
  }
}

inline CriterionResult criterion_nilpotent_devissage(std::uint64_t seed) {
  CriterionResult r{.id = 7, .name = "Nilpotent devissage filtration (100 random nilpotents, d <= 6)"};
  Tally t(r);
  Rng rng(seed + 707);
  for (int i = 0; i < 100; ++i) {
    switch (i % 4) {
      case 0: nilpotent_devissage(PrimeField(2), rng, t); break;
      case 1: nilpotent_devissage(PrimeField(3), rng, t); break;
      case 2: nilpotent_devissage(PrimeField(5), rng, t); break;
      default: nilpotent_devissage(RationalField(), rng, t); break;
    }
  }
  return r;
}

// -- 8 ---------------------------------------------------------------------

template <FiniteField F>
void hom_dims(const F& f, Tally& tally) {
  const std::uint64_t q = *f.order();
  for (int s = 1; s <= 5; ++s) {
    for (int r = 1; r <= 5; ++r) {
      const auto basis = jordan_hom_basis(s, r, f);
      const auto js = jordan_block(f, static_cast<std::size_t>(s)), jr = jordan_block(f, static_cast<std::size_t>(r));
      const auto brute = oracle::intertwiner_space(js, jr).cols();
      const auto want = static_cast<std::size_t>(std::min(r, s));
      auto where = [&] { return "Hom(M_" + std::to_string(s) + ", M_" + std::to_string(r) + ") over F_" + std::to_string(q); };
      tally.check(basis.size() == want && brute == want, [&] { return "dimension mismatch for " + where(); });
      std::vector<std::vector<typename F::Elem>> flat;
      bool intertwines = true;
      for (const auto& h : basis) {
        const auto x = hom_to_matrix(h, f);
        intertwines = intertwines && x * js == jr * x;
        std::vector<typename F::Elem> v;
        for (std::size_t i = 0; i < x.rows(); ++i) {
          for (std::size_t j = 0; j < x.cols(); ++j) v.push_back(x(i, j));
        }
        flat.push_back(std::move(v));
      }
      tally.check(intertwines, [&] { return "basis element is not F[t]-linear: " + where(); });
      tally.check(rank(Matrix<F>::from_columns(f, static_cast<std::size_t>(r * s), flat)) == want,
                  [&] { return "basis is dependent: " + where(); });
      std::uint64_t cells = 1;
      for (int i = 0; i < r * s; ++i) cells *= q;
      if (cells <= 5000) {
        std::uint64_t expect = 1;
        for (std::size_t i = 0; i < want; ++i) expect *= q;
        tally.check(oracle::count_intertwiners(js, jr) == expect, [&] { return "enumeration count mismatch: " + where(); });
      }
    }
  }
}

inline CriterionResult criterion_hom_dims(std::uint64_t) {
  CriterionResult r{.id = 8, .name = "dim Hom(M_s, M_r) = min(r, s), 1 <= r, s <= 5 over F_2, F_3"};
  Tally t(r);
  hom_dims(PrimeField(2), t);
  hom_dims(PrimeField(3), t);
  return r;
}

// -- 9 ---------------------------------------------------------------------

template <FiniteField F>
bool has_root(const Poly<F>& p) {
  const F& f = p.field();
  for (std::uint64_t i = 0; i < *f.order(); ++i) {
    if (f.is_zero(p.eval(f.element_at(i)))) return true;
  }
  return false;
}

template <FiniteField F>
void factor_suite(const F& f, std::size_t count, Rng& rng, std::uint64_t seed, Tally& tally) {
  std::vector<Poly<F>> small = irreducibles_up_to(f, 4);
  for (std::size_t i = 0; i < count; ++i) {
    const auto p = random_poly(f, uniform_int(rng, 1, 8), rng);
    const auto fac = factor(p, seed);
    tally.check(fac.expand(f) == p, [&] { return "factorization does not re-multiply (degree " + std::to_string(p.degree()) + ")"; });
    for (const auto& [g, e] : fac.factors) {
      bool ok = g.is_monic() && e >= 1 && (g.degree() == 1 || !has_root(g));
      for (const auto& h : small) {
        if (2 * h.degree() <= g.degree() && divides(h, g)) ok = false;
      }
      tally.check(ok, [&] { return "reported factor is reducible"; });
    }
  }
}

inline CriterionResult criterion_factorization(std::uint64_t seed) {
  CriterionResult r{.id = 9, .name = "Factorization soundness (500 per field) and irreducible counts"};
  Tally t(r);
  Rng rng(seed + 909);
  factor_suite(PrimeField(2), 500, rng, seed, t);
  factor_suite(PrimeField(3), 500, rng, seed, t);
  factor_suite(PrimeField(5), 500, rng, seed, t);
  factor_suite(make_galois_field(2, {1, 1, 1}), 500, rng, seed, t);
  const auto irr = irreducibles_up_to(PrimeField(2), 4);
  const std::vector<std::size_t> known{2, 1, 2, 3};
  for (int d = 1; d <= 4; ++d) {
    const auto n = static_cast<std::size_t>(std::count_if(irr.begin(), irr.end(), [&](const auto& p) { return p.degree() == d; }));
    t.check(n == known[static_cast<std::size_t>(d - 1)] && n == oracle::necklace_count(2, d),
            [&] { return "irreducible count in degree " + std::to_string(d) + " is " + std::to_string(n); });
  }
  return r;
}

// ---------------------------------------------------------------------------

inline std::vector<CriterionResult> run_all(std::uint64_t seed = 0,
                                            const std::function<void(const CriterionResult&)>& on_result = {}) {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::function<CriterionResult(std::uint64_t)>> all{
      criterion_snf,       criterion_classification,     criterion_fext,
      criterion_fr_table,  criterion_f_prime,            criterion_functor_devissage,
      criterion_nilpotent_devissage, criterion_hom_dims, criterion_factorization};
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto start = Clock::now();
    CriterionResult r;
    try {
      r = all[i](seed);
    } catch (const std::exception& e) {
      r.id = static_cast<int>(i + 1);
      r.name = "criterion " + std::to_string(i + 1);
      r.failures = 1;
      r.first_failure = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace kaut::selftest
