#include "support.hpp"

using namespace kt;

namespace {

using Fn = CoherentFunctor<PrimeField>;

Fn presentation(std::uint64_t p, std::vector<int> src, std::vector<int> tgt, std::vector<std::vector<std::vector<std::int64_t>>> beta) {
  const PrimeField f(p);
  std::vector<std::vector<FpPoly>> b;
  for (const auto& row : beta) {
    std::vector<FpPoly> r;
    for (const auto& e : row) r.push_back(fp(p, e));
    b.push_back(std::move(r));
  }
  return presentation_make(f, std::move(src), std::move(tgt), b);
}

// coker of the projection M_3 -> M_2
Fn projection_cokernel() { return presentation(2, {3}, {2}, {{{1}}}); }

NuVector nu(std::initializer_list<std::pair<const int, std::int64_t>> xs) { return NuVector(xs); }

}  // namespace

TEST(Presentation, Examples) {
  const auto zero = presentation(2, {2}, {2}, {{{1}}});
  EXPECT_EQ(zero.source, std::vector<int>{2});
  const auto f2 = f_r(PrimeField(2), 2);
  EXPECT_EQ(f2.source, (std::vector<int>{1, 3}));
  EXPECT_EQ(f2.target, std::vector<int>{2});
  EXPECT_KAUT_ERROR(presentation(2, {1}, {2}, {{{0, 1}}}), errc::kNotEpimorphism);
  EXPECT_KAUT_ERROR(presentation(2, {1, 3}, {2}, {{{0, 1}}}), errc::kShapeMismatch);
  EXPECT_KAUT_ERROR(presentation_make(PrimeField(3), {1}, {1}, std::vector<std::vector<FpPoly>>{{fp(2, {1})}}),
                    errc::kFieldMismatch);
}

TEST(FrPresentation, DegenerateFirstSummand) {
  const auto f1 = f_r(PrimeField(2), 1);
  EXPECT_EQ(f1.source, (std::vector<int>{0, 2}));
  EXPECT_EQ(f1.target, std::vector<int>{1});
  EXPECT_NO_THROW(f_r(PrimeField(3), 3));
  EXPECT_KAUT_ERROR(f_r(PrimeField(3), 0), errc::kInvalidArgument);
}

TEST(Evaluate, FrIsConcentratedInOneDegree) {
  const auto d = evaluate(f_r(PrimeField(2), 2));
  EXPECT_EQ(d.dim(1), 0u);
  EXPECT_EQ(d.dim(2), 1u);
  EXPECT_EQ(d.dim(3), 0u);
  EXPECT_TRUE(d.t_map(2).is_zero());
  for (int s = 1; s <= d.s_max; ++s) {
    EXPECT_TRUE(d.u_map(s).is_zero());
    EXPECT_TRUE(d.d_map(s).is_zero());
  }
}

TEST(Evaluate, ZeroFunctor) {
  const auto d = evaluate(presentation(2, {2}, {2}, {{{1}}}));
  for (int s = 1; s <= 3; ++s) EXPECT_EQ(d.dim(s), 0u);
  EXPECT_EQ(dim_functor(d), 0u);
}

TEST(Evaluate, ProjectionCokernel) {
  const auto d = evaluate(projection_cokernel());
  EXPECT_EQ(d.dim(1), 1u);
  EXPECT_EQ(d.dim(2), 1u);
  EXPECT_EQ(d.dim(3), 0u);
  EXPECT_TRUE(d.u_map(1).is_zero());
  EXPECT_FALSE(d.d_map(1).is_zero());
  EXPECT_EQ(dim_functor(d), 2u);
  for (int s = 1; s <= 4; ++s) EXPECT_EQ(d.dim(s), oracle::functor_dim(projection_cokernel(), s));
}

TEST(Evaluate, DeltaTable) {
  for (std::uint64_t p : {2, 3}) {
    const PrimeField f(p);
    for (int r = 1; r <= 5; ++r) {
      const auto d = evaluate(f_r(f, r));
      EXPECT_EQ(dim_functor(d), 1u);
      for (int s = 1; s <= 7; ++s) {
        EXPECT_EQ(d.dim(s), s == r ? 1u : 0u) << "r=" << r << " s=" << s;
        EXPECT_EQ(oracle::functor_dim(f_r(f, r), s), s == r ? 1u : 0u);
      }
    }
  }
}

TEST(Evaluate, AgreesWithIntertwinerOracle) {
  Rng rng(61);
  for (std::uint64_t p : {2, 3, 5}) {
    const PrimeField f(p);
    for (int i = 0; i < 15; ++i) {
      const auto fn = random_presentation(f, 4, rng);
      const auto d = evaluate(fn);
      EXPECT_TRUE(relations_hold(d));
      for (int s = 1; s <= d.s_max + 2; ++s) EXPECT_EQ(d.dim(s), oracle::functor_dim(fn, s)) << "s=" << s;
    }
  }
}

TEST(Evaluate, VanishesBeyondLargestSourceBlock) {
  Rng rng(62);
  const PrimeField f(3);
  for (int i = 0; i < 20; ++i) {
    const auto fn = random_presentation(f, 4, rng);
    const int top = *std::max_element(fn.source.begin(), fn.source.end());
    for (int s = top; s <= top + 2; ++s) EXPECT_EQ(oracle::functor_dim(fn, s), 0u);
  }
}

TEST(Evaluate, AdditiveOnDirectSums) {
  Rng rng(63);
  const PrimeField f(2);
  for (int i = 0; i < 15; ++i) {
    const auto a = random_presentation(f, 3, rng), b = random_presentation(f, 3, rng);
    const auto da = evaluate(a), db = evaluate(b), ds = evaluate(direct_sum(a, b));
    for (int s = 1; s <= 4; ++s) EXPECT_EQ(ds.dim(s), da.dim(s) + db.dim(s));
  }
}

TEST(FPrime, Membership) {
  EXPECT_EQ(*in_f_prime(evaluate(f_r(PrimeField(3), 3))), nu({{3, 1}}));
  EXPECT_FALSE(in_f_prime(evaluate(projection_cokernel())).has_value());
  EXPECT_TRUE(in_f_prime(evaluate(presentation(2, {2}, {2}, {{{1}}})))->empty());
}

TEST(FPrime, Phi) {
  const PrimeField f(2);
  const auto f2 = f_r(f, 2);
  EXPECT_EQ(phi(evaluate(direct_sum(f2, f2))), (std::vector<std::pair<int, std::size_t>>{{2, 2}}));
  EXPECT_EQ(phi(evaluate(direct_sum(f_r(f, 1), f_r(f, 3)))), (std::vector<std::pair<int, std::size_t>>{{1, 1}, {3, 1}}));
  EXPECT_TRUE(phi(evaluate(presentation(2, {2}, {2}, {{{1}}}))).empty());
  EXPECT_KAUT_ERROR(phi(evaluate(projection_cokernel())), errc::kNotInFPrime);
}

TEST(Mono, Examples) {
  const auto m2 = find_mono(evaluate(f_r(PrimeField(2), 2)));
  ASSERT_TRUE(m2.has_value());
  EXPECT_EQ(m2->r, 2);
  EXPECT_EQ(m2->v, std::vector<std::uint64_t>{1});
  const auto mc = find_mono(evaluate(projection_cokernel()));
  ASSERT_TRUE(mc.has_value());
  EXPECT_EQ(mc->r, 1);
  EXPECT_FALSE(find_mono(evaluate(presentation(2, {2}, {2}, {{{1}}}))).has_value());
}

TEST(Mono, SpansASubfunctor) {
  Rng rng(64);
  const PrimeField f(3);
  for (int i = 0; i < 20; ++i) {
    const auto d = evaluate(random_presentation(f, 4, rng));
    for (std::uint64_t seed : {0, 7}) {
      const auto m = find_mono(d, seed);
      if (dim_functor(d) == 0) {
        EXPECT_FALSE(m.has_value());
        continue;
      }
      ASSERT_TRUE(m.has_value());
      for (int r = 1; r < m->r; ++r) EXPECT_EQ(rank(d.u_map(r)), d.dim(r));
      const auto sub = line_subfunctor(d, *m);
      EXPECT_TRUE(is_subfunctor(d, sub));
      const auto q = quotient(d, sub);
      EXPECT_TRUE(relations_hold(q));
      EXPECT_EQ(dim_functor(q) + 1, dim_functor(d));
    }
  }
}

TEST(FunctorDevissage, Examples) {
  EXPECT_EQ(devissage_functor(evaluate(f_r(PrimeField(2), 3))).nu, nu({{3, 1}}));
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    EXPECT_EQ(devissage_functor(evaluate(projection_cokernel()), seed).nu, nu({{1, 1}, {2, 1}}));
  }
  EXPECT_EQ(devissage_functor(evaluate(presentation(2, {2}, {1}, {{{1}}}))).nu, nu({{1, 1}}));
}

TEST(FunctorDevissage, CompositionFactorsIndependentOfChoices) {
  Rng rng(65);
  for (std::uint64_t p : {2, 5}) {
    const PrimeField f(p);
    for (int i = 0; i < 15; ++i) {
      const auto fn = random_presentation(f, 4, rng);
      const auto d = evaluate(fn);
      const auto ref = devissage_functor(d, 0);
      std::int64_t total = 0;
      for (const auto& [r, n] : ref.nu) total += n;
      EXPECT_EQ(static_cast<std::size_t>(total), dim_functor(d));
      EXPECT_EQ(ref.steps, dim_functor(d));
      for (std::uint64_t seed = 1; seed < 5; ++seed) EXPECT_EQ(devissage_functor(d, seed).nu, ref.nu);
    }
  }
}

TEST(NaturalMaps, BetweenSimpleFunctors) {
  const PrimeField f(3);
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      EXPECT_EQ(oracle::nat_dim(evaluate(f_r(f, r)), evaluate(f_r(f, s))), r == s ? 1u : 0u) << r << "," << s;
    }
  }
}

TEST(Subfunctor, RejectsNonInvariantSpan) {
  const auto d = evaluate(projection_cokernel());
  // V_2 alone is not closed under d_1
  Subfunctor<PrimeField> sub;
  sub.spans.emplace_back(d.field, d.dim(1), 0);
  sub.spans.push_back(FpMat::identity(d.field, d.dim(2)));
  for (int s = 3; s <= d.s_max; ++s) sub.spans.emplace_back(d.field, d.dim(s), 0);
  EXPECT_FALSE(is_subfunctor(d, sub));
}
