#include "support.hpp"

using namespace kt;

TEST(PolyArith, GcdOverRationals) {
  EXPECT_EQ(gcd(qp({-1, 0, 1}), qp({-1, 1})), qp({-1, 1}));
}

TEST(PolyArith, DivmodExact) {
  auto [q, r] = divmod(fp(5, {0, 0, 1}), fp(5, {0, 1}));
  EXPECT_EQ(q, fp(5, {0, 1}));
  EXPECT_TRUE(r.is_zero());
}

TEST(PolyArith, DivmodIdentityRandom) {
  Rng rng(21);
  const PrimeField f(7);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(f, uniform_int(rng, 0, 8), rng);
    const auto b = random_poly(f, uniform_int(rng, 0, 4), rng);
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(PolyArith, XgcdBezout) {
  Rng rng(22);
  const RationalField f;
  for (int i = 0; i < 30; ++i) {
    const auto a = random_poly(f, uniform_int(rng, 1, 5), rng);
    const auto b = random_poly(f, uniform_int(rng, 1, 5), rng);
    auto [g, s, t] = xgcd(a, b);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE(divides(g, a) && divides(g, b));
  }
}

TEST(PolyArith, DerivativeVanishesInCharTwo) {
  EXPECT_TRUE(fp(2, {1, 0, 1}).derivative().is_zero());
}

TEST(PolyArith, Errors) {
  EXPECT_KAUT_ERROR(divmod(fp(3, {1, 1}), FpPoly(PrimeField(3))), errc::kDivisionByZeroPoly);
  EXPECT_KAUT_ERROR(fp(3, {1, 1}) + fp(5, {1, 1}), errc::kFieldMismatch);
  EXPECT_KAUT_ERROR(factor(FpPoly(PrimeField(3))), errc::kZeroPolynomial);
}

TEST(Separable, Examples) {
  EXPECT_TRUE(is_separable(fp(2, {1, 1, 1})));
  EXPECT_FALSE(is_separable(fp(2, {1, 0, 1})));
  EXPECT_TRUE(is_separable(qp({-2, 0, 1})));
  EXPECT_FALSE(is_separable(qp({1, 2, 1})));
}

TEST(Factor, SquareOverF2) {
  const auto fz = factor(fp(2, {1, 0, 1}));
  ASSERT_EQ(fz.factors.size(), 1u);
  EXPECT_EQ(fz.factors[0].first, fp(2, {1, 1}));
  EXPECT_EQ(fz.factors[0].second, 2);
}

TEST(Factor, DifferenceOfSquaresOverRationals) {
  const auto fz = factor(qp({-1, 0, 1}));
  ASSERT_EQ(fz.factors.size(), 2u);
  EXPECT_EQ(fz.factors[0].first, qp({-1, 1}));
  EXPECT_EQ(fz.factors[1].first, qp({1, 1}));
  EXPECT_EQ(fz.expand(RationalField()), qp({-1, 0, 1}));
}

TEST(Factor, QuarticSplitsIntoQuadraticsOverRationals) {
  // t^4 + 4 = (t^2 - 2t + 2)(t^2 + 2t + 2)
  const auto fz = factor(qp({4, 0, 0, 0, 1}));
  ASSERT_EQ(fz.factors.size(), 2u);
  for (const auto& [g, e] : fz.factors) {
    EXPECT_EQ(g.degree(), 2);
    EXPECT_TRUE(is_irreducible(g));
  }
  EXPECT_TRUE(is_irreducible(qp({-2, 0, 1})));
  EXPECT_FALSE(is_irreducible(qp({4, 0, 0, 0, 1})));
}

TEST(Factor, RationalDegreeCap) {
  // t^8 + 1 is irreducible of degree 8, beyond the search cap
  EXPECT_KAUT_ERROR(factor(qp({1, 0, 0, 0, 0, 0, 0, 0, 1})), errc::kDegreeCapExceeded);
}

TEST(Factor, OverFourElementField) {
  const auto f = f4();
  // t^2 + t + 1 splits over F_4 as (t - a)(t - a^2)
  Poly<GaloisField> p(f, {f.one(), f.one(), f.one()});
  const auto fz = factor(p);
  ASSERT_EQ(fz.factors.size(), 2u);
  EXPECT_EQ(fz.factors[0].first.degree(), 1);
  EXPECT_EQ(roots(p).size(), 2u);
}

template <FiniteField F>
void check_remultiplication(const F& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 60; ++i) {
    const auto a = random_poly(f, uniform_int(rng, 1, 10), rng);
    const auto fz = factor(a, seed + static_cast<std::uint64_t>(i));
    EXPECT_EQ(fz.expand(f), a);
    for (std::size_t k = 0; k < fz.factors.size(); ++k) {
      EXPECT_TRUE(fz.factors[k].first.is_monic());
      EXPECT_TRUE(is_irreducible(fz.factors[k].first));
      if (k > 0) {
        EXPECT_TRUE(canonical_compare(fz.factors[k - 1].first, fz.factors[k].first) < 0);
      }
    }
  }
}

TEST(Factor, RandomRemultiplication) {
  check_remultiplication(PrimeField(2), 1);
  check_remultiplication(PrimeField(3), 2);
  check_remultiplication(PrimeField(13), 3);
  check_remultiplication(f4(), 4);
}

TEST(Factor, RationalRemultiplication) {
  Rng rng(5);
  const RationalField q;
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(q, uniform_int(rng, 1, 3), rng) * random_poly(q, uniform_int(rng, 1, 3), rng);
    EXPECT_EQ(factor(a).expand(q), a);
  }
}

TEST(Factor, IndependentOfSeed) {
  Rng rng(6);
  const PrimeField f(5);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_poly(f, 8, rng);
    const auto ref = factor(a, 0).factors;
    for (std::uint64_t s = 1; s < 4; ++s) EXPECT_EQ(factor(a, s).factors, ref);
  }
}

TEST(Factor, SeparableIffNoRepeatedFactor) {
  Rng rng(7);
  const PrimeField f(3);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(f, uniform_int(rng, 1, 6), rng);
    bool square_free = true;
    for (const auto& [g, e] : factor(a).factors) square_free = square_free && e == 1;
    EXPECT_EQ(is_separable(a), square_free);
  }
}

TEST(Irreducibles, SmallCounts) {
  EXPECT_EQ(irreducibles_up_to(PrimeField(2), 1).size(), 2u);
  const auto two = irreducibles_up_to(PrimeField(2), 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[2], fp(2, {1, 1, 1}));
  EXPECT_KAUT_ERROR(irreducibles_up_to(RationalField(), 2), errc::kInfiniteField);
}

TEST(Irreducibles, MatchNecklaceCounts) {
  auto per_degree = [](const auto& polys, int d) {
    return static_cast<std::uint64_t>(std::count_if(polys.begin(), polys.end(), [&](const auto& g) { return g.degree() == d; }));
  };
  const auto f3 = irreducibles_up_to(PrimeField(3), 4);
  EXPECT_EQ(per_degree(f3, 2), 3u);
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(per_degree(f3, d), oracle::necklace_count(3, d));
  const auto f2 = irreducibles_up_to(PrimeField(2), 6);
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(per_degree(f2, d), oracle::necklace_count(2, d));
  const auto g4 = irreducibles_up_to(f4(), 2);
  for (int d = 1; d <= 2; ++d) EXPECT_EQ(per_degree(g4, d), oracle::necklace_count(4, d));
}
