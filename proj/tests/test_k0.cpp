#include "support.hpp"

using namespace kt;

namespace {

K0Class<PrimeField> k0_of(const PrimeField& f, std::initializer_list<std::tuple<FpPoly, int, std::int64_t>> entries) {
  K0Class<PrimeField> c(f);
  for (const auto& [m, r, n] : entries) c.add(m, r, n);
  return c;
}

}  // namespace

TEST(AutClass, IdentityCountsCopiesOfTheTrivialModule) {
  const PrimeField f(2);
  EXPECT_TRUE(k0_eq(aut_k0_class(mod(FpMat::identity(f, 2))), k0_of(f, {{fp(2, {1, 1}), 1, 2}})));
}

TEST(AutClass, Examples) {
  const PrimeField f(2);
  EXPECT_TRUE(k0_eq(aut_k0_class(mod(companion(fp(2, {1, 1, 1})))), k0_of(f, {{fp(2, {1, 1, 1}), 1, 1}})));
  EXPECT_TRUE(aut_k0_class(TorsionModule<PrimeField>::zero(f)).empty());
  EXPECT_KAUT_ERROR(aut_k0_class(mod(jordan_block(f, 2))), errc::kNotAutomorphism);
}

TEST(AutClass, InvariantUnderConjugation) {
  Rng rng(51);
  const PrimeField f(3);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_invertible(f, 4, rng);
    const auto b = conjugate(a, random_invertible(f, 4, rng));
    EXPECT_TRUE(k0_eq(aut_k0_class(mod(a)), aut_k0_class(mod(b))));
  }
}

TEST(AutClass, AdditiveOnDirectSums) {
  Rng rng(52);
  for (std::uint64_t p : {2, 3, 5}) {
    const PrimeField f(p);
    for (int i = 0; i < 34; ++i) {
      const auto a = random_invertible(f, static_cast<std::size_t>(uniform_int(rng, 1, 3)), rng);
      const auto b = random_invertible(f, static_cast<std::size_t>(uniform_int(rng, 1, 3)), rng);
      EXPECT_TRUE(k0_eq(aut_k0_class(mod(direct_sum(a, b))), k0_add(aut_k0_class(mod(a)), aut_k0_class(mod(b)))));
    }
  }
}

TEST(AutClass, RealizeRoundTrip) {
  Rng rng(53);
  const PrimeField f(5);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_invertible(f, 4, rng);
    const auto c = aut_k0_class(mod(a));
    EXPECT_TRUE(similar(realize(c), mod(a)));
  }
  EXPECT_KAUT_ERROR(realize(k0_neg(aut_k0_class(mod(FpMat::identity(f, 1))))), errc::kNegativeCoefficient);
}

TEST(NilClass, Examples) {
  const PrimeField f(3);
  EXPECT_EQ(nil_k0_class(mod(FpMat(f, 3, 3))).entries, (std::map<int, std::int64_t>{{1, 3}}));
  EXPECT_EQ(nil_k0_class(mod(jordan_block(f, 3))).entries, (std::map<int, std::int64_t>{{3, 1}}));
  EXPECT_EQ(nil_k0_class(mod(direct_sum(jordan_block(f, 2), jordan_block(f, 1)))).entries,
            (std::map<int, std::int64_t>{{1, 1}, {2, 1}}));
  EXPECT_KAUT_ERROR(nil_k0_class(mod(FpMat::identity(f, 1))), errc::kNotNilpotent);
}

TEST(NilClass, Additive) {
  Rng rng(54);
  const PrimeField f(2);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_nilpotent(f, 3, rng), b = random_nilpotent(f, 4, rng);
    EXPECT_EQ(nil_k0_class(mod(direct_sum(a, b))), nil_k0_add(nil_k0_class(mod(a)), nil_k0_class(mod(b))));
  }
}

TEST(GroupLaw, NegationCancels) {
  const PrimeField f(2);
  const auto a = aut_k0_class(mod(direct_sum(companion(fp(2, {1, 1, 1})), FpMat::identity(f, 2))));
  EXPECT_TRUE(k0_add(a, k0_neg(a)).empty());
  EXPECT_FALSE(k0_eq(a, k0_neg(a)));
}

TEST(GroupLaw, FieldMismatch) {
  const K0Class<PrimeField> a(PrimeField(2)), b(PrimeField(3));
  EXPECT_KAUT_ERROR(k0_add(a, b), errc::kFieldMismatch);
  EXPECT_KAUT_ERROR(k0_eq(a, b), errc::kFieldMismatch);
}

TEST(Transport, Examples) {
  const auto p = fp(2, {1, 1, 1});
  EXPECT_TRUE(transport_check(PrimaryComponent<PrimeField>::of(p, mod(companion(p)))));
  const auto m = fp(3, {-1, 1});
  EXPECT_TRUE(transport_check(PrimaryComponent<PrimeField>::of(m, mod(companion(pow(m, 2))))));
  EXPECT_TRUE(transport_check(PrimaryComponent<PrimeField>::of(p, TorsionModule<PrimeField>::zero(PrimeField(2)))));
}

TEST(Transport, RandomPrimaryModules) {
  Rng rng(55);
  for (std::uint64_t q : {2, 3}) {
    const PrimeField f(q);
    for (const auto& m : irreducibles_up_to(f, 2)) {
      DivisorClass<PrimeField> dc(f);
      for (int b : random_partition(m.degree() == 1 ? 4 : 2, rng)) dc.add(m, b);
      const auto a = build_module(f, dc).mat();
      EXPECT_TRUE(transport_check(PrimaryComponent<PrimeField>::of(m, mod(conjugate(a, random_invertible(f, a.rows(), rng))))));
    }
  }
}
