#include "support.hpp"

using namespace kt;

TEST(FieldMake, PrimeTwo) {
  PrimeField f(2);
  EXPECT_EQ(f.add(1, 1), 0u);
  EXPECT_EQ(f.inv(1), 1u);
  EXPECT_EQ(f.descriptor(), FieldDescriptor::prime(2));
}

TEST(FieldMake, RejectsComposite) {
  EXPECT_KAUT_ERROR(PrimeField(15), errc::kNotPrime);
  EXPECT_KAUT_ERROR(PrimeField(1), errc::kNotPrime);
}

TEST(FieldMake, RejectsHugePrime) {
  // 2^62 - 57 is prime
  EXPECT_KAUT_ERROR(PrimeField((1ULL << 62) - 57), errc::kPrimeTooLarge);
  EXPECT_NO_THROW(PrimeField((1ULL << 61) - 1));
}

TEST(FieldMake, FourElementField) {
  auto f = f4();
  EXPECT_EQ(*f.order(), 4u);
  const auto a = f.generator();
  // a^2 = a + 1
  EXPECT_TRUE(f.equal(f.mul(a, a), f.add(a, f.one())));
  for (std::uint64_t i = 1; i < 4; ++i) {
    const auto x = f.element_at(i);
    EXPECT_TRUE(f.equal(f.mul(x, f.inv(x)), f.one()));
  }
}

TEST(FieldMake, ReducibleModulus) {
  EXPECT_KAUT_ERROR(make_galois_field(2, {1, 0, 1}), errc::kReducibleModulus);
}

TEST(FieldMake, DivisionByZero) {
  EXPECT_KAUT_ERROR(PrimeField(5).inv(0), errc::kDivisionByZero);
  EXPECT_KAUT_ERROR(RationalField().inv(0), errc::kDivisionByZero);
}

TEST(ResidueField, QuadraticOverF2) {
  auto r = residue_field(PrimeField(2), fp(2, {1, 1, 1}));
  EXPECT_EQ(*r.field().order(), 4u);
  EXPECT_EQ(r.degree(), 2);
  // alpha is a root of m
  EXPECT_TRUE(r.field().is_zero(r.embed_poly(fp(2, {1, 1, 1})).eval(r.alpha())));
}

TEST(ResidueField, LinearModulusKeepsCardinality) {
  auto r = residue_field(PrimeField(3), fp(3, {-1, 1}));
  EXPECT_EQ(*r.field().order(), 3u);
  EXPECT_TRUE(r.field().equal(r.alpha(), r.field().one()));
}

TEST(ResidueField, RejectsReducible) {
  EXPECT_KAUT_ERROR(residue_field(PrimeField(2), fp(2, {0, 0, 1})), errc::kReducibleModulus);
}

TEST(ResidueField, OverExtensionIsFlattened) {
  const auto base = f4();
  // t^2 + t + a is irreducible over F_4
  Poly<GaloisField> m(base, {base.generator(), base.one(), base.one()});
  auto r = residue_field(base, m, 7);
  EXPECT_EQ(*r.field().order(), 16u);
  EXPECT_EQ(r.field().base().characteristic(), 2u);
  EXPECT_TRUE(r.field().is_zero(r.embed_poly(m).eval(r.alpha())));
  for (std::uint64_t i = 0; i < 16; ++i) {
    const auto x = r.field().element_at(i);
    EXPECT_TRUE(r.field().equal(r.from_coords(r.coords(x)), x));
  }
}

TEST(ResidueField, OverRationals) {
  auto r = residue_field(RationalField(), qp({-2, 0, 1}));
  const auto& l = r.field();
  EXPECT_TRUE(l.equal(l.mul(r.alpha(), r.alpha()), l.from_int(2)));
  EXPECT_EQ(l.descriptor().kind, FieldDescriptor::Kind::Extension);
  EXPECT_TRUE(l.descriptor().over_rationals());
}

TEST(Embed, Unital) {
  auto r = residue_field(PrimeField(2), fp(2, {1, 1, 1}));
  EXPECT_TRUE(r.field().equal(embed(PrimeField(2), r, 1), r.field().one()));
}

TEST(Embed, ConstantIntoNineElementField) {
  auto r = residue_field(PrimeField(3), fp(3, {1, 0, 1}));
  const auto e = embed(PrimeField(3), r, 2);
  EXPECT_EQ(e, (std::vector<std::uint64_t>{2, 0}));
}

TEST(Embed, WrongBase) {
  auto r = residue_field(PrimeField(3), fp(3, {1, 0, 1}));
  EXPECT_KAUT_ERROR(embed(PrimeField(5), r, 1), errc::kFieldMismatch);
}

template <Field B>
void check_embedding_homomorphic(const B& base, const Poly<B>& m) {
  auto r = residue_field(base, m, 3);
  const auto& l = r.field();
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = base.random(rng), b = base.random(rng);
    EXPECT_TRUE(l.equal(r.embed(base.add(a, b)), l.add(r.embed(a), r.embed(b))));
    EXPECT_TRUE(l.equal(r.embed(base.mul(a, b)), l.mul(r.embed(a), r.embed(b))));
    EXPECT_EQ(base.equal(a, b), l.equal(r.embed(a), r.embed(b)));
  }
}

TEST(Embed, HomomorphicOnRandomPairs) {
  check_embedding_homomorphic(PrimeField(3), fp(3, {1, 0, 1}));
  check_embedding_homomorphic(PrimeField(5), fp(5, {1, 1, 0, 1}));
  check_embedding_homomorphic(RationalField(), qp({1, 1, 1}));
  const auto base = f4();
  check_embedding_homomorphic(base, Poly<GaloisField>(base, {base.generator(), base.one(), base.one()}));
}

template <Field F>
void check_axioms(const F& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    EXPECT_TRUE(f.equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
    EXPECT_TRUE(f.equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
    EXPECT_TRUE(f.equal(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
    EXPECT_TRUE(f.is_zero(f.add(a, f.neg(a))));
    if (!f.is_zero(a)) {
      EXPECT_TRUE(f.equal(f.mul(a, f.inv(a)), f.one()));
    }
  }
}

TEST(FieldAxioms, RandomTriples) {
  check_axioms(PrimeField(2), 1);
  check_axioms(PrimeField(7), 2);
  check_axioms(PrimeField(1000000007), 3);
  check_axioms(RationalField(), 4);
  check_axioms(f4(), 5);
  check_axioms(make_galois_field(3, {1, 2, 0, 1}), 6);
}

template <FiniteField F>
void check_frobenius(const F& f) {
  Rng rng(9);
  const auto p = f.characteristic();
  for (int i = 0; i < 100; ++i) {
    const auto a = f.random(rng), b = f.random(rng);
    EXPECT_TRUE(f.equal(pow(f, f.add(a, b), p), f.add(pow(f, a, p), pow(f, b, p))));
    EXPECT_TRUE(f.equal(f.frobenius(a), pow(f, a, p)));
    EXPECT_TRUE(f.equal(f.frobenius(f.pth_root(a)), a));
  }
}

TEST(FieldAxioms, Frobenius) {
  check_frobenius(PrimeField(5));
  check_frobenius(f4());
  check_frobenius(make_galois_field(3, {1, 2, 0, 1}));
}
