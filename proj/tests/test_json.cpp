#include "support.hpp"

#include "kaut/json_io.hpp"

using namespace kt;
using kaut::io::json;

TEST(JsonElements, RationalForms) {
  EXPECT_EQ(io::rational_to_json(mpq_class(3)), json(3));
  EXPECT_EQ(io::rational_to_json(mpq_class(-1, 2)), json("-1/2"));
  EXPECT_EQ(io::rational_from_json(json("6/4")), mpq_class(3, 2));
  EXPECT_THROW(io::rational_from_json(json("x")), io::ParseError);
  EXPECT_THROW(io::rational_from_json(json(1.5)), io::ParseError);
}

TEST(JsonElements, ExtensionRoundTrip) {
  const auto f = f4();
  for (std::uint64_t i = 0; i < 4; ++i) {
    const auto a = f.element_at(i);
    EXPECT_TRUE(f.equal(io::elem_from_json(f, io::elem_to_json(f, a)), a));
  }
  EXPECT_TRUE(f.equal(io::elem_from_json(f, json(1)), f.one()));
  EXPECT_THROW(io::elem_from_json(f, json::parse("[0, 1, 1]")), io::ParseError);
}

TEST(JsonFields, Descriptors) {
  EXPECT_EQ(io::field_to_json(PrimeField(5)), json::parse(R"({"kind":"prime","p":5})"));
  EXPECT_EQ(io::field_to_json(RationalField()), json::parse(R"({"kind":"rationals"})"));
  EXPECT_EQ(io::field_to_json(f4()), json::parse(R"({"kind":"extension","p":2,"modulus":[1,1,1]})"));
  const auto nf = residue_field(RationalField(), qp({-2, 0, 1})).field();
  EXPECT_EQ(io::field_to_json(nf), json::parse(R"({"kind":"extension","base":"rationals","modulus":[-2,0,1]})"));
}

TEST(JsonFields, Dispatch) {
  EXPECT_EQ(io::with_field(json::parse(R"({"kind":"prime","p":7})"), [](const auto& f) { return f.descriptor(); }),
            FieldDescriptor::prime(7));
  EXPECT_EQ(io::with_field(json::parse(R"({"kind":"extension","p":2,"modulus":[1,1,1]})"),
                           [](const auto& f) { return f.descriptor(); }),
            f4().descriptor());
  EXPECT_KAUT_ERROR(io::with_field(json::parse(R"({"kind":"prime","p":9})"), [](const auto& f) { return f.characteristic(); }),
                    errc::kNotPrime);
  EXPECT_KAUT_ERROR(io::with_field(json::parse(R"({"kind":"extension","base":"rationals","modulus":[1,0,1]})"),
                                   [](const auto& f) { return f.characteristic(); }),
                    errc::kUnsupportedField);
  EXPECT_THROW(io::with_field(json::parse(R"({"kind":"reals"})"), [](const auto& f) { return f.characteristic(); }), io::ParseError);
  EXPECT_THROW(io::with_field(json::parse(R"({"p":2})"), [](const auto& f) { return f.characteristic(); }), io::ParseError);
}

TEST(JsonMatrices, RoundTrip) {
  Rng rng(71);
  const auto f = f4();
  for (int i = 0; i < 10; ++i) {
    const auto m = random_matrix(f, 3, 2, rng);
    EXPECT_EQ(io::matrix_from_json(f, io::matrix_rows(m)), m);
  }
  const auto q = qm({{1, -2}, {0, 3}});
  EXPECT_EQ(io::matrix_from_json(RationalField(), io::matrix_rows(q)), q);
  EXPECT_THROW(io::matrix_from_json(PrimeField(2), json::parse("[[1, 0], [1]]")), io::ParseError);
  EXPECT_THROW(io::matrix_from_json(PrimeField(2), json::parse("[[\"a\"]]")), io::ParseError);
}

TEST(JsonK0, RoundTrip) {
  const PrimeField f(3);
  const auto c = aut_k0_class(mod(direct_sum(companion(fp(3, {1, 0, 1})), FpMat::identity(f, 2))));
  EXPECT_TRUE(k0_eq(io::k0_from_json(f, io::k0_to_json(c)), c));
}

TEST(JsonPresentation, BareAndWrappedEntries) {
  const auto j = json::parse(R"({"source":[1,3],"target":[2],"beta":[[{"p":[0,1]},[1]]]})");
  const auto fn = io::presentation_from_json(PrimeField(2), j);
  EXPECT_EQ(dim_functor(evaluate(fn)), 1u);
  EXPECT_THROW(io::presentation_from_json(PrimeField(2), json::parse(R"({"source":[1],"target":[1]})")), io::ParseError);
}
