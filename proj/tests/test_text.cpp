#include <gtest/gtest.h>

#include <random>

#include "bqs/errors.hpp"
#include "bqs/groebner.hpp"
#include "bqs/json_io.hpp"
#include "bqs/text.hpp"

using namespace bqs;

TEST(Text, WorkedExampleParses) {
  const Alphabet a{2, 3};
  const Polynomial f = parse_polynomial("x2 y3^2 - y2 x3 y3 + x3 y3^2", a);
  EXPECT_EQ(f, groebner_element(PVector(2, {0, 0, 1, 0, 0, 2}), a));
  EXPECT_EQ(to_string(f), "x2 y3^2 - y2 x3 y3 + x3 y3^2");
}

TEST(Text, ZeroAndConstants) {
  const Alphabet a{2, 2};
  EXPECT_TRUE(parse_polynomial("0", a).is_zero());
  EXPECT_EQ(to_string(Polynomial(a)), "0");
  EXPECT_EQ(to_string(parse_polynomial("-3/6 + 2 x1", a)), "2 x1 - 1/2");
  EXPECT_EQ(to_string(parse_polynomial("x1 - x1", a)), "0");
}

TEST(Text, GeneralClassSyntax) {
  const Alphabet a{3, 2};
  const Polynomial f = parse_polynomial("x1_2 * x2_3^2 - 5/3 x1_1", a);
  EXPECT_EQ(f.coefficient(ExponentVector{0, 1, 0, 0, 0, 2}), 1);
  EXPECT_EQ(f.coefficient(ExponentVector{1, 0, 0, 0, 0, 0}), Rational(-5, 3));
  EXPECT_EQ(to_string(f), "-5/3 x1_1 + x1_2 x2_3^2");
  EXPECT_EQ(parse_polynomial(to_string(f), a), f);
}

TEST(Text, AliasesOnlyForTwoClasses) {
  EXPECT_EQ(parse_polynomial("x1_2", Alphabet{2, 1}), parse_polynomial("y1", Alphabet{2, 1}));
  EXPECT_THROW(parse_polynomial("y1", Alphabet{3, 1}), ParseError);
  EXPECT_THROW(parse_polynomial("x1", Alphabet{3, 1}), ParseError);
  EXPECT_NO_THROW(parse_polynomial("x1", Alphabet{1, 1}));
}

TEST(Text, Errors) {
  EXPECT_THROW(parse_polynomial("x1_4^2", Alphabet{3, 2}), ParseError);
  EXPECT_THROW(parse_polynomial("x3", Alphabet{2, 2}), ParseError);
  EXPECT_THROW(parse_polynomial("x0", Alphabet{2, 2}), ParseError);
  EXPECT_THROW(parse_polynomial("", Alphabet{2, 2}), ParseError);
  EXPECT_THROW(parse_polynomial("x1 +", Alphabet{2, 2}), ParseError);
  EXPECT_THROW(parse_polynomial("x1 ^2", Alphabet{2, 2}), ParseError);
  try {
    parse_polynomial("x1 + z2", Alphabet{2, 2});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Text, RandomRoundTrip) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> ex(0, 3), co(-9, 9), de(1, 5);
  for (int p = 1; p <= 3; ++p) {
    const Alphabet a{p, 3};
    for (int i = 0; i < 50; ++i) {
      Polynomial f(a);
      for (int t = 0; t < 5; ++t) {
        ExponentVector e(a.size());
        for (auto& x : e) x = static_cast<Exponent>(ex(rng));
        f.add_term(e, Rational(co(rng), de(rng)));
      }
      const std::string s = to_string(f);
      EXPECT_EQ(parse_polynomial(s, a), f) << s;
      EXPECT_EQ(to_string(parse_polynomial(s, a)), s);
    }
  }
}

TEST(VectorLiteral, ParsesBlocks) {
  EXPECT_EQ(parse_vector_literal("0,0,1,0,0,2", 2), PVector(2, {0, 0, 1, 0, 0, 2}));
  EXPECT_EQ(parse_vector_literal(" 1, 2 ", 2), PVector(2, {1, 2}));
  EXPECT_EQ(parse_vector_literal("", 3).size(), 0);
  EXPECT_THROW(parse_vector_literal("1,2,3", 2), ParseError);
  EXPECT_THROW(parse_vector_literal("1,,2", 2), ParseError);
  EXPECT_THROW(parse_vector_literal("1,-2", 2), ParseError);
}

TEST(Json, PolynomialRoundTrip) {
  const Alphabet a{2, 3};
  const Polynomial f = parse_polynomial("x2 y3^2 - 1/2 y2 x3 y3 + 7", a);
  const Json j = to_json(f);
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["terms"][1]["coeff"], "-1/2");
  EXPECT_EQ(j["terms"][1]["exp"], Json::parse("[0,0,0,1,1,1]"));
  EXPECT_EQ(polynomial_from_json(j), f);
  EXPECT_EQ(polynomial_from_json(Json::parse(j.dump())), f);
}

TEST(Json, MalformedDocuments) {
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"p":2,"terms":[]})")), ParseError);
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"p":2,"n":1,"terms":[{"coeff":"1","exp":[1]}]})")),
               DimensionError);
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"p":2,"n":1,"terms":[{"coeff":"1/0","exp":[1,0]}]})")),
               ParseError);
}

TEST(Json, ReductionRecord) {
  const Alphabet a{2, 2};
  const Json j = to_json(normal_form(parse_polynomial("x1", a)));
  EXPECT_EQ(j["remainder_text"], "-x2");
  EXPECT_EQ(j["used"].size(), 1u);
  EXPECT_EQ(j["used"][0]["index"], Json::parse("[1,0,0,0]"));
}
