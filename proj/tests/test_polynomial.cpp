#include <gtest/gtest.h>

#include <random>

#include "bqs/errors.hpp"
#include "bqs/polynomial.hpp"

using namespace bqs;

namespace {

const Alphabet P2N2{2, 2};
const Alphabet P2N3{2, 3};

Polynomial var(Alphabet a, int pos, int cls, Exponent e = 1) {
  return Polynomial(Monomial::variable(a, pos, cls, e));
}

Polynomial random_poly(std::mt19937& rng, Alphabet a, int terms, Exponent max_exp) {
  std::uniform_int_distribution<int> exp(0, static_cast<int>(max_exp));
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Polynomial f(a);
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(a.size());
    for (auto& x : e) x = static_cast<Exponent>(exp(rng));
    f.add_term(e, Rational(num(rng), den(rng)));
  }
  return f;
}

}  // namespace

TEST(Lex, ClassOneBeatsClassTwoAtSamePosition) {
  EXPECT_EQ(lex_compare(Monomial(P2N2, {1, 0, 0, 0}), Monomial(P2N2, {0, 1, 0, 0})),
            std::strong_ordering::greater);
}

TEST(Lex, Reflexive) {
  Monomial m(P2N2, {1, 2, 0, 3});
  EXPECT_EQ(lex_compare(m, m), std::strong_ordering::equal);
}

TEST(Lex, FirstDifferenceDecides) {
  EXPECT_EQ(lex_compare(Monomial(P2N2, {0, 0, 1, 0}), Monomial(P2N2, {0, 3, 0, 0})),
            std::strong_ordering::less);
}

TEST(Lex, MismatchedAlphabetsThrow) {
  EXPECT_THROW(lex_compare(Monomial(P2N2), Monomial(P2N3)), DimensionError);
}

TEST(Lex, CompatibleWithMultiplication) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  auto rnd = [&] {
    ExponentVector v(P2N3.size());
    for (auto& x : v) x = static_cast<Exponent>(e(rng));
    return Monomial(P2N3, v);
  };
  for (int i = 0; i < 2000; ++i) {
    Monomial a = rnd(), b = rnd(), m = rnd();
    EXPECT_EQ(lex_compare(a * m, b * m), lex_compare(a, b));
  }
}

TEST(Lex, TotalOrderOnSmallMonomials) {
  std::vector<Monomial> all;
  for (Exponent a = 0; a < 3; ++a)
    for (Exponent b = 0; b < 3; ++b)
      for (Exponent c = 0; c < 3; ++c)
        for (Exponent d = 0; d < 3; ++d) all.emplace_back(P2N2, ExponentVector{a, b, c, d});
  for (const auto& x : all) {
    for (const auto& y : all) {
      const auto xy = lex_compare(x, y);
      EXPECT_EQ(xy == std::strong_ordering::equal, x == y);
      EXPECT_EQ(xy == std::strong_ordering::less, lex_compare(y, x) == std::strong_ordering::greater);
      for (const auto& z : all) {
        if (xy == std::strong_ordering::less && lex_compare(y, z) == std::strong_ordering::less) {
          EXPECT_EQ(lex_compare(x, z), std::strong_ordering::less);
        }
      }
    }
  }
}

TEST(PolyAdd, ZeroIsIdentity) {
  std::mt19937 rng(1);
  Polynomial f = random_poly(rng, P2N2, 5, 3);
  EXPECT_EQ(f + Polynomial(P2N2), f);
}

TEST(PolyAdd, InverseGivesEmptyTermSet) {
  std::mt19937 rng(2);
  Polynomial f = random_poly(rng, P2N2, 5, 3);
  Polynomial z = f + (-f);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.size(), 0u);
}

TEST(PolyAdd, MergesCoefficients) {
  Polynomial f = (var(P2N2, 1, 1) + var(P2N2, 2, 1)) + var(P2N2, 2, 1);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient(ExponentVector{1, 0, 0, 0}), 1);
  EXPECT_EQ(f.coefficient(ExponentVector{0, 0, 1, 0}), 2);
}

TEST(PolyMul, OneIsIdentity) {
  std::mt19937 rng(3);
  Polynomial f = random_poly(rng, P2N2, 5, 3);
  EXPECT_EQ(f * Polynomial::constant(P2N2, 1), f);
}

TEST(PolyMul, VariableProduct) {
  Polynomial f = var(P2N2, 1, 1) * var(P2N2, 1, 2);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.coefficient(ExponentVector{1, 1, 0, 0}), 1);
}

TEST(PolyMul, BinomialSquare) {
  Polynomial s = var(P2N2, 1, 1) + var(P2N2, 2, 1);
  Polynomial expected = var(P2N2, 1, 1, 2) + var(P2N2, 2, 1, 2);
  expected.add_term(ExponentVector{1, 0, 1, 0}, 2);
  EXPECT_EQ(s * s, expected);
}

TEST(PolyRing, AxiomsOnRandomInputs) {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = random_poly(rng, P2N2, 4, 2);
    Polynomial g = random_poly(rng, P2N2, 4, 2);
    Polynomial h = random_poly(rng, P2N2, 4, 2);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f - g) + g, f);
  }
}

TEST(PolyRing, RationalArithmeticIsExact) {
  Polynomial f = Polynomial::constant(P2N2, Rational(1, 3));
  Polynomial sum(P2N2);
  for (int i = 0; i < 3; ++i) sum += f;
  EXPECT_EQ(sum, Polynomial::constant(P2N2, 1));
}

TEST(LeadingTerm, WorkedExamplePolynomial) {
  Polynomial f(P2N3);
  f.add_term({0, 0, 1, 0, 0, 2}, 1);
  f.add_term({0, 0, 0, 1, 1, 1}, -1);
  f.add_term({0, 0, 0, 0, 1, 2}, 1);
  Term t = f.leading_term();
  EXPECT_EQ(t.monomial.exponents(), (ExponentVector{0, 0, 1, 0, 0, 2}));
  EXPECT_EQ(t.coefficient, 1);
}

TEST(LeadingTerm, SingleMonomial) {
  Polynomial f(Monomial(P2N2, {0, 2, 1, 0}), Rational(-3, 2));
  Term t = f.leading_term();
  EXPECT_EQ(t.monomial, Monomial(P2N2, {0, 2, 1, 0}));
  EXPECT_EQ(t.coefficient, Rational(-3, 2));
}

TEST(LeadingTerm, ZeroPolynomialThrows) {
  EXPECT_THROW(Polynomial(P2N2).leading_term(), EmptyPolynomialError);
}

TEST(Reverse, SwapsPositionsAndClasses) {
  Polynomial f = var(P2N2, 1, 1) + var(P2N2, 2, 1);
  EXPECT_EQ(reverse_variables(f), var(P2N2, 1, 2) + var(P2N2, 2, 2));
}

TEST(Reverse, ConstantFixed) {
  Polynomial c = Polynomial::constant(P2N3, 5);
  EXPECT_EQ(reverse_variables(c), c);
}

TEST(Reverse, InvolutionAndHomomorphism) {
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    Polynomial f = random_poly(rng, P2N3, 4, 2);
    Polynomial g = random_poly(rng, P2N3, 4, 2);
    EXPECT_EQ(reverse_variables(reverse_variables(f)), f);
    EXPECT_EQ(reverse_variables(f * g), reverse_variables(f) * reverse_variables(g));
  }
}

TEST(MultidegreeSplit, SeparatesClasses) {
  auto parts = multidegree_split(var(P2N2, 1, 1) + var(P2N2, 1, 2));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(MultiDegree{1, 0}), var(P2N2, 1, 1));
  EXPECT_EQ(parts.at(MultiDegree{0, 1}), var(P2N2, 1, 2));
  EXPECT_FALSE(is_homogeneous(var(P2N2, 1, 1) + var(P2N2, 1, 2)));
}

TEST(MultidegreeSplit, HomogeneousHasOnePart) {
  Polynomial f = var(P2N2, 1, 1) * var(P2N2, 2, 2) + var(P2N2, 2, 1) * var(P2N2, 1, 2);
  EXPECT_EQ(multidegree_split(f).size(), 1u);
  EXPECT_TRUE(is_homogeneous(f));
}

TEST(MonomialOps, DivisionAndLcm) {
  Monomial a(P2N2, {2, 0, 1, 1}), b(P2N2, {1, 1, 0, 1});
  EXPECT_EQ(a.lcm(b), Monomial(P2N2, {2, 1, 1, 1}));
  EXPECT_EQ(a / Monomial(P2N2, {1, 0, 1, 0}), Monomial(P2N2, {1, 0, 0, 1}));
  EXPECT_THROW(a / b, DimensionError);
  EXPECT_TRUE(Monomial(P2N2).divides(a));
}

TEST(MonomialOps, ExponentOverflowDetected) {
  Monomial big = Monomial::variable(P2N2, 1, 1, std::numeric_limits<Exponent>::max());
  EXPECT_THROW(big * Monomial::variable(P2N2, 1, 1), DimensionError);
}

TEST(MonomialOps, BadVariableRejected) {
  EXPECT_THROW(Monomial::variable(P2N2, 3, 1), DimensionError);
  EXPECT_THROW(Monomial::variable(P2N2, 1, 3), DimensionError);
  EXPECT_THROW(validate_alphabet(Alphabet{0, 2}), DimensionError);
}

TEST(RationalText, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}
