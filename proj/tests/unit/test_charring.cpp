#include <hft/charring.hpp>
#include <hft/error.hpp>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"

using namespace hft;
using hft::test::eval;

namespace
{

const VariableSet R1(1);
const VariableSet R2(2);

LaurentPoly t(int i, int p = 1, const VariableSet &v = R1)
{
    return LaurentPoly::variable(v, VariableSet::t(i), p);
}
LaurentPoly w(int j, int p = 1, const VariableSet &v = R1)
{
    return LaurentPoly::variable(v, VariableSet::w(j), p);
}
LaurentPoly c(const Rational &x, const VariableSet &v = R1)
{
    return LaurentPoly::constant(v, x);
}
Monomial mt(int i, int p = 1, const VariableSet &v = R1)
{
    return Monomial::variable(v, VariableSet::t(i), p);
}

} // namespace

TEST(Charring, DifferenceOfSquares)
{
    auto r = embed(c(1) + t(1)) * embed(c(1) - t(1));
    EXPECT_EQ(reduce_to_laurent(r), c(1) - t(1, 2));
}

TEST(Charring, CommonDenominator)
{
    auto a = RationalCharacter(w(1) * t(1, -1), {mt(1)});
    auto b = RationalCharacter(w(1) * t(1, -2), {mt(1)});
    auto sum = a + b;
    // Cross-multiplication oracle against the hand-combined fraction.
    RationalCharacter expected(w(1) * t(1, -1) + w(1) * t(1, -2), {mt(1)});
    EXPECT_TRUE(equivalent(sum, expected));
    EXPECT_EQ(sum, normalize(expected));
}

TEST(Charring, BarOfMonomial)
{
    auto x = embed(t(1, 2) * t(2, -1));
    EXPECT_EQ(bar(x), embed(t(1, -2) * t(2, 1)));
}

TEST(Charring, BarOfPole)
{
    auto x = RationalCharacter(c(1), {mt(1)});
    RationalCharacter expected(-t(1), {mt(1)});
    EXPECT_TRUE(equivalent(bar(x), RationalCharacter(c(1), {mt(1, -1)})));
    EXPECT_TRUE(equivalent(bar(x), expected));
    EXPECT_EQ(bar(x), expected);
}

TEST(Charring, BarInvertsFrameVariables)
{
    EXPECT_EQ(bar(embed(w(1) * t(2))), embed(w(1, -1) * t(2, -1)));
}

TEST(Charring, ChartChangeOfT2)
{
    auto change = Substitution::chart_change(R1);
    EXPECT_EQ(substitute(embed(t(2)), change), embed(t(1) * t(2)));
}

TEST(Charring, SignSquaresAway)
{
    Substitution s(R2);
    s.set(VariableSet::w(2), {-1, Monomial::variable(R2, VariableSet::w(1))});
    EXPECT_EQ(substitute(embed(w(2, 2, R2)), s), embed(w(1, 2, R2)));
    EXPECT_EQ(substitute(embed(w(2, 1, R2)), s), embed(-w(1, 1, R2)));
}

TEST(Charring, ChartChangeOfStructureSheaf)
{
    auto change = Substitution::chart_change(R1);
    for (int n : {0, 2}) {
        RationalCharacter f(t(1, n), {mt(1), mt(2), mt(3)});
        auto g = substitute(f, change);
        RationalCharacter expected(t(1, -n), {mt(1, -1), Monomial(mt(2) * mt(1)), Monomial(mt(3) * mt(1))});
        EXPECT_TRUE(equivalent(g, expected)) << n;
    }
    // At n = 0 the numerator over those three factors is 1.
    auto g = substitute(RationalCharacter(c(1), {mt(1), mt(2), mt(3)}), change);
    EXPECT_TRUE(equivalent(g, RationalCharacter(c(1), {mt(1, -1), mt(2) * mt(1), mt(3) * mt(1)})));
}

TEST(Charring, ZeroReplacementRejected)
{
    Substitution s(R1);
    EXPECT_THROW(s.set(VariableSet::t(1), {0, Monomial::one(R1)}), Error);
    try {
        s.set(VariableSet::t(1), {0, Monomial::one(R1)});
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidReplacement);
    }
}

TEST(Charring, ReplacementKillingDenominatorRejected)
{
    Substitution s(R1);
    s.set(VariableSet::t(1), {1, Monomial::one(R1)});
    RationalCharacter x(c(1), {mt(1)});
    try {
        substitute(x, s);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidReplacement);
    }
}

TEST(Charring, SignedDenominatorBecomesOneMinusSquare)
{
    Substitution s(R1);
    s.set(VariableSet::t(1), {-1, mt(2)});
    auto g = substitute(RationalCharacter(c(1), {mt(1)}), s);
    // 1/(1+t2)
    std::vector<Rational> pt{Rational(3), Rational(5), Rational(7), Rational(11)};
    EXPECT_EQ(eval(g, pt), Rational(1, 6));
}

TEST(Charring, GeometricSum)
{
    RationalCharacter x(c(1) - t(1, 3), {mt(1)});
    EXPECT_EQ(reduce_to_laurent(x), c(1) + t(1) + t(1, 2));
}

TEST(Charring, NotPolynomial)
{
    try {
        reduce_to_laurent(RationalCharacter(c(1), {mt(1)}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPolynomial);
    }
}

TEST(Charring, NormalizeCancels)
{
    auto n = normalize(RationalCharacter(c(1) - t(1, 2), {mt(1)}));
    EXPECT_TRUE(n.is_laurent());
    EXPECT_EQ(n.numerator(), c(1) + t(1));
    EXPECT_EQ(normalize(n), n);
}

TEST(Charring, NormalizeOrientsFactors)
{
    auto n = normalize(RationalCharacter(c(1), {mt(1, -1)}));
    ASSERT_EQ(n.denominator().size(), 1u);
    EXPECT_TRUE(n.denominator()[0].is_positive());
    EXPECT_EQ(n.numerator(), -t(1));
}

TEST(Charring, InvalidDenominator)
{
    try {
        RationalCharacter(c(1), {Monomial::one(R1)});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidDenominator);
    }
}

TEST(Charring, VariableSetMismatch)
{
    try {
        combine(embed(c(1)), embed(c(1, R2)), CombineOp::add);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::VariableSetMismatch);
    }
}

TEST(Charring, DivideByOneMinusNegativeStep)
{
    // (t1^-3 - 1) / (1 - t1^-1) = -(1 + t1^-1 + t1^-2)
    LaurentPoly p = t(1, -3) - c(1);
    auto q = divide_by_one_minus(p, mt(1, -1));
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, -(c(1) + t(1, -1) + t(1, -2)));
    EXPECT_FALSE(divide_by_one_minus(t(1), mt(1)).has_value());
}

TEST(Charring, TextFormat)
{
    LaurentPoly p = t(1, -1) - t(2, -1) * t(3, -1) + c(Rational(1, 2)) - w(1) * t(1, 2) * Rational(3);
    EXPECT_EQ(to_string(p), "-3*t1^2*w1^1 + 1/2 + 1*t1^-1 - 1*t2^-1*t3^-1");
    EXPECT_EQ(to_string(LaurentPoly(R1)), "0");
    RationalCharacter x(w(1) * t(1, -2), {mt(1), mt(2)});
    EXPECT_EQ(to_string(normalize(x)), "(1*t1^-2*w1^1)/((1-t1^1)*(1-t2^1))");
    EXPECT_EQ(to_string(embed(c(-2))), "(-2)");
}

TEST(Charring, EvaluationAgreesWithArithmetic)
{
    hft::test::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto a = hft::test::random_character(rng, R2);
        auto b = hft::test::random_character(rng, R2);
        auto pt = hft::test::random_point(rng, R2.size());
        Rational va = eval(a, pt), vb = eval(b, pt);
        EXPECT_EQ(eval(a + b, pt), va + vb);
        EXPECT_EQ(eval(a - b, pt), va - vb);
        EXPECT_EQ(eval(a * b, pt), va * vb);
        std::vector<Rational> inv;
        for (const auto &x : pt)
            inv.push_back(1 / x);
        EXPECT_EQ(eval(bar(a), pt), eval(a, inv));
    }
}

TEST(CharringProperty, CombineCommutativeAssociative)
{
    hft::test::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        auto a = hft::test::random_character(rng, R1);
        auto b = hft::test::random_character(rng, R1);
        auto d = hft::test::random_character(rng, R1);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE(equivalent((a + b) + d, a + (b + d)));
        EXPECT_TRUE(equivalent((a * b) * d, a * (b * d)));
    }
}

TEST(CharringProperty, AdditiveInverse)
{
    hft::test::Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        auto a = hft::test::random_character(rng, R2);
        EXPECT_TRUE((a + (-a)).is_zero());
    }
}

TEST(CharringProperty, CancelledFactorNormalizesAway)
{
    hft::test::Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        auto p = hft::test::random_poly(rng, R2);
        auto m = hft::test::random_nonconstant(rng, R2, 2);
        LaurentPoly one_minus_m = c(1, R2);
        one_minus_m.add_term(m, -1);
        RationalCharacter x(p * one_minus_m, {m});
        EXPECT_TRUE(equivalent(x, embed(p)));
        EXPECT_EQ(normalize(x), embed(p));
    }
}
