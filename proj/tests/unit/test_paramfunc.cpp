#include <hft/error.hpp>
#include <hft/paramfunc.hpp>

#include <gtest/gtest.h>

#include "../support/expect_error.hpp"
#include "../support/oracles.hpp"

using namespace hft;

namespace
{

constexpr int params = 5;

WeightForm random_form(hft::test::Rng &rng)
{
    while (true) {
        std::vector<Integer> c;
        for (int i = 0; i < params; ++i)
            c.emplace_back(hft::test::uniform(rng, -2, 2));
        WeightForm f(std::move(c));
        if (!f.is_zero())
            return f;
    }
}

WeightFunction random_weight_function(hft::test::Rng &rng)
{
    std::vector<WeightForm> num, den;
    int a = hft::test::uniform(rng, 0, 3), b = hft::test::uniform(rng, 0, 3);
    for (int i = 0; i < a; ++i)
        num.push_back(random_form(rng));
    for (int i = 0; i < b; ++i)
        den.push_back(random_form(rng));
    return WeightFunction(params, hft::test::fraction(hft::test::uniform(rng, -5, 5), hft::test::uniform(rng, 1, 4)), num, den);
}

// Random point at which no form with coefficients in [-2, 2] vanishes: the
// entries are 10^i plus a jitter too small to cancel a base-10 digit.
std::vector<Rational> generic_point(hft::test::Rng &rng)
{
    std::vector<Rational> p;
    Integer scale = 1;
    for (int i = 0; i < params; ++i, scale *= 10)
        p.emplace_back(Rational(scale) + hft::test::fraction(hft::test::uniform(rng, -3, 3), 100));
    return p;
}

} // namespace

TEST(ParamPoly, Division)
{
    // (s1 + s2)(s1 - 2 s3 + 1) / (s1 + s2)
    WeightForm a(std::vector<Integer>{1, 1, 0, 0, 0});
    WeightForm b(std::vector<Integer>{1, 0, -2, 0, 0}, Integer(1));
    auto prod = ParamPoly::of(a) * ParamPoly::of(b);
    auto q = prod.divide(a);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, ParamPoly::of(b));
    EXPECT_FALSE(ParamPoly::of(b).divide(a).has_value());
    EXPECT_EQ(prod.total_degree(), 2);
    EXPECT_FALSE(prod.is_homogeneous());
}

TEST(ParamPoly, Specialize)
{
    WeightForm a(std::vector<Integer>{1, 1, 1, 0, 0});
    auto p = ParamPoly::of(a) * ParamPoly::of(a);
    auto sp = Specialization::parse("s3=-s1-s2", 2);
    EXPECT_TRUE(p.specialize(sp).is_zero());
    auto sp2 = Specialization::parse("s1=2,s2=3", 2);
    auto s = p.specialize(sp2);
    std::vector<Rational> pt{2, 3, 7, 0, 0};
    EXPECT_EQ(s.evaluate(pt), 144);
}

TEST(ParamFunction, ArithmeticMatchesEvaluation)
{
    hft::test::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        ParamFunction f = random_weight_function(rng), g = random_weight_function(rng);
        auto pt = generic_point(rng);
        Rational fv = f.evaluate(pt), gv = g.evaluate(pt);
        EXPECT_EQ((f + g).evaluate(pt), fv + gv);
        EXPECT_EQ((f - g).evaluate(pt), fv - gv);
        EXPECT_EQ((f * g).evaluate(pt), fv * gv);
        EXPECT_EQ((f * Rational(3, 7)).evaluate(pt), fv * Rational(3, 7));
        EXPECT_TRUE((f - f).is_zero());
        EXPECT_EQ(f + g, g + f);
    }
}

TEST(ParamFunction, SumsFactorWhenPossible)
{
    // 1/s1 + 1/s2 = (s1 + s2)/(s1 s2)
    WeightForm s1(std::vector<Integer>{1, 0, 0, 0, 0}), s2(std::vector<Integer>{0, 1, 0, 0, 0});
    ParamFunction a = WeightFunction(params, 1, {}, {s1}), b = WeightFunction(params, 1, {}, {s2});
    auto sum = (a + b).as_weight_function();
    ASSERT_TRUE(sum.has_value());
    EXPECT_EQ(*sum, WeightFunction(params, 1, {s1 + s2}, {s1, s2}));
    // s1/s2 - s1/s2 collapses to zero exactly.
    ParamFunction c = WeightFunction(params, 1, {s1}, {s2});
    EXPECT_TRUE((c - c).is_zero());
}

TEST(ParamFunction, ResidualSurvives)
{
    // s1^2 + s2^2 does not factor over the rationals.
    WeightForm s1(std::vector<Integer>{1, 0, 0, 0, 0}), s2(std::vector<Integer>{0, 1, 0, 0, 0});
    ParamFunction a = WeightFunction(params, 1, {s1}, {s2}), b = WeightFunction(params, 1, {s2}, {s1});
    auto sum = a + b;
    EXPECT_FALSE(sum.as_weight_function().has_value());
    EXPECT_TRUE(sum.is_homogeneous());
    EXPECT_EQ(sum.degree(), 0);
    EXPECT_EQ(sum * WeightFunction(params, 1, {s1, s2}, {}) - ParamFunction(WeightFunction(params, 1, {s1, s1}, {})),
              ParamFunction(WeightFunction(params, 1, {s2, s2}, {})));
}

TEST(ParamFunction, SpecializeMatchesEvaluation)
{
    hft::test::Rng rng(8);
    auto sp = Specialization::parse("s3=-s1-s2,v1=1,v2=1/3*s2", 2);
    for (int i = 0; i < 200; ++i) {
        ParamFunction f = ParamFunction(random_weight_function(rng)) + random_weight_function(rng);
        auto pt = generic_point(rng);
        pt[2] = -pt[0] - pt[1];
        pt[3] = 1;
        pt[4] = pt[1] / 3;
        ParamFunction s(params);
        try {
            s = f.specialize(sp);
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
            continue;
        }
        Rational fv;
        try {
            fv = f.evaluate(pt);
        } catch (const Error &) {
            continue;
        }
        EXPECT_EQ(s.evaluate(pt), fv);
    }
}

TEST(ParamFunction, SpecializeZeroDenominator)
{
    WeightForm d(std::vector<Integer>{0, 0, 0, 1, -1});
    ParamFunction f = WeightFunction(params, 1, {}, {d});
    EXPECT_HFT_ERROR(f.specialize(Specialization::parse("v1=1,v2=1", 2)), ErrorKind::DivisionByZero);
}

TEST(ParamFunction, Text)
{
    EXPECT_EQ(to_string(ParamFunction(params, Rational(-3, 2))), "-3/2");
}
