#include <hft/error.hpp>
#include <hft/vertexcalc.hpp>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"

using namespace hft;

namespace
{

struct Vars {
    VariableSet v;
    explicit Vars(int r) : v(r) {}
    LaurentPoly t(int i, int p = 1) const
    {
        return LaurentPoly::variable(v, VariableSet::t(i), p);
    }
    LaurentPoly w(int j, int p = 1) const
    {
        return LaurentPoly::variable(v, VariableSet::w(j), p);
    }
    LaurentPoly c(const Rational &x) const
    {
        return LaurentPoly::constant(v, x);
    }
    Monomial mt(int i, int p = 1) const
    {
        return Monomial::variable(v, VariableSet::t(i), p);
    }
    // (1-t2)(1-t3)/(t2 t3)
    LaurentPoly x() const
    {
        return (c(1) - t(2)) * (c(1) - t(3)) * t(2, -1) * t(3, -1);
    }
};

} // namespace

TEST(Total, RankOneSingleBox)
{
    Vars r(1);
    EXPECT_EQ(total_character(BoxTuple{1, {1}, {0}}, 0), r.t(1, -1) - r.t(2, -1) * r.t(3, -1));
}

TEST(Total, RankOneTwoBoxes)
{
    Vars r(1);
    auto want = r.t(1, -1) + r.t(1, -2) - (r.c(1) + r.t(1)) * r.t(2, -1) * r.t(3, -1);
    EXPECT_EQ(total_character(BoxTuple{1, {2}, {0}}, 0), want);
}

TEST(Total, RankOneTwisted)
{
    Vars r(1);
    auto want = r.t(1, -4) - r.t(1, 3) * r.t(2, -1) * r.t(3, -1);
    EXPECT_EQ(total_character(BoxTuple{1, {1}, {0}}, 3), want);
}

TEST(Total, EmptyConfigurationVanishes)
{
    for (int r = 1; r <= 3; ++r)
        for (int n : {0, 1, 4})
            EXPECT_TRUE(total_character(BoxTuple::empty(r), n).is_zero());
}

TEST(Total, RankTwoBlockClosedForm)
{
    Vars r(2);
    BoxTuple b{2, {1, 0}, {0, 0}};
    auto w = r.w(1) + r.w(2);
    auto wd = r.w(1, -1) + r.w(2, -1);
    auto closed = wd * r.w(1) * r.t(1, -1) - w * r.w(1, -1) * r.t(2, -1) * r.t(3, -1);
    EXPECT_EQ(closed_form_character(b, 0), closed);
    // Cross-block residual, expanded by hand: -X (w1 w2^-1 t1^-1 - w2 w1^-1).
    auto residual = -(r.x() * (r.w(1) * r.w(2, -1) * r.t(1, -1) - r.w(2) * r.w(1, -1)));
    EXPECT_EQ(cross_block_residual(b), residual);
    EXPECT_EQ(total_character(b, 0), closed + residual);
}

TEST(Total, PipelineEqualsClosedFormPlusResidual)
{
    for (int rank = 1; rank <= 3; ++rank)
        for (int k = 0; k <= 3; ++k)
            for (const auto &b : enumerate_fixed(rank, k))
                for (int n = 0; n <= 2; ++n) {
                    auto total = total_character(b, n);
                    EXPECT_EQ(total, closed_form_character(b, n) + cross_block_residual(b));
                    if (rank == 1)
                        EXPECT_EQ(total, closed_form_character(b, n));
                }
}

TEST(Total, ResidualVanishesForEqualLengths)
{
    for (int d = 0; d <= 3; ++d)
        for (int c = 0; c <= 2; ++c)
            EXPECT_TRUE(cross_block_residual(BoxTuple{3, {d, d, d}, {c, c, c}}).is_zero());
}

TEST(Total, BalancedSigns)
{
    for (int rank = 1; rank <= 3; ++rank)
        for (int k = 0; k <= 4; ++k)
            for (const auto &b : enumerate_fixed(rank, k)) {
                Rational pos = 0, neg = 0;
                auto v = total_character(b, 1);
                for (const auto &[m, c] : v.terms())
                    (c > 0 ? pos : neg) += abs(c);
                EXPECT_EQ(pos, neg);
            }
}

TEST(Total, FrameSplitting)
{
    VariableSet v2(2);
    for (int k = 0; k <= 3; ++k)
        for (const auto &b : enumerate_fixed(2, k)) {
            BoxTuple b1{1, {b.alpha[0]}, {b.beta[0]}}, b2{1, {b.alpha[1]}, {b.beta[1]}};
            auto split = hft::test::relabel_frame(total_character(b1, 2), v2, 1) +
                         hft::test::relabel_frame(total_character(b2, 2), v2, 2);
            EXPECT_EQ(hft::test::frame_free_part(total_character(b, 2)), split);
        }
}

TEST(Trace, EmptyConfigurationIsPoleTerm)
{
    Vars r(1);
    for (int n : {0, 2}) {
        auto frame = ChartFrame::alpha(r.v, n);
        auto trace = trace_vertex(leg_character(BoxTuple::empty(1), Chart::alpha), frame);
        auto g = edge_G(edge_frame_character(r.v), r.t(1, n));
        auto pole = -(g * RationalCharacter(r.c(1), {r.mt(1)}));
        EXPECT_TRUE(equivalent(trace, pole));
        EXPECT_TRUE(vertex_character(trace, frame, {EdgeTerm{g, 1}}).is_zero());
    }
}

TEST(Trace, FirstTermRankTwo)
{
    Vars r(2);
    BoxTuple b{2, {2, 1}, {0, 0}};
    for (int n : {0, 3}) {
        auto f = leg_character(b, Chart::alpha);
        auto terms = trace_terms(f, ChartFrame::alpha(r.v, n));
        auto want = f * embed((r.w(1, -1) + r.w(2, -1)) * r.t(1, -n));
        EXPECT_TRUE(equivalent(terms[0], want));
    }
}

TEST(Trace, BetaAgreesWithAlphaThroughChartChange)
{
    // The beta frame applied to the beta leg equals the alpha computation
    // in local variables pushed through the chart change.
    for (int rank = 1; rank <= 2; ++rank) {
        VariableSet v(rank);
        auto change = Substitution::chart_change(v);
        for (int k = 0; k <= 2; ++k)
            for (const auto &b : enumerate_fixed(rank, k)) {
                BoxTuple local{rank, b.beta, std::vector<int>(static_cast<std::size_t>(rank), 0)};
                auto alpha_side = trace_vertex(leg_character(local, Chart::alpha), ChartFrame::alpha(v, 0));
                auto beta_side = trace_vertex(leg_character(b, Chart::beta), ChartFrame::beta(v));
                EXPECT_TRUE(equivalent(substitute(alpha_side, change), beta_side));
                EXPECT_EQ(substitute(chart_vertex(local, Chart::alpha, 0), change),
                          chart_vertex(b, Chart::beta, 0));
            }
    }
}

TEST(EdgeG, RankOneReducesToStablePairsEdge)
{
    Vars r(1);
    auto g = edge_G(edge_frame_character(r.v), r.c(1));
    EXPECT_EQ(reduce_to_laurent(g), -r.t(2, -1) - r.t(3, -1));
    for (int n : {1, 4}) {
        auto gn = edge_G(edge_frame_character(r.v), r.t(1, n));
        auto want = -r.t(1, -n) - r.t(1, n) * r.t(2, -1) * r.t(3, -1) + r.x();
        EXPECT_EQ(reduce_to_laurent(gn), want);
    }
}

TEST(EdgeG, RankTwoTerms)
{
    Vars r(2);
    auto w = r.w(1) + r.w(2);
    auto wd = r.w(1, -1) + r.w(2, -1);
    for (int n : {0, 2}) {
        auto g = edge_G(w, r.t(1, n));
        auto want = embed(-(w * wd * r.t(1, -n)) - wd * w * r.t(1, n) * r.t(2, -1) * r.t(3, -1) + w * wd * r.x()) -
                    RationalCharacter(r.c(1) - w * wd, {r.mt(2), r.mt(3)});
        EXPECT_TRUE(equivalent(g, want));
    }
}

TEST(EdgeG, FrameCancellationRemovesTwist)
{
    Vars r(2);
    Substitution s(r.v);
    s.set(VariableSet::w(2), {-1, Monomial::variable(r.v, VariableSet::w(1))});
    auto at = [&](int n) { return substitute(edge_G(edge_frame_character(r.v), r.t(1, n)), s); };
    auto g0 = at(0);
    EXPECT_EQ(g0, at(7));
    EXPECT_EQ(g0, normalize(RationalCharacter(-r.c(1), {r.mt(2), r.mt(3)})));
}

TEST(EdgeG, TripleAndQuadruple)
{
    Vars r1(1), r2(2);
    EXPECT_TRUE(quad_G(r1.v).is_zero());
    auto want = -r2.c(1) - r2.w(1) * r2.w(2, -1) - r2.w(2) * r2.w(1, -1);
    EXPECT_EQ(quad_G(r2.v), want);
    EXPECT_TRUE(equivalent(triple_G(r2.v), RationalCharacter(want, {r2.mt(3)})));
}

TEST(EdgeE, ConstantG)
{
    Vars r(2);
    for (Rational g : {Rational(1), Rational(-3, 2)}) {
        EXPECT_EQ(edge_E(embed(r.c(g)), EdgeData{}), r.c(-g));
        EXPECT_EQ(edge_E_quad(r.c(g)), r.c(-g));
    }
    EXPECT_TRUE(edge_E_quad(quad_G(VariableSet(1))).is_zero());
    EXPECT_EQ(edge_E_quad(quad_G(r.v)), -quad_G(r.v));
}

TEST(EdgeE, ShiftedEdgeFunction)
{
    // G = t2^-1 - t3^-1: the shift t_i -> t_i t1 for m = m' = -1 gives
    // (t1^-1 (t2^-1 - t3^-1) - t1^-1 (t2^-1 - t3^-1))/(1 - t1^-1) = 0.
    Vars r(1);
    EXPECT_TRUE(edge_E(embed(r.t(2, -1) - r.t(3, -1)), EdgeData{}).is_zero());
    // G = t2 gives (t1^-1 t2 - t1 t2)/(1 - t1^-1) = -t2 (1 + t1).
    auto e = edge_E(embed(r.t(2)), EdgeData{});
    std::vector<Rational> pt{Rational(3), Rational(5), Rational(7), Rational(11)};
    Rational t1 = pt[0], t2 = pt[1];
    EXPECT_EQ(hft::test::eval(e, pt), (t2 / t1 - t2 * t1) / (1 - 1 / t1));
    EXPECT_EQ(e, -(r.t(2) + r.t(1) * r.t(2)));
}

TEST(EdgeE, TripleKeepsPole)
{
    Vars r(2);
    auto e = edge_E_triple(triple_G(r.v), EdgeData{});
    EXPECT_FALSE(e.is_laurent());
    std::vector<Rational> pt{Rational(3), Rational(5), Rational(7), Rational(11), Rational(13)};
    Rational t1 = 3, t3 = 7;
    Rational g4 = hft::test::eval(quad_G(r.v), pt);
    Rational a = (g4 / (t1 * (1 - t3)) - g4 / (1 - t3 * t1)) / (1 - 1 / t1);
    EXPECT_EQ(hft::test::eval(e, pt), -a);
}

TEST(Vertex, NotPolynomialOnWrongData)
{
    Vars r(1);
    auto frame = ChartFrame::alpha(r.v, 0);
    auto trace = trace_vertex(leg_character(BoxTuple{1, {1}, {0}}, Chart::alpha), frame);
    try {
        vertex_character(trace, frame, {});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPolynomial);
    }
}

TEST(Vertex, LaurentOnGrid)
{
    for (int rank = 1; rank <= 2; ++rank)
        for (int k = 0; k <= 3; ++k)
            for (const auto &b : enumerate_fixed(rank, k))
                for (int n = 0; n <= 3; ++n)
                    EXPECT_NO_THROW(total_character(b, n));
}
