// One PASS/FAIL line per acceptance criterion, with wall time against its
// budget. Exit status is nonzero if any criterion fails.

#include <hft/error.hpp>
#include <hft/fixedpoints.hpp>
#include <hft/localize.hpp>
#include <hft/series.hpp>
#include <hft/stability.hpp>
#include <hft/vertexcalc.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "../support/oracles.hpp"

using namespace hft;
namespace oracle = hft::test;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(std::string why)
    {
        if (ok)
            detail = std::move(why);
        ok = false;
    }
};

std::string str(const BoxTuple &b)
{
    std::string s = "(";
    for (int x : b.alpha)
        s += std::to_string(x) + ",";
    s += "|";
    for (int x : b.beta)
        s += "," + std::to_string(x);
    return s + ")";
}

// 1. Rank 1, n = 0: binomial with exponent (s2+s3)/s1.
Outcome untwisted_closed_form()
{
    Outcome o;
    auto s = assemble_vertex(1, 0, 6, Mode::character);
    auto r = binomiality_test(s);
    std::vector<Integer> num{0, 1, 1, 0}, den{1, 0, 0, 0};
    WeightFunction want(4, 1, {WeightForm(num)}, {WeightForm(den)});
    if (!r.is_binomial)
        o.fail("series is not binomial");
    else if (r.exponent->as_weight_function() != want)
        o.fail("exponent " + to_string(*r.exponent));
    return o;
}

// 2. Calabi-Yau rank 1: (-1)^k for n = 0..3, against per-tuple Euler products.
Outcome calabi_yau_rank_one()
{
    Outcome o;
    auto sp = Specialization::calabi_yau_unit_frame(1);
    std::vector<std::vector<Rational>> points{{Rational(3, 7), Rational(11, 5)}, {Rational(-2), Rational(9, 13)}};
    for (auto &p : points) {
        p.push_back(-p[0] - p[1]);
        p.push_back(1);
    }
    for (int n = 0; n <= 3; ++n) {
        auto s = assemble_vertex(1, n, 6, Mode::character, sp);
        auto report = compare(1, n, 6, sp);
        for (int k = 0; k <= 6; ++k) {
            Rational want = k % 2 ? -1 : 1;
            if (s.coefficients[static_cast<std::size_t>(k)] != ParamFunction(4, want))
                o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                       to_string(s.coefficients[static_cast<std::size_t>(k)]));
            for (const auto &p : points) {
                Rational sum = 0;
                for (const auto &b : support_tuples(1, k, Support::vertex))
                    sum += oracle::euler_ratio_at(total_character(b, n), p);
                if (sum != want)
                    o.fail("oracle disagrees at n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
            // The report must carry the exact difference from (1+q)^-(n+1).
            const auto &row = report.rows[static_cast<std::size_t>(k)];
            Rational printed = oracle::binomial_at(Rational(-(n + 1)), k);
            if (!row.character_minus_binomial || *row.character_minus_binomial != ParamFunction(4, want - printed))
                o.fail("compare report difference wrong at n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return o;
}

// 3. hft_partition against the multinomial oracle.
Outcome partition_power()
{
    Outcome o;
    oracle::Rng rng(2024);
    for (int i = 0; i < 50; ++i) {
        CountSeries p;
        int terms = oracle::uniform(rng, 1, 5);
        for (int t = 0; t < terms; ++t)
            p[oracle::uniform(rng, 0, 8)] = oracle::fraction(oracle::uniform(rng, -6, 6), oracle::uniform(rng, 1, 4));
        int n = oracle::uniform(rng, 1, 3), r = oracle::uniform(rng, 1, 4), order = oracle::uniform(rng, 0, 20);
        if (hft_partition(p, n, r, order) != oracle::multinomial_oracle(p, n, r, order))
            o.fail("case " + std::to_string(i));
    }
    return o;
}

// 4. Fixed-point counts.
Outcome enumeration_counts()
{
    Outcome o;
    for (int r = 1; r <= 4; ++r)
        for (int k = 0; k <= 8; ++k) {
            auto got = enumerate_fixed(r, k);
            if (Integer(static_cast<long>(got.size())) != oracle::binomial(k + 2 * r - 1, 2 * r - 1))
                o.fail("count r=" + std::to_string(r) + " k=" + std::to_string(k));
            if (got != oracle::brute_force_tuples(r, k))
                o.fail("tuples r=" + std::to_string(r) + " k=" + std::to_string(k));
        }
    return o;
}

// 5. Every total character reduces to a Laurent polynomial.
Outcome laurent_grid()
{
    Outcome o;
    for (int r = 1; r <= 3; ++r)
        for (int k = 0; k <= 5; ++k)
            for (const auto &b : enumerate_fixed(r, k))
                for (int n = 0; n <= 3; ++n) {
                    try {
                        total_character(b, n);
                    } catch (const Error &e) {
                        o.fail(str(b) + " n=" + std::to_string(n) + ": " + e.what());
                    }
                }
    return o;
}

// 6. Contributions are invariant under scaling every parameter.
Outcome homogeneity_grid()
{
    Outcome o;
    const Rational scale(-7, 4);
    for (int r = 1; r <= 3; ++r) {
        std::vector<Rational> p{Rational(5, 3), Rational(-7, 11), Rational(13, 2)};
        for (int j = 0; j < r; ++j)
            p.emplace_back(oracle::fraction(17 + 6 * j, 19 + j));
        auto scaled = p;
        for (auto &x : scaled)
            x *= scale;
        for (int k = 0; k <= 5; ++k)
            for (const auto &b : enumerate_fixed(r, k))
                for (int n = 0; n <= 3; ++n) {
                    auto f = contribution(b, n, Mode::character);
                    if (f.numerator().size() != f.denominator().size() || !f.is_homogeneous())
                        o.fail(str(b) + " unbalanced");
                    else if (f.evaluate(p) != f.evaluate(scaled))
                        o.fail(str(b) + " not scale invariant");
                }
    }
    return o;
}

// 7. After w2 -> -w1 the rank-2 edge function no longer depends on n.
Outcome frame_cancellation()
{
    Outcome o;
    VariableSet v(2);
    Substitution s(v);
    s.set(VariableSet::w(2), {-1, Monomial::variable(v, VariableSet::w(1))});
    auto at = [&](int n) {
        return normalize(substitute(edge_G(edge_frame_character(v), LaurentPoly::variable(v, VariableSet::t(1), n)), s));
    };
    if (at(0) != at(7))
        o.fail(to_string(at(0)) + " vs " + to_string(at(7)));
    return o;
}

// 8. Limit stability agrees with the zero-dimensional cokernel test.
Outcome stability_equivalence()
{
    Outcome o;
    oracle::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        auto m = oracle::random_model(rng, 2 + i % 2);
        if (!limit_stable_equiv(m.model, m.q).agree())
            o.fail("model " + std::to_string(i));
    }
    return o;
}

// 9. Character algebra properties on random inputs. bar() returns canonical
// form, so its involution is checked against normalize().
Outcome algebra_properties()
{
    Outcome o;
    oracle::Rng rng(9);
    for (int i = 0; i < 1000; ++i) {
        VariableSet v(oracle::uniform(rng, 1, 2));
        auto x = oracle::random_character(rng, v);
        auto y = oracle::random_character(rng, v);
        auto p = oracle::random_poly(rng, v);
        if (bar(bar(x)) != normalize(x) || bar(bar(p)) != p)
            o.fail("bar is not an involution");
        auto nx = normalize(x);
        if (normalize(nx) != nx || !equivalent(nx, x))
            o.fail("normalize is not idempotent");
        if (reduce_to_laurent(embed(p)) != p)
            o.fail("reduce(embed(p)) != p");
        if (normalize(embed(reduce_to_laurent(embed(p)))) != normalize(embed(p)))
            o.fail("embed(reduce(x)) != x");
        Substitution s(v);
        for (int var = 0; var < v.size(); ++var)
            s.set(var, {oracle::uniform(rng, 0, 1) ? 1 : -1, oracle::random_nonconstant(rng, v, 1)});
        bool poles_ok = true;
        RationalCharacter sx(p), sy(p);
        try {
            sx = substitute(x, s);
            sy = substitute(y, s);
        } catch (const Error &e) {
            // A factor mapped to (1 - 1) makes the image undefined.
            poles_ok = false;
        }
        if (poles_ok) {
            if (!equivalent(substitute(x + y, s), sx + sy) || !equivalent(substitute(x * y, s), sx * sy))
                o.fail("substitution is not a homomorphism");
        }
    }
    return o;
}

// 10. The w-free part of a rank-2 character splits into rank-1 characters.
Outcome rank_splitting()
{
    Outcome o;
    VariableSet v2(2);
    for (int k = 0; k <= 5; ++k)
        for (const auto &b : enumerate_fixed(2, k))
            for (int n = 0; n <= 3; ++n) {
                BoxTuple first{1, {b.alpha[0]}, {b.beta[0]}}, second{1, {b.alpha[1]}, {b.beta[1]}};
                auto split = oracle::relabel_frame(total_character(first, n), v2, 1) +
                             oracle::relabel_frame(total_character(second, n), v2, 2);
                if (oracle::frame_free_part(total_character(b, n)) != split)
                    o.fail(str(b) + " n=" + std::to_string(n));
            }
    return o;
}

struct Criterion {
    int id;
    const char *name;
    double budget_s;
    std::function<Outcome()> check;
};

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "untwisted rank-1 series is binomial in (s2+s3)/s1", 1, untwisted_closed_form},
        {2, "Calabi-Yau rank-1 series is (1+q)^-1 for n=0..3", 1, calabi_yau_rank_one},
        {3, "partition function equals multinomial expansion", 1, partition_power},
        {4, "fixed point counts are C(k+2r-1, 2r-1)", 1, enumeration_counts},
        {5, "total characters are Laurent on r<=3, k<=5, n<=3", 10, laurent_grid},
        {6, "contributions are homogeneous of degree 0", 10, homogeneity_grid},
        {7, "edge function independent of n after w2 -> -w1", 1, frame_cancellation},
        {8, "limit stability matches zero-dimensional cokernel", 1, stability_equivalence},
        {9, "character algebra properties on 1000 random cases", 10, algebra_properties},
        {10, "rank-2 frame-free characters split into rank 1", 10, rank_splitting},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o.fail(std::string("unexpected error: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_s)
            o.fail("over time budget");
        failures += o.ok ? 0 : 1;
        std::printf("%s criterion %2d: %s (%.3f s, budget %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.budget_s, o.ok ? "" : " - ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
