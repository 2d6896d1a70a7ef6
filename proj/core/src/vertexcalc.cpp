#include <hft/error.hpp>
#include <hft/vertexcalc.hpp>

namespace hft
{

namespace
{

Monomial var(const VariableSet &vars, int index, int power = 1)
{
    return Monomial::variable(vars, index, power);
}

LaurentPoly one(const VariableSet &vars)
{
    return LaurentPoly::constant(vars, 1);
}

// (1-t2)(1-t3)/(t2t3)
LaurentPoly normal_factor(const VariableSet &vars)
{
    LaurentPoly a = one(vars);
    a.add_term(var(vars, VariableSet::t(2)), -1);
    LaurentPoly b = one(vars);
    b.add_term(var(vars, VariableSet::t(3)), -1);
    return (a * b).times(var(vars, VariableSet::t(2), -1) * var(vars, VariableSet::t(3), -1));
}

RationalCharacter over(const LaurentPoly &num, std::vector<Monomial> den)
{
    return normalize(RationalCharacter(num, std::move(den)));
}

} // namespace

ChartFrame ChartFrame::alpha(const VariableSet &vars, int twist)
{
    return ChartFrame{Chart::alpha, Substitution(vars), LaurentPoly::variable(vars, VariableSet::t(1), twist)};
}

ChartFrame ChartFrame::beta(const VariableSet &vars)
{
    return ChartFrame{Chart::beta, Substitution::chart_change(vars), one(vars)};
}

Monomial ChartFrame::torus(int i) const
{
    SignedMonomial img = local.image(VariableSet::t(i));
    if (img.sign != 1)
        throw Error(ErrorKind::InvalidReplacement, "chart coordinates must be monomials without sign");
    return img.monomial;
}

std::array<RationalCharacter, 4> trace_terms(const RationalCharacter &f, const ChartFrame &frame)
{
    const VariableSet &vars = f.vars();
    const Monomial t1 = frame.torus(1), t2 = frame.torus(2), t3 = frame.torus(3);
    const Monomial inv_t123 = (t1 * t2 * t3).inverse();
    const std::vector<Monomial> d{t1, t2, t3};

    LaurentPoly d_poly = one(vars);
    for (const auto &m : d) {
        LaurentPoly factor = one(vars);
        factor.add_term(m, -1);
        d_poly = d_poly * factor;
    }

    const LaurentPoly &c = frame.correction;
    const LaurentPoly w = frame_sum(vars);
    const LaurentPoly w_dual = frame_dual_sum(vars);
    const RationalCharacter f_dual = bar(f);

    RationalCharacter first = f * embed(w_dual * bar(c));
    RationalCharacter second = -(f_dual * embed((w * c).times(inv_t123)));
    RationalCharacter third = f * f_dual * embed(d_poly.times(inv_t123));
    RationalCharacter fourth = over(one(vars) - w * w_dual * c * bar(c), d);
    return {first, second, third, fourth};
}

RationalCharacter trace_vertex(const RationalCharacter &f, const ChartFrame &frame)
{
    auto t = trace_terms(f, frame);
    return sum({t[0], t[1], t[2], t[3]});
}

LaurentPoly edge_frame_character(const VariableSet &vars)
{
    return frame_sum(vars);
}

RationalCharacter edge_G(const LaurentPoly &edge_frame, const LaurentPoly &correction)
{
    const VariableSet &vars = edge_frame.vars();
    const LaurentPoly w = frame_sum(vars);
    const LaurentPoly w_dual = frame_dual_sum(vars);
    const LaurentPoly f_dual = bar(edge_frame);
    const Monomial inv_t23 = var(vars, VariableSet::t(2), -1) * var(vars, VariableSet::t(3), -1);

    LaurentPoly laurent = -(edge_frame * w_dual * bar(correction)) - (f_dual * w * correction).times(inv_t23) +
                          edge_frame * f_dual * normal_factor(vars);
    RationalCharacter pole = over(one(vars) - w * w_dual * correction * bar(correction),
                                  {var(vars, VariableSet::t(2)), var(vars, VariableSet::t(3))});
    return embed(laurent) - pole;
}

LaurentPoly quad_G(const VariableSet &vars)
{
    return one(vars) - frame_sum(vars) * frame_dual_sum(vars);
}

RationalCharacter triple_G(const VariableSet &vars)
{
    return over(quad_G(vars), {var(vars, VariableSet::t(3))});
}

LaurentPoly vertex_character(const RationalCharacter &trace, const ChartFrame &frame,
                             const std::vector<EdgeTerm> &edges)
{
    std::vector<RationalCharacter> terms{trace};
    for (const auto &e : edges) {
        if (e.axis < 1 || e.axis > 3)
            throw Error(ErrorKind::InvalidArgument, "edge axis must be 1, 2 or 3");
        RationalCharacter g = substitute(e.g, frame.local);
        terms.push_back(g * over(one(trace.vars()), {frame.torus(e.axis)}));
    }
    return reduce_to_laurent(sum(terms));
}

LaurentPoly chart_vertex(const BoxTuple &b, Chart chart, int twist)
{
    b.validate();
    if (twist < 0)
        throw Error(ErrorKind::InvalidArgument, "twist must be nonnegative");
    VariableSet vars(b.rank);
    ChartFrame frame = chart == Chart::alpha ? ChartFrame::alpha(vars, twist) : ChartFrame::beta(vars);
    // Edge correction in local variables: t1^n from the alpha side, 1 from beta.
    LaurentPoly edge_correction =
        chart == Chart::alpha ? LaurentPoly::variable(vars, VariableSet::t(1), twist) : one(vars);
    RationalCharacter trace = trace_vertex(leg_character(b, chart), frame);
    RationalCharacter g = edge_G(edge_frame_character(vars), edge_correction);
    return vertex_character(trace, frame, {EdgeTerm{g, 1}});
}

LaurentPoly total_character(const BoxTuple &b, int twist)
{
    return chart_vertex(b, Chart::alpha, twist) + chart_vertex(b, Chart::beta, twist);
}

namespace
{

// Block sums of the closed form in local chart variables.
LaurentPoly closed_form_local(const VariableSet &vars, const std::vector<int> &lengths, int twist)
{
    const LaurentPoly w = frame_sum(vars);
    const LaurentPoly w_dual = frame_dual_sum(vars);
    const Monomial inv_t23 = var(vars, VariableSet::t(2), -1) * var(vars, VariableSet::t(3), -1);
    LaurentPoly out(vars);
    for (int j = 1; j <= vars.frame_count(); ++j) {
        int d = lengths[static_cast<std::size_t>(j - 1)];
        LaurentPoly down(vars), up(vars);
        for (int i = 1; i <= d; ++i)
            down.add_term(var(vars, VariableSet::t(1), -i - twist), 1);
        for (int i = 0; i < d; ++i)
            up.add_term(var(vars, VariableSet::t(1), i + twist) * inv_t23, 1);
        out += (w_dual * down).times(var(vars, VariableSet::w(j)));
        out -= (w * up).times(var(vars, VariableSet::w(j), -1));
    }
    return out;
}

// -X sum_{i != j} w_i w_j^-1 (t1^(d_j-d_i) - 1)/(1-t1) in local variables.
LaurentPoly residual_local(const VariableSet &vars, const std::vector<int> &lengths)
{
    LaurentPoly sum(vars);
    const Monomial t1 = var(vars, VariableSet::t(1));
    for (int i = 1; i <= vars.frame_count(); ++i) {
        for (int j = 1; j <= vars.frame_count(); ++j) {
            if (i == j)
                continue;
            int shift = lengths[static_cast<std::size_t>(j - 1)] - lengths[static_cast<std::size_t>(i - 1)];
            LaurentPoly num(vars, t1.pow(shift));
            num.add_term(Monomial::one(vars), -1);
            auto q = divide_by_one_minus(num, t1);
            sum += q->times(var(vars, VariableSet::w(i)) * var(vars, VariableSet::w(j), -1));
        }
    }
    return -(normal_factor(vars) * sum);
}

} // namespace

LaurentPoly closed_form_character(const BoxTuple &b, int twist)
{
    b.validate();
    VariableSet vars(b.rank);
    Substitution change = Substitution::chart_change(vars);
    return closed_form_local(vars, b.alpha, twist) + substitute(closed_form_local(vars, b.beta, 0), change);
}

LaurentPoly cross_block_residual(const BoxTuple &b)
{
    b.validate();
    VariableSet vars(b.rank);
    Substitution change = Substitution::chart_change(vars);
    return residual_local(vars, b.alpha) + substitute(residual_local(vars, b.beta), change);
}

namespace
{

// (t1^-1 G - G(shifted))/(1 - t1^-1)
RationalCharacter redistribute_t1(const RationalCharacter &g, const Substitution &shift)
{
    const VariableSet &vars = g.vars();
    const Monomial t1 = var(vars, VariableSet::t(1));
    RationalCharacter lhs = g * embed(LaurentPoly(vars, t1.inverse()));
    return (lhs - substitute(g, shift)) * over(one(vars), {t1.inverse()});
}

// (t^-1 X - X)/(1 - t^-1) for the variable t_axis.
RationalCharacter redistribute_plain(const RationalCharacter &x, int axis)
{
    const VariableSet &vars = x.vars();
    const Monomial t = var(vars, VariableSet::t(axis));
    RationalCharacter lhs = x * embed(LaurentPoly(vars, t.inverse()));
    return (lhs - x) * over(one(vars), {t.inverse()});
}

Substitution normal_shift(const VariableSet &vars, const EdgeData &edge, bool shift_t2)
{
    Substitution s(vars);
    const Monomial t1 = var(vars, VariableSet::t(1));
    if (shift_t2)
        s.set(VariableSet::t(2), {1, var(vars, VariableSet::t(2)) * t1.pow(-edge.normal_degree)});
    s.set(VariableSet::t(3), {1, var(vars, VariableSet::t(3)) * t1.pow(-edge.normal_degree_prime)});
    return s;
}

} // namespace

LaurentPoly edge_E(const RationalCharacter &g, const EdgeData &edge)
{
    return reduce_to_laurent(redistribute_t1(g, normal_shift(g.vars(), edge, true)));
}

RationalCharacter edge_E_triple(const RationalCharacter &g, const EdgeData &edge)
{
    RationalCharacter inner = redistribute_t1(g, normal_shift(g.vars(), edge, false));
    return redistribute_plain(inner, 2);
}

LaurentPoly edge_E_quad(const LaurentPoly &g)
{
    RationalCharacter x = redistribute_plain(embed(g), 1);
    x = redistribute_plain(x, 2);
    x = redistribute_plain(x, 3);
    return reduce_to_laurent(x);
}

} // namespace hft
