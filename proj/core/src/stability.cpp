#include <hft/error.hpp>
#include <hft/stability.hpp>

#include <algorithm>

namespace hft
{

HilbertPoly::HilbertPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients))
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational HilbertPoly::coefficient(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational HilbertPoly::leading() const
{
    return c_.empty() ? Rational(0) : c_.back();
}

Rational HilbertPoly::evaluate(const Rational &m) const
{
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        v = v * m + *it;
    return v;
}

HilbertPoly HilbertPoly::operator+(const HilbertPoly &o) const
{
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coefficient(static_cast<int>(i)) + o.coefficient(static_cast<int>(i));
    return HilbertPoly(std::move(r));
}

HilbertPoly HilbertPoly::operator-(const HilbertPoly &o) const
{
    return *this + o * Rational(-1);
}

HilbertPoly HilbertPoly::operator*(const Rational &s) const
{
    std::vector<Rational> r(c_);
    for (auto &x : r)
        x *= s;
    return HilbertPoly(std::move(r));
}

std::string to_string(const HilbertPoly &p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coefficient(i);
        if (c == 0)
            continue;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        Rational mag = abs(c);
        std::string mono = i == 0 ? "" : (i == 1 ? "m" : "m^" + std::to_string(i));
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

Ordering poly_compare_asymptotic(const HilbertPoly &p, const HilbertPoly &q)
{
    HilbertPoly d = p - q;
    if (d.is_zero())
        return Ordering::equal;
    return d.leading() > 0 ? Ordering::greater : Ordering::less;
}

void validate_model(const FrozenTripleModel &model)
{
    if (model.rank_E < 1)
        throw Error(ErrorKind::InvalidModel, "rank_E must be at least 1");
    if (model.sheaf.degree() != 1 || model.sheaf.leading() <= 0)
        throw Error(ErrorKind::InvalidModel,
                    "P_F must be linear with positive leading coefficient, got " + to_string(model.sheaf));
    if (poly_compare_asymptotic(model.image, model.sheaf) == Ordering::greater)
        throw Error(ErrorKind::InvalidModel, "P_Im exceeds P_F asymptotically");
    if (model.image.rank() < 0 || model.image.degree() > 1)
        throw Error(ErrorKind::InvalidModel, "P_Im must have degree at most 1 and nonnegative rank");
}

namespace
{

void check_parameter(const HilbertPoly &q)
{
    if (q.is_zero() || q.leading() <= 0)
        throw Error(ErrorKind::InvalidStabilityParameter, "q(m) must have positive leading coefficient");
}

// Strict inequality for one subobject G of F, cross-multiplied by the ranks.
bool subobject_ok(const FrozenTripleModel &model, const Subobject &g, const HilbertPoly &q)
{
    const HilbertPoly &pf = model.sheaf;
    Rational rk_f = pf.rank();
    Rational rk_g = g.hilbert.rank();
    HilbertPoly rhs = (pf + q) * rk_g;
    if (g.factors_through) {
        HilbertPoly lhs = q * rk_f + g.hilbert * rk_f - rhs;
        return poly_compare_asymptotic(lhs, HilbertPoly{}) == Ordering::less;
    }
    return poly_compare_asymptotic(g.hilbert * rk_f, rhs) == Ordering::less;
}

} // namespace

bool tau_stability_check(const FrozenTripleModel &model, const HilbertPoly &q)
{
    check_parameter(q);
    validate_model(model);
    for (const auto &g : model.subobjects) {
        if (g.hilbert == model.sheaf)
            continue; // not a proper subobject
        if (!subobject_ok(model, g, q))
            return false;
    }
    return true;
}

LimitVerdict limit_stable_equiv(const FrozenTripleModel &model, const HilbertPoly &q)
{
    check_parameter(q);
    if (q.degree() < 2)
        throw Error(ErrorKind::InvalidStabilityParameter, "limit stability needs deg q >= 2");
    validate_model(model);
    FrozenTripleModel image_only{model.rank_E, model.sheaf, model.image, {{model.image, true}}};
    LimitVerdict v;
    v.stable = tau_stability_check(image_only, q);
    v.cokernel_zero_dim = model.image.rank() == model.sheaf.rank();
    return v;
}

} // namespace hft
