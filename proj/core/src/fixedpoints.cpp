#include <hft/error.hpp>
#include <hft/fixedpoints.hpp>

#include <numeric>

namespace hft
{

BoxTuple BoxTuple::empty(int rank)
{
    auto r = static_cast<std::size_t>(rank);
    return BoxTuple{rank, std::vector<int>(r, 0), std::vector<int>(r, 0)};
}

int BoxTuple::length() const
{
    return std::accumulate(alpha.begin(), alpha.end(), 0) + std::accumulate(beta.begin(), beta.end(), 0);
}

void BoxTuple::validate() const
{
    if (rank < 1)
        throw Error(ErrorKind::InvalidArgument, "box tuple rank must be at least 1");
    if (alpha.size() != static_cast<std::size_t>(rank) || beta.size() != static_cast<std::size_t>(rank))
        throw Error(ErrorKind::InvalidArgument, "box tuple length vectors must have one entry per frame summand");
    for (int x : alpha)
        if (x < 0)
            throw Error(ErrorKind::InvalidArgument, "negative cokernel length");
    for (int x : beta)
        if (x < 0)
            throw Error(ErrorKind::InvalidArgument, "negative cokernel length");
}

namespace
{

void compositions(int remaining, std::size_t slot, std::vector<int> &parts, std::vector<std::vector<int>> &out)
{
    if (slot + 1 == parts.size()) {
        parts[slot] = remaining;
        out.push_back(parts);
        return;
    }
    for (int x = 0; x <= remaining; ++x) {
        parts[slot] = x;
        compositions(remaining - x, slot + 1, parts, out);
    }
}

} // namespace

std::vector<BoxTuple> enumerate_fixed(int rank, int k)
{
    if (rank < 1)
        throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
    if (k < 0)
        throw Error(ErrorKind::InvalidArgument, "total length must be nonnegative");
    std::vector<std::vector<int>> parts_list;
    std::vector<int> parts(static_cast<std::size_t>(2 * rank), 0);
    compositions(k, 0, parts, parts_list);

    std::vector<BoxTuple> out;
    out.reserve(parts_list.size());
    for (const auto &p : parts_list) {
        BoxTuple b{rank, std::vector<int>(p.begin(), p.begin() + rank), std::vector<int>(p.begin() + rank, p.end())};
        out.push_back(std::move(b));
    }
    return out;
}

RationalCharacter leg_character(const BoxTuple &b, Chart chart)
{
    b.validate();
    VariableSet vars(b.rank);
    Monomial t1 = Monomial::variable(vars, VariableSet::t(1));
    LaurentPoly num(vars);
    for (int i = 1; i <= b.rank; ++i) {
        Monomial wi = Monomial::variable(vars, VariableSet::w(i));
        auto idx = static_cast<std::size_t>(i - 1);
        if (chart == Chart::alpha)
            num.add_term(wi * t1.pow(-b.alpha[idx]), 1);
        else
            num.add_term(wi * t1.pow(b.beta[idx]), 1);
    }
    Monomial pole = chart == Chart::alpha ? t1 : t1.inverse();
    return RationalCharacter(std::move(num), {pole});
}

namespace
{

std::vector<Monomial> torus_factors(const VariableSet &vars)
{
    return {Monomial::variable(vars, VariableSet::t(1)), Monomial::variable(vars, VariableSet::t(2)),
            Monomial::variable(vars, VariableSet::t(3))};
}

} // namespace

RationalCharacter char_from_poincare(const LaurentPoly &poincare, const LaurentPoly &correction)
{
    const VariableSet &vars = poincare.vars();
    return normalize(RationalCharacter(correction + poincare, torus_factors(vars)));
}

LaurentPoly poincare_from_char(const RationalCharacter &f, const LaurentPoly &correction)
{
    const VariableSet &vars = f.vars();
    LaurentPoly d = LaurentPoly::constant(vars, 1);
    for (const auto &m : torus_factors(vars)) {
        LaurentPoly factor = LaurentPoly::constant(vars, 1);
        factor.add_term(m, -1);
        d = d * factor;
    }
    return reduce_to_laurent(f * embed(d)) - correction;
}

} // namespace hft
