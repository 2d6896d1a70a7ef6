#include <hft/charring.hpp>
#include <hft/error.hpp>

#include <algorithm>
#include <numeric>
#include <tuple>

namespace hft
{

namespace
{

void require_same(const VariableSet &a, const VariableSet &b)
{
    if (!(a == b))
        throw Error(ErrorKind::VariableSetMismatch,
                    "operands have " + std::to_string(a.frame_count()) + " and " +
                        std::to_string(b.frame_count()) + " frame variables");
}

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

LaurentPoly one_minus(const VariableSet &vars, const Monomial &m)
{
    LaurentPoly p = LaurentPoly::constant(vars, 1);
    p.add_term(m, -1);
    return p;
}

} // namespace

VariableSet::VariableSet(int frame_count) : frame_count_(frame_count)
{
    if (frame_count < 1)
        throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
}

std::string VariableSet::name(int index) const
{
    if (index < torus_count)
        return "t" + std::to_string(index + 1);
    return "w" + std::to_string(index - torus_count + 1);
}

Monomial Monomial::one(const VariableSet &vars)
{
    return Monomial(Exponents(static_cast<std::size_t>(vars.size()), 0));
}

Monomial Monomial::variable(const VariableSet &vars, int index, int power)
{
    auto e = Exponents(static_cast<std::size_t>(vars.size()), 0);
    e.at(static_cast<std::size_t>(index)) = power;
    return Monomial(std::move(e));
}

int Monomial::degree() const noexcept
{
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_one() const noexcept
{
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_positive() const noexcept
{
    int d = degree();
    if (d != 0)
        return d > 0;
    for (int e : exps_)
        if (e != 0)
            return e > 0;
    return false;
}

Monomial Monomial::operator*(const Monomial &other) const
{
    Exponents e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::inverse() const
{
    return pow(-1);
}

Monomial Monomial::pow(int k) const
{
    Exponents e(exps_);
    for (int &x : e)
        x *= k;
    return Monomial(std::move(e));
}

bool GrlexDescending::operator()(const Monomial &a, const Monomial &b) const noexcept
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    return a.exponents() > b.exponents();
}

LaurentPoly::LaurentPoly(VariableSet vars, const Monomial &m, const Rational &c) : vars_(vars)
{
    add_term(m, c);
}

LaurentPoly LaurentPoly::constant(VariableSet vars, const Rational &c)
{
    return LaurentPoly(vars, Monomial::one(vars), c);
}

LaurentPoly LaurentPoly::variable(VariableSet vars, int index, int power)
{
    return LaurentPoly(vars, Monomial::variable(vars, index, power));
}

Rational LaurentPoly::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::coefficient_sum() const
{
    Rational s = 0;
    for (const auto &[m, c] : terms_)
        s += c;
    return s;
}

void LaurentPoly::add_term(const Monomial &m, const Rational &c)
{
    if (m.size() != vars_.size())
        throw Error(ErrorKind::VariableSetMismatch, "monomial length does not match the variable set");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other)
{
    require_same(vars_, other.vars_);
    for (const auto &[m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other)
{
    require_same(vars_, other.vars_);
    for (const auto &[m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, x] : terms_)
        x *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(*this);
    return r *= -1;
}

LaurentPoly LaurentPoly::times(const Monomial &m) const
{
    LaurentPoly r(vars_);
    for (const auto &[a, c] : terms_)
        r.terms_.emplace(a * m, c);
    return r;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    require_same(a.vars_, b.vars_);
    LaurentPoly r(a.vars_);
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

LaurentPoly bar(const LaurentPoly &p)
{
    LaurentPoly r(p.vars());
    for (const auto &[m, c] : p.terms())
        r.add_term(m.inverse(), c);
    return r;
}

LaurentPoly frame_sum(const VariableSet &vars)
{
    LaurentPoly r(vars);
    for (int j = 1; j <= vars.frame_count(); ++j)
        r.add_term(Monomial::variable(vars, VariableSet::w(j)), 1);
    return r;
}

LaurentPoly frame_dual_sum(const VariableSet &vars)
{
    return bar(frame_sum(vars));
}

RationalCharacter::RationalCharacter(LaurentPoly numerator, std::vector<Monomial> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    for (const auto &m : den_) {
        if (m.size() != num_.vars().size())
            throw Error(ErrorKind::VariableSetMismatch, "denominator monomial length does not match");
        if (m.is_one())
            throw Error(ErrorKind::InvalidDenominator, "denominator factor (1 - 1) is zero");
    }
}

std::optional<LaurentPoly> divide_by_one_minus(const LaurentPoly &p, const Monomial &m)
{
    const auto &e = m.exponents();
    auto lead = std::find_if(e.begin(), e.end(), [](int x) { return x != 0; });
    if (lead == e.end())
        return std::nullopt;
    auto j = static_cast<std::size_t>(lead - e.begin());
    int step = e[j];

    // Terms fall into cosets a + Z*e; (1 - m) acts on each coset as a first
    // difference along the coset, so the quotient is a prefix sum. It is exact
    // iff every coset sums to zero, which is checked before building anything.
    struct Entry {
        Monomial::Exponents base;
        int k;
        const Rational *c;
    };
    std::vector<Entry> entries;
    entries.reserve(p.size());
    for (const auto &[a, c] : p.terms()) {
        int aj = a[static_cast<int>(j)];
        int k = step > 0 ? floor_div(aj, step) : -floor_div(aj, -step);
        Monomial::Exponents base = a.exponents();
        for (std::size_t i = 0; i < base.size(); ++i)
            base[i] -= k * e[i];
        entries.push_back({std::move(base), k, &c});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry &x, const Entry &y) { return std::tie(x.base, x.k) < std::tie(y.base, y.k); });

    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t lo = 0; lo < entries.size();) {
        std::size_t hi = lo;
        Rational total = 0;
        while (hi < entries.size() && entries[hi].base == entries[lo].base)
            total += *entries[hi++].c;
        if (total != 0)
            return std::nullopt;
        groups.emplace_back(lo, hi);
        lo = hi;
    }

    LaurentPoly q(p.vars());
    for (auto [lo, hi] : groups) {
        Rational run = 0;
        int k = entries[lo].k;
        int kmax = entries[hi - 1].k;
        Monomial b = Monomial(entries[lo].base) * m.pow(k);
        for (std::size_t i = lo; k < kmax; ++k) {
            if (entries[i].k == k)
                run += *entries[i++].c;
            q.add_term(b, run);
            b = b * m;
        }
    }
    return q;
}

RationalCharacter normalize(const RationalCharacter &x)
{
    const VariableSet &vars = x.vars();
    LaurentPoly num = x.numerator();
    std::vector<Monomial> den;
    den.reserve(x.denominator().size());
    for (const auto &m : x.denominator()) {
        if (m.is_positive()) {
            den.push_back(m);
        } else {
            // 1/(1-m) = -m^-1/(1-m^-1)
            Monomial inv = m.inverse();
            num = -num.times(inv);
            den.push_back(inv);
        }
    }
    if (num.is_zero())
        return RationalCharacter(LaurentPoly(vars));

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = den.begin(); it != den.end(); ++it) {
            if (auto q = divide_by_one_minus(num, *it)) {
                num = std::move(*q);
                den.erase(it);
                changed = true;
                break;
            }
        }
    }
    std::sort(den.begin(), den.end(), GrlexDescending{});
    return RationalCharacter(std::move(num), std::move(den));
}

LaurentPoly reduce_to_laurent(const RationalCharacter &x)
{
    RationalCharacter n = normalize(x);
    if (!n.is_laurent())
        throw Error(ErrorKind::NotPolynomial, "character does not reduce to a Laurent polynomial", to_string(n));
    return n.numerator();
}

RationalCharacter embed(const LaurentPoly &p)
{
    return RationalCharacter(p);
}

namespace
{

// Multiset difference `have` minus `take`, both sorted.
std::vector<Monomial> multiset_minus(const std::vector<Monomial> &have, const std::vector<Monomial> &take)
{
    std::vector<Monomial> out;
    std::set_difference(have.begin(), have.end(), take.begin(), take.end(), std::back_inserter(out),
                        GrlexDescending{});
    return out;
}

LaurentPoly product_of_factors(const VariableSet &vars, const std::vector<Monomial> &factors)
{
    LaurentPoly p = LaurentPoly::constant(vars, 1);
    for (const auto &m : factors)
        p = p * one_minus(vars, m);
    return p;
}

} // namespace

RationalCharacter combine(const RationalCharacter &a, const RationalCharacter &b, CombineOp op)
{
    require_same(a.vars(), b.vars());
    const VariableSet &vars = a.vars();
    RationalCharacter na = normalize(a);
    RationalCharacter nb = normalize(b);

    if (op == CombineOp::mul) {
        std::vector<Monomial> den(na.denominator());
        den.insert(den.end(), nb.denominator().begin(), nb.denominator().end());
        return normalize(RationalCharacter(na.numerator() * nb.numerator(), std::move(den)));
    }

    // Least common multiple of the two factor multisets.
    std::vector<Monomial> only_b = multiset_minus(nb.denominator(), na.denominator());
    std::vector<Monomial> only_a = multiset_minus(na.denominator(), nb.denominator());
    std::vector<Monomial> den(na.denominator());
    den.insert(den.end(), only_b.begin(), only_b.end());

    LaurentPoly lhs = na.numerator() * product_of_factors(vars, only_b);
    LaurentPoly rhs = nb.numerator() * product_of_factors(vars, only_a);
    LaurentPoly num = op == CombineOp::add ? lhs + rhs : lhs - rhs;
    return normalize(RationalCharacter(std::move(num), std::move(den)));
}

RationalCharacter sum(const std::vector<RationalCharacter> &terms)
{
    if (terms.empty())
        throw Error(ErrorKind::InvalidArgument, "sum of no characters has no variable set");
    const VariableSet &vars = terms.front().vars();
    std::vector<RationalCharacter> parts;
    parts.reserve(terms.size());
    std::vector<Monomial> den;
    for (const auto &t : terms) {
        require_same(vars, t.vars());
        parts.push_back(normalize(t));
        std::vector<Monomial> extra = multiset_minus(parts.back().denominator(), den);
        den.insert(den.end(), extra.begin(), extra.end());
        std::sort(den.begin(), den.end(), GrlexDescending{});
    }
    LaurentPoly num(vars);
    for (const auto &x : parts)
        num += x.numerator() * product_of_factors(vars, multiset_minus(den, x.denominator()));
    return normalize(RationalCharacter(std::move(num), std::move(den)));
}

RationalCharacter operator+(const RationalCharacter &a, const RationalCharacter &b)
{
    return combine(a, b, CombineOp::add);
}

RationalCharacter operator-(const RationalCharacter &a, const RationalCharacter &b)
{
    return combine(a, b, CombineOp::sub);
}

RationalCharacter operator*(const RationalCharacter &a, const RationalCharacter &b)
{
    return combine(a, b, CombineOp::mul);
}

RationalCharacter operator-(const RationalCharacter &a)
{
    return normalize(RationalCharacter(-a.numerator(), a.denominator()));
}

RationalCharacter bar(const RationalCharacter &x)
{
    std::vector<Monomial> den;
    for (const auto &m : x.denominator())
        den.push_back(m.inverse());
    return normalize(RationalCharacter(bar(x.numerator()), std::move(den)));
}

bool equivalent(const RationalCharacter &a, const RationalCharacter &b)
{
    require_same(a.vars(), b.vars());
    return a.numerator() * product_of_factors(a.vars(), b.denominator()) ==
           b.numerator() * product_of_factors(b.vars(), a.denominator());
}

Substitution::Substitution(VariableSet vars) : vars_(vars)
{
    for (int i = 0; i < vars.size(); ++i)
        images_.push_back(SignedMonomial{1, Monomial::variable(vars, i)});
}

Substitution Substitution::chart_change(VariableSet vars)
{
    Substitution s(vars);
    const int t1 = VariableSet::t(1);
    Monomial m1 = Monomial::variable(vars, t1);
    s.set(t1, {1, m1.inverse()});
    s.set(VariableSet::t(2), {1, Monomial::variable(vars, VariableSet::t(2)) * m1});
    s.set(VariableSet::t(3), {1, Monomial::variable(vars, VariableSet::t(3)) * m1});
    return s;
}

Substitution &Substitution::set(int variable, SignedMonomial image)
{
    if (variable < 0 || variable >= vars_.size())
        throw Error(ErrorKind::InvalidArgument, "substitution variable out of range");
    if (image.sign == 0)
        throw Error(ErrorKind::InvalidReplacement, vars_.name(variable) + " replaced by zero");
    if (image.sign != 1 && image.sign != -1)
        throw Error(ErrorKind::InvalidReplacement, "replacement sign must be +1 or -1");
    if (image.monomial.size() != vars_.size())
        throw Error(ErrorKind::VariableSetMismatch, "replacement monomial length does not match");
    images_[static_cast<std::size_t>(variable)] = std::move(image);
    return *this;
}

SignedMonomial Substitution::image(int variable) const
{
    return images_.at(static_cast<std::size_t>(variable));
}

namespace
{

SignedMonomial apply(const Monomial &a, const Substitution &map)
{
    const VariableSet &vars = map.vars();
    SignedMonomial out{1, Monomial::one(vars)};
    for (int i = 0; i < vars.size(); ++i) {
        int e = a[i];
        if (e == 0)
            continue;
        const SignedMonomial img = map.image(i);
        out.monomial = out.monomial * img.monomial.pow(e);
        if (img.sign < 0 && (e % 2 != 0))
            out.sign = -out.sign;
    }
    return out;
}

} // namespace

LaurentPoly substitute(const LaurentPoly &p, const Substitution &map)
{
    require_same(p.vars(), map.vars());
    LaurentPoly r(p.vars());
    for (const auto &[a, c] : p.terms()) {
        SignedMonomial s = apply(a, map);
        r.add_term(s.monomial, s.sign > 0 ? c : Rational(-c));
    }
    return r;
}

RationalCharacter substitute(const RationalCharacter &x, const Substitution &map)
{
    const VariableSet &vars = x.vars();
    LaurentPoly num = substitute(x.numerator(), map);
    std::vector<Monomial> den;
    for (const auto &m : x.denominator()) {
        SignedMonomial s = apply(m, map);
        if (s.sign > 0) {
            if (s.monomial.is_one())
                throw Error(ErrorKind::InvalidReplacement,
                            "denominator factor (1-" + to_string(m, vars) + ") maps to zero");
            den.push_back(s.monomial);
        } else if (s.monomial.is_one()) {
            num *= Rational(1, 2);
        } else {
            // 1/(1+M) = (1-M)/(1-M^2)
            num = num * one_minus(vars, s.monomial);
            den.push_back(s.monomial.pow(2));
        }
    }
    return normalize(RationalCharacter(std::move(num), std::move(den)));
}

std::string to_string(const Monomial &m, const VariableSet &vars)
{
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += vars.name(i) + "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const LaurentPoly &p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        out += mag.get_str();
        if (!m.is_one())
            out += "*" + to_string(m, p.vars());
    }
    return out;
}

std::string to_string(const RationalCharacter &x)
{
    std::string out = "(" + to_string(x.numerator()) + ")";
    if (x.is_laurent())
        return out;
    out += "/(";
    for (std::size_t i = 0; i < x.denominator().size(); ++i) {
        if (i)
            out += '*';
        out += "(1-" + to_string(x.denominator()[i], x.vars()) + ")";
    }
    return out + ")";
}

} // namespace hft
