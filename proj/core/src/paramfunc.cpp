#include <hft/error.hpp>
#include <hft/paramfunc.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace hft
{

namespace
{

ParamPoly::Exponents unit(int params, int index)
{
    ParamPoly::Exponents e(static_cast<std::size_t>(params), 0);
    if (index >= 0)
        e[static_cast<std::size_t>(index)] = 1;
    return e;
}

void require_same(int a, int b)
{
    if (a != b)
        throw Error(ErrorKind::VariableSetMismatch, "functions over different parameter sets");
}

} // namespace

ParamPoly ParamPoly::constant(int parameter_count, const Rational &c)
{
    ParamPoly p(parameter_count);
    p.add_term(unit(parameter_count, -1), c);
    return p;
}

ParamPoly ParamPoly::of(const WeightForm &f)
{
    return of(LinearExpr::of(f));
}

ParamPoly ParamPoly::of(const LinearExpr &e)
{
    const int n = static_cast<int>(e.coefficients.size());
    ParamPoly p(n);
    for (int i = 0; i < n; ++i)
        p.add_term(unit(n, i), e.coefficients[static_cast<std::size_t>(i)]);
    p.add_term(unit(n, -1), e.constant);
    return p;
}

bool ParamPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                                terms_.begin()->first.end(),
                                                                [](int x) { return x == 0; }));
}

Rational ParamPoly::constant_term() const
{
    auto it = terms_.find(unit(params_, -1));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::leading_coefficient() const
{
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int ParamPoly::total_degree() const
{
    int d = -1;
    for (const auto &[e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool ParamPoly::is_homogeneous() const
{
    int d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto &t) { return std::accumulate(t.first.begin(), t.first.end(), 0) == d; });
}

void ParamPoly::add_term(const Exponents &e, const Rational &c)
{
    if (static_cast<int>(e.size()) != params_)
        throw Error(ErrorKind::VariableSetMismatch, "exponent vector has the wrong length");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

ParamPoly &ParamPoly::operator+=(const ParamPoly &o)
{
    require_same(params_, o.params_);
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

ParamPoly &ParamPoly::operator-=(const ParamPoly &o)
{
    require_same(params_, o.params_);
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly &o) const
{
    ParamPoly r(*this);
    return r += o;
}

ParamPoly ParamPoly::operator-(const ParamPoly &o) const
{
    ParamPoly r(*this);
    return r -= o;
}

ParamPoly ParamPoly::operator*(const ParamPoly &o) const
{
    require_same(params_, o.params_);
    ParamPoly r(params_);
    Exponents e(static_cast<std::size_t>(params_));
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

ParamPoly ParamPoly::operator*(const Rational &c) const
{
    ParamPoly r(params_);
    if (c == 0)
        return r;
    r.terms_ = terms_;
    for (auto &[e, x] : r.terms_)
        x *= c;
    return r;
}

ParamPoly ParamPoly::times(const WeightForm &f) const
{
    require_same(params_, f.size());
    // Shifting every exponent by one unit vector preserves the order, so the
    // partial products are sorted streams; merge them largest first.
    struct Stream {
        int index;
        Rational coefficient;
        TermMap::const_iterator at;
        Exponents head;
    };
    std::vector<Stream> streams;
    for (int i = -1; i < params_; ++i) {
        const Integer &a = i < 0 ? f.constant() : f.coefficient(i);
        if (a != 0 && !terms_.empty())
            streams.push_back({i, Rational(a), terms_.begin(), {}});
    }
    auto load = [](Stream &s) {
        s.head = s.at->first;
        if (s.index >= 0)
            ++s.head[static_cast<std::size_t>(s.index)];
    };
    for (auto &s : streams)
        load(s);

    ParamPoly r(params_);
    Rational c;
    while (!streams.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < streams.size(); ++k)
            if (streams[k].head > streams[best].head)
                best = k;
        Exponents e = streams[best].head;
        c = 0;
        for (std::size_t k = 0; k < streams.size();) {
            Stream &s = streams[k];
            if (s.head != e) {
                ++k;
                continue;
            }
            c += s.at->second * s.coefficient;
            if (++s.at == terms_.end()) {
                streams.erase(streams.begin() + static_cast<std::ptrdiff_t>(k));
                continue;
            }
            load(s);
            ++k;
        }
        if (c != 0)
            r.terms_.emplace_hint(r.terms_.end(), std::move(e), c);
    }
    return r;
}

Rational ParamPoly::evaluate(const std::vector<Rational> &point) const
{
    if (static_cast<int>(point.size()) != params_)
        throw Error(ErrorKind::InvalidArgument, "evaluation point has the wrong number of parameters");
    Rational v = 0;
    for (const auto &[e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                t *= point[i];
        v += t;
    }
    return v;
}

ParamPoly ParamPoly::specialize(const Specialization &sp) const
{
    if (sp.is_identity())
        return *this;
    std::vector<std::vector<ParamPoly>> powers(static_cast<std::size_t>(params_));
    for (int i = 0; i < params_; ++i) {
        LinearExpr x;
        x.coefficients.assign(static_cast<std::size_t>(params_), Rational(0));
        x.coefficients[static_cast<std::size_t>(i)] = 1;
        powers[static_cast<std::size_t>(i)].push_back(constant(params_, 1));
        powers[static_cast<std::size_t>(i)].push_back(of(sp.apply(x)));
    }
    auto power = [&powers](int i, int k) -> const ParamPoly & {
        auto &list = powers[static_cast<std::size_t>(i)];
        while (static_cast<int>(list.size()) <= k)
            list.push_back(list.back() * list[1]);
        return list[static_cast<std::size_t>(k)];
    };
    ParamPoly r(params_);
    for (const auto &[e, c] : terms_) {
        ParamPoly t = constant(params_, c);
        for (int i = 0; i < params_; ++i)
            if (e[static_cast<std::size_t>(i)] > 0)
                t = t * power(i, e[static_cast<std::size_t>(i)]);
        r += t;
    }
    return r;
}

std::optional<ParamPoly> ParamPoly::divide(const WeightForm &f) const
{
    require_same(params_, f.size());
    const int x = f.leading_index();
    if (x < 0)
        throw Error(ErrorKind::InvalidArgument, "division by a constant form");
    const auto xi = static_cast<std::size_t>(x);
    const Rational a = f.coefficient(x);
    WeightForm rest_form = f;
    {
        std::vector<Integer> c = f.coefficients();
        c[xi] = 0;
        rest_form = WeightForm(std::move(c), f.constant());
    }
    const ParamPoly rest = of(rest_form);

    // Coefficients of x^k, each free of x.
    std::map<int, ParamPoly> by_degree;
    for (const auto &[e, c] : terms_) {
        Exponents stripped = e;
        stripped[xi] = 0;
        by_degree.try_emplace(e[xi], params_).first->second.add_term(stripped, c);
    }
    if (by_degree.empty())
        return ParamPoly(params_);

    ParamPoly quotient(params_);
    const int top = by_degree.rbegin()->first;
    for (int k = top; k >= 1; --k) {
        auto it = by_degree.find(k);
        if (it == by_degree.end() || it->second.is_zero())
            continue;
        ParamPoly q = it->second * (Rational(1) / a);
        by_degree.try_emplace(k - 1, params_).first->second -= rest * q;
        for (const auto &[e, c] : q.terms_) {
            Exponents shifted = e;
            shifted[xi] = k - 1;
            quotient.add_term(shifted, c);
        }
    }
    auto low = by_degree.find(0);
    if (low != by_degree.end() && !low->second.is_zero())
        return std::nullopt;
    return quotient;
}

std::string to_string(const ParamPoly &p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto &[e, c] : p.terms()) {
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += parameter_name(static_cast<int>(i));
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else
            out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    }
    return out;
}

ParamFunction::ParamFunction(int parameter_count, Rational scalar)
    : scalar_(std::move(scalar)), residual_(ParamPoly::constant(parameter_count, 1))
{
}

ParamFunction::ParamFunction(const WeightFunction &f)
    : scalar_(f.scalar()), num_(f.numerator()), residual_(ParamPoly::constant(f.parameter_count(), 1)),
      den_(f.denominator())
{
}

ParamFunction::ParamFunction(Rational scalar, std::vector<WeightForm> num, ParamPoly residual,
                             std::vector<WeightForm> den)
    : scalar_(std::move(scalar)), num_(std::move(num)), residual_(std::move(residual)), den_(std::move(den))
{
    for (const auto &f : num_)
        require_same(f.size(), residual_.parameter_count());
    for (const auto &f : den_)
        require_same(f.size(), residual_.parameter_count());
    canonicalize();
}

namespace
{

std::vector<WeightForm> forms_minus(const std::vector<WeightForm> &a, const std::vector<WeightForm> &b)
{
    std::vector<WeightForm> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<WeightForm> forms_common(const std::vector<WeightForm> &a, const std::vector<WeightForm> &b)
{
    std::vector<WeightForm> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<WeightForm> forms_union(const std::vector<WeightForm> &a, const std::vector<WeightForm> &b)
{
    std::vector<WeightForm> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Arithmetic modulo the prime 2^61 - 1.
constexpr std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;
__extension__ using uint128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b)
{
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % modulus);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1)
            r = mul_mod(r, a);
    return r;
}

std::uint64_t reduce_mod(const Integer &z)
{
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(modulus));
}

// False when p is certainly not divisible by f: p is evaluated modulo a
// prime at a point of the hyperplane f = 0, where every multiple of f
// vanishes. A nonzero residue proves p(point) != 0.
bool may_divide(const ParamPoly &p, const WeightForm &f)
{
    const int x = f.leading_index();
    const std::uint64_t lead = reduce_mod(f.coefficient(x));
    if (lead == 0)
        return true;
    std::vector<std::uint64_t> point(static_cast<std::size_t>(f.size()));
    std::uint64_t rest = reduce_mod(f.constant());
    for (int i = 0; i < f.size(); ++i) {
        if (i == x)
            continue;
        point[static_cast<std::size_t>(i)] = 1000003 + 7919 * static_cast<std::uint64_t>(i) * (i + 3);
        rest = (rest + mul_mod(reduce_mod(f.coefficient(i)), point[static_cast<std::size_t>(i)])) % modulus;
    }
    point[static_cast<std::size_t>(x)] = mul_mod(modulus - rest, pow_mod(lead, modulus - 2));

    std::vector<std::vector<std::uint64_t>> powers(point.size());
    std::uint64_t value = 0;
    for (const auto &[e, c] : p.terms()) {
        std::uint64_t den = reduce_mod(c.get_den());
        if (den == 0)
            return true;
        std::uint64_t t = reduce_mod(c.get_num());
        if (den != 1)
            t = mul_mod(t, pow_mod(den, modulus - 2));
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto &pw = powers[i];
            if (pw.empty())
                pw.push_back(1);
            while (static_cast<int>(pw.size()) <= e[i])
                pw.push_back(mul_mod(pw.back(), point[i]));
            t = mul_mod(t, pw[static_cast<std::size_t>(e[i])]);
        }
        value = (value + t) % modulus;
    }
    return value == 0;
}

// p times each form in turn; cheaper than expanding the product first.
ParamPoly times_forms(ParamPoly p, const std::vector<WeightForm> &forms)
{
    for (const auto &f : forms)
        p = p.times(f);
    return p;
}

} // namespace

void ParamFunction::canonicalize(const std::vector<WeightForm> &extra_candidates)
{
    const int params = residual_.parameter_count();
    auto make_zero = [&] {
        scalar_ = 0;
        num_.clear();
        den_.clear();
        residual_ = ParamPoly::constant(params, 1);
    };

    std::vector<WeightForm> den;
    for (const auto &f : den_) {
        if (f.is_zero())
            throw Error(ErrorKind::DivisionByZero, "denominator factor is zero");
        if (f.is_constant()) {
            scalar_ /= Rational(f.constant());
            continue;
        }
        scalar_ /= Rational(f.content());
        den.push_back(f.primitive());
    }
    if (scalar_ == 0 || residual_.is_zero())
        return make_zero();
    std::vector<WeightForm> num;
    for (const auto &f : num_) {
        if (f.is_zero())
            return make_zero();
        if (f.is_constant()) {
            scalar_ *= Rational(f.constant());
            continue;
        }
        scalar_ *= Rational(f.content());
        num.push_back(f.primitive());
    }

    if (!residual_.is_constant()) {
        // Cancel denominator forms dividing the residual, then pull out any
        // candidate forms it still contains.
        for (auto it = den.begin(); it != den.end() && !residual_.is_constant();) {
            if (!may_divide(residual_, *it)) {
                ++it;
            } else if (auto q = residual_.divide(*it)) {
                residual_ = std::move(*q);
                it = den.erase(it);
            } else {
                ++it;
            }
        }
        for (const auto &c : extra_candidates) {
            if (c.is_constant())
                continue;
            WeightForm f = c.primitive();
            while (!residual_.is_constant() && may_divide(residual_, f)) {
                auto q = residual_.divide(f);
                if (!q)
                    break;
                residual_ = std::move(*q);
                num.push_back(f);
            }
        }
        if (residual_.total_degree() == 1) {
            // A linear residual is itself a form.
            LinearExpr e;
            e.coefficients.assign(static_cast<std::size_t>(params), Rational(0));
            for (const auto &[exps, c] : residual_.terms()) {
                auto it = std::find(exps.begin(), exps.end(), 1);
                if (it == exps.end())
                    e.constant = c;
                else
                    e.coefficients[static_cast<std::size_t>(it - exps.begin())] = c;
            }
            auto [scale, form] = clear_denominators(e);
            scalar_ *= scale * Rational(form.content());
            num.push_back(form.primitive());
            residual_ = ParamPoly::constant(params, 1);
        }
    }
    Rational lead = residual_.leading_coefficient();
    scalar_ *= lead;
    residual_ = residual_ * (Rational(1) / lead);

    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    auto common = forms_common(num, den);
    num_ = forms_minus(num, common);
    den_ = forms_minus(den, common);
}

std::optional<WeightFunction> ParamFunction::as_weight_function() const
{
    if (!residual_.is_constant())
        return std::nullopt;
    return WeightFunction(parameter_count(), scalar_ * residual_.constant_term(), num_, den_);
}

bool ParamFunction::is_homogeneous() const
{
    auto homog = [](const WeightForm &f) { return f.constant() == 0; };
    return std::all_of(num_.begin(), num_.end(), homog) && std::all_of(den_.begin(), den_.end(), homog) &&
           residual_.is_homogeneous();
}

int ParamFunction::degree() const
{
    return static_cast<int>(num_.size()) + residual_.total_degree() - static_cast<int>(den_.size());
}

Rational ParamFunction::evaluate(const std::vector<Rational> &point) const
{
    Rational v = scalar_;
    if (v == 0)
        return v;
    for (const auto &f : den_) {
        Rational x = f.evaluate(point);
        if (x == 0)
            throw Error(ErrorKind::DivisionByZero, "denominator factor " + to_string(f) + " vanishes");
        v /= x;
    }
    for (const auto &f : num_)
        v *= f.evaluate(point);
    return v * residual_.evaluate(point);
}

ParamFunction ParamFunction::specialize(const Specialization &sp, const std::string &where) const
{
    if (sp.is_identity())
        return *this;
    Rational scalar = scalar_;
    std::vector<WeightForm> num, den;
    for (const auto &x : den_) {
        auto [s, g] = sp.apply(x);
        if (g.is_zero())
            throw Error(ErrorKind::DivisionByZero,
                        "denominator factor " + to_string(x) + " vanishes under " + sp.text() +
                            (where.empty() ? "" : " at " + where),
                        where);
        scalar /= s;
        den.push_back(std::move(g));
    }
    for (const auto &x : num_) {
        auto [s, g] = sp.apply(x);
        scalar *= s;
        num.push_back(std::move(g));
    }
    ParamFunction r(parameter_count(), scalar);
    r.num_ = num;
    r.den_ = std::move(den);
    r.residual_ = residual_.specialize(sp);
    r.canonicalize(num);
    return r;
}

ParamFunction ParamFunction::operator+(const ParamFunction &o) const
{
    require_same(parameter_count(), o.parameter_count());
    return sum({*this, o}, parameter_count());
}

ParamFunction sum(const std::vector<ParamFunction> &terms, int parameter_count)
{
    std::vector<const ParamFunction *> live;
    for (const auto &t : terms) {
        require_same(parameter_count, t.parameter_count());
        if (!t.is_zero())
            live.push_back(&t);
    }
    if (live.empty())
        return ParamFunction(parameter_count, 0);
    if (live.size() == 1)
        return *live.front();

    std::vector<WeightForm> den = live.front()->den_, common = live.front()->num_;
    for (const auto *t : live) {
        den = forms_union(den, t->den_);
        common = forms_common(common, t->num_);
    }
    ParamPoly total(parameter_count);
    std::vector<WeightForm> candidates;
    for (const auto *t : live) {
        std::vector<WeightForm> own = forms_minus(t->num_, common);
        candidates = forms_union(candidates, own);
        std::vector<WeightForm> factors = forms_minus(den, t->den_);
        factors.insert(factors.end(), own.begin(), own.end());
        total += times_forms(t->residual_ * t->scalar_, factors);
    }

    ParamFunction r(parameter_count, 1);
    r.num_ = std::move(common);
    r.residual_ = std::move(total);
    r.den_ = std::move(den);
    r.canonicalize(candidates);
    return r;
}

ParamFunction ParamFunction::operator-() const
{
    return *this * Rational(-1);
}

ParamFunction ParamFunction::operator-(const ParamFunction &o) const
{
    return *this + (-o);
}

ParamFunction ParamFunction::operator*(const ParamFunction &o) const
{
    require_same(parameter_count(), o.parameter_count());
    std::vector<WeightForm> num(num_), den(den_);
    num.insert(num.end(), o.num_.begin(), o.num_.end());
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return ParamFunction(scalar_ * o.scalar_, std::move(num), residual_ * o.residual_, std::move(den));
}

ParamFunction ParamFunction::operator*(const Rational &c) const
{
    ParamFunction r(*this);
    r.scalar_ *= c;
    if (c == 0)
        r.canonicalize();
    return r;
}

bool ParamFunction::same_representation(const ParamFunction &o) const
{
    return scalar_ == o.scalar_ && num_ == o.num_ && den_ == o.den_ && residual_ == o.residual_;
}

std::string to_string(const ParamFunction &f)
{
    std::string out = f.scalar().get_str();
    for (const auto &x : f.numerator())
        out += "*(" + to_string(x) + ")";
    if (!f.residual().is_constant())
        out += "*(" + to_string(f.residual()) + ")";
    if (!f.denominator().empty()) {
        out += "/(";
        for (std::size_t i = 0; i < f.denominator().size(); ++i)
            out += (i ? "*(" : "(") + to_string(f.denominator()[i]) + ")";
        out += ")";
    }
    return out;
}

} // namespace hft
