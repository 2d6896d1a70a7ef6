#include <hft/error.hpp>
#include <hft/io.hpp>
#include <hft/localize.hpp>
#include <hft/vertexcalc.hpp>

#include <algorithm>
#include <cctype>

namespace hft
{

std::string parameter_name(int index)
{
    if (index < VariableSet::torus_count)
        return "s" + std::to_string(index + 1);
    return "v" + std::to_string(index - VariableSet::torus_count + 1);
}

WeightForm::WeightForm(std::vector<Integer> coefficients, Integer constant)
    : coeffs_(std::move(coefficients)), constant_(std::move(constant))
{
}

WeightForm WeightForm::of_monomial(const Monomial &m)
{
    std::vector<Integer> c;
    c.reserve(static_cast<std::size_t>(m.size()));
    for (int e : m.exponents())
        c.emplace_back(e);
    return WeightForm(std::move(c));
}

bool WeightForm::is_constant() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &x) { return x == 0; });
}

bool WeightForm::is_zero() const
{
    return is_constant() && constant_ == 0;
}

int WeightForm::leading_index() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return static_cast<int>(i);
    return -1;
}

Integer WeightForm::content() const
{
    Integer g = 0;
    for (const auto &x : coeffs_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), constant_.get_mpz_t());
    if (g == 0)
        return 0;
    int lead = leading_index();
    const Integer &first = lead >= 0 ? coeffs_[static_cast<std::size_t>(lead)] : constant_;
    return first < 0 ? Integer(-g) : g;
}

WeightForm WeightForm::primitive() const
{
    Integer g = content();
    if (g == 0)
        return *this;
    std::vector<Integer> c(coeffs_);
    for (auto &x : c)
        x /= g;
    return WeightForm(std::move(c), constant_ / g);
}

Rational WeightForm::evaluate(const std::vector<Rational> &point) const
{
    if (point.size() != coeffs_.size())
        throw Error(ErrorKind::InvalidArgument, "evaluation point has the wrong number of parameters");
    Rational v = constant_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v += coeffs_[i] * point[i];
    return v;
}

WeightForm WeightForm::operator-() const
{
    return *this * Integer(-1);
}

WeightForm WeightForm::operator+(const WeightForm &o) const
{
    if (o.coeffs_.size() != coeffs_.size())
        throw Error(ErrorKind::VariableSetMismatch, "weight forms over different parameter sets");
    std::vector<Integer> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.coeffs_[i];
    return WeightForm(std::move(c), constant_ + o.constant_);
}

WeightForm WeightForm::operator*(const Integer &k) const
{
    std::vector<Integer> c(coeffs_);
    for (auto &x : c)
        x *= k;
    return WeightForm(std::move(c), constant_ * k);
}

bool operator==(const WeightForm &a, const WeightForm &b)
{
    return a.coeffs_ == b.coeffs_ && a.constant_ == b.constant_;
}

bool operator<(const WeightForm &a, const WeightForm &b)
{
    if (a.coeffs_ != b.coeffs_)
        return std::lexicographical_compare(b.coeffs_.begin(), b.coeffs_.end(), a.coeffs_.begin(),
                                            a.coeffs_.end());
    return a.constant_ > b.constant_;
}

std::string to_string(const WeightForm &f)
{
    std::string out;
    auto emit = [&out](const Integer &c, const std::string &name) {
        if (c == 0)
            return;
        Integer mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (name.empty())
            out += mag.get_str();
        else
            out += (mag == 1 ? "" : mag.get_str() + "*") + name;
    };
    for (int i = 0; i < f.size(); ++i)
        emit(f.coefficient(i), parameter_name(i));
    emit(f.constant(), "");
    return out.empty() ? "0" : out;
}

LinearExpr LinearExpr::of(const WeightForm &f)
{
    LinearExpr e;
    for (const auto &c : f.coefficients())
        e.coefficients.emplace_back(c);
    e.constant = f.constant();
    return e;
}

bool LinearExpr::references(int index) const
{
    return index < static_cast<int>(coefficients.size()) && coefficients[static_cast<std::size_t>(index)] != 0;
}

std::pair<Rational, WeightForm> clear_denominators(const LinearExpr &e)
{
    Integer l = e.constant.get_den();
    for (const auto &c : e.coefficients)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> c;
    c.reserve(e.coefficients.size());
    for (const auto &x : e.coefficients)
        c.emplace_back(Rational(x * l).get_num());
    WeightForm f(std::move(c), Rational(e.constant * l).get_num());
    return {Rational(1) / Rational(l), std::move(f)};
}

namespace
{

// Recursive-descent reader for specialization strings.
class SpecParser
{
public:
    SpecParser(std::string_view text, int rank) : text_(text), params_(parameter_count(rank)) {}

    Specialization parse()
    {
        Specialization sp;
        skip_space();
        if (at_end())
            return sp;
        while (true) {
            std::size_t lhs_pos = pos_;
            int lhs = parse_parameter();
            skip_space();
            expect('=');
            LinearExpr rhs = parse_expr();
            try {
                sp.assign(lhs, std::move(rhs));
            } catch (const Error &e) {
                fail(lhs_pos, e.message());
            }
            skip_space();
            if (at_end())
                break;
            expect(',');
            skip_space();
        }
        return sp;
    }

private:
    [[noreturn]] void fail(std::size_t at, const std::string &what) const
    {
        throw Error(ErrorKind::ParseError,
                    "specialization column " + std::to_string(at + 1) + ": " + what, std::string(text_));
    }
    bool at_end() const
    {
        return pos_ >= text_.size();
    }
    char peek() const
    {
        return at_end() ? '\0' : text_[pos_];
    }
    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    void expect(char c)
    {
        skip_space();
        if (peek() != c)
            fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    int parse_parameter()
    {
        skip_space();
        std::size_t start = pos_;
        char kind = peek();
        if (kind != 's' && kind != 'v')
            fail(start, "expected a parameter name s1..s3 or v1..vr");
        ++pos_;
        std::string num = digits();
        if (num.empty() || num.size() > 6)
            fail(start, "expected a parameter index");
        int i = std::stoi(num);
        int index = kind == 's' ? (i >= 1 && i <= 3 ? i - 1 : -1) : VariableSet::torus_count + i - 1;
        if (index < 0 || (kind == 'v' && i < 1) || index >= params_)
            fail(start, "unknown parameter '" + std::string(text_.substr(start, pos_ - start)) + "' for this rank");
        return index;
    }
    LinearExpr parse_expr()
    {
        LinearExpr e;
        e.coefficients.assign(static_cast<std::size_t>(params_), Rational(0));
        skip_space();
        bool first = true;
        while (true) {
            skip_space();
            std::size_t term_pos = pos_;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                break;
            }
            Rational coeff = 1;
            bool have_number = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string num = digits();
                std::string den = "1";
                if (peek() == '/') {
                    ++pos_;
                    den = digits();
                    if (den.empty() || den.find_first_not_of('0') == std::string::npos)
                        fail(pos_, "bad denominator");
                }
                coeff = Rational(Integer(num), Integer(den));
                coeff.canonicalize();
                have_number = true;
                skip_space();
                if (peek() == '*') {
                    ++pos_;
                    skip_space();
                    if (peek() != 's' && peek() != 'v')
                        fail(pos_, "expected a parameter after '*'");
                }
            }
            if (peek() == 's' || peek() == 'v') {
                int p = parse_parameter();
                e.coefficients[static_cast<std::size_t>(p)] += sign * coeff;
            } else if (have_number) {
                e.constant += sign * coeff;
            } else {
                fail(term_pos, "expected a number or parameter");
            }
            first = false;
            skip_space();
            if (at_end() || peek() == ',')
                break;
        }
        return e;
    }

    std::string_view text_;
    int params_;
    std::size_t pos_ = 0;
};

} // namespace

Specialization Specialization::parse(std::string_view text, int rank)
{
    return SpecParser(text, rank).parse();
}

Specialization Specialization::calabi_yau_unit_frame(int rank)
{
    std::string text = "s3=-s1-s2";
    for (int j = 1; j <= rank; ++j)
        text += ",v" + std::to_string(j) + "=1";
    return parse(text, rank);
}

void Specialization::assign(int parameter, LinearExpr expr)
{
    if (expr.references(parameter))
        throw Error(ErrorKind::InvalidArgument, parameter_name(parameter) + " appears on both sides");
    for (const auto &[p, e] : steps_) {
        if (p == parameter)
            throw Error(ErrorKind::InvalidArgument, parameter_name(parameter) + " is assigned twice");
        if (expr.references(p))
            throw Error(ErrorKind::InvalidArgument,
                        "right-hand side mentions " + parameter_name(p) + ", which is already assigned");
    }
    if (!steps_.empty() && steps_.front().second.coefficients.size() != expr.coefficients.size())
        throw Error(ErrorKind::InvalidArgument, "specialization steps over different parameter sets");

    // Render the step for the text() summary.
    std::string rhs;
    auto term = [&rhs](const Rational &c, const std::string &name) {
        if (c == 0)
            return;
        Rational mag = abs(c);
        if (rhs.empty())
            rhs += c < 0 ? "-" : "";
        else
            rhs += c < 0 ? "-" : "+";
        if (name.empty())
            rhs += mag.get_str();
        else
            rhs += (mag == 1 ? "" : mag.get_str() + "*") + name;
    };
    for (std::size_t i = 0; i < expr.coefficients.size(); ++i)
        term(expr.coefficients[i], parameter_name(static_cast<int>(i)));
    term(expr.constant, "");
    if (!text_.empty())
        text_ += ',';
    text_ += parameter_name(parameter) + "=" + (rhs.empty() ? "0" : rhs);
    steps_.emplace_back(parameter, std::move(expr));
}

LinearExpr Specialization::apply(const LinearExpr &e) const
{
    LinearExpr out = e;
    for (const auto &[p, rhs] : steps_) {
        if (rhs.coefficients.size() != out.coefficients.size())
            throw Error(ErrorKind::VariableSetMismatch, "specialization and form have different parameter sets");
        Rational c = out.coefficients[static_cast<std::size_t>(p)];
        if (c == 0)
            continue;
        out.coefficients[static_cast<std::size_t>(p)] = 0;
        for (std::size_t i = 0; i < out.coefficients.size(); ++i)
            out.coefficients[i] += c * rhs.coefficients[i];
        out.constant += c * rhs.constant;
    }
    return out;
}

std::pair<Rational, WeightForm> Specialization::apply(const WeightForm &f) const
{
    return clear_denominators(apply(LinearExpr::of(f)));
}

WeightFunction::WeightFunction(int parameter_count, Rational scalar) : params_(parameter_count), scalar_(scalar) {}

WeightFunction::WeightFunction(int parameter_count, Rational scalar, std::vector<WeightForm> num,
                               std::vector<WeightForm> den)
    : params_(parameter_count), scalar_(std::move(scalar)), num_(std::move(num)), den_(std::move(den))
{
    for (const auto &f : num_)
        if (f.size() != params_)
            throw Error(ErrorKind::VariableSetMismatch, "weight form has the wrong number of parameters");
    for (const auto &f : den_)
        if (f.size() != params_)
            throw Error(ErrorKind::VariableSetMismatch, "weight form has the wrong number of parameters");
    canonicalize();
}

namespace
{

// Sorted multiset a \ b and a intersect b.
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

} // namespace

void WeightFunction::canonicalize()
{
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
    std::vector<WeightForm> num;
    for (const auto &f : num_) {
        if (f.is_zero()) {
            scalar_ = 0;
            break;
        }
        if (f.is_constant()) {
            scalar_ *= Rational(f.constant());
            continue;
        }
        scalar_ *= Rational(f.content());
        num.push_back(f.primitive());
    }
    if (scalar_ == 0) {
        num_.clear();
        den_.clear();
        return;
    }
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    auto common = forms_common(num, den);
    num_ = forms_minus(num, common);
    den_ = forms_minus(den, common);
}

bool WeightFunction::is_homogeneous() const
{
    auto homog = [](const WeightForm &f) { return f.constant() == 0; };
    return std::all_of(num_.begin(), num_.end(), homog) && std::all_of(den_.begin(), den_.end(), homog);
}

Rational WeightFunction::evaluate(const std::vector<Rational> &point) const
{
    Rational v = scalar_;
    for (const auto &f : den_) {
        Rational x = f.evaluate(point);
        if (x == 0)
            throw Error(ErrorKind::DivisionByZero, "denominator factor " + to_string(f) + " vanishes");
        v /= x;
    }
    for (const auto &f : num_)
        v *= f.evaluate(point);
    return v;
}

WeightFunction WeightFunction::operator*(const WeightFunction &o) const
{
    if (o.params_ != params_)
        throw Error(ErrorKind::VariableSetMismatch, "weight functions over different parameter sets");
    std::vector<WeightForm> num(num_), den(den_);
    num.insert(num.end(), o.num_.begin(), o.num_.end());
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return WeightFunction(params_, scalar_ * o.scalar_, std::move(num), std::move(den));
}

WeightFunction WeightFunction::inverse() const
{
    if (is_zero())
        throw Error(ErrorKind::DivisionByZero, "inverse of the zero weight function");
    return WeightFunction(params_, Rational(1) / scalar_, den_, num_);
}

std::string to_string(const WeightFunction &f)
{
    std::string out = f.scalar().get_str();
    for (const auto &x : f.numerator())
        out += "*(" + to_string(x) + ")";
    if (!f.denominator().empty()) {
        out += "/(";
        for (std::size_t i = 0; i < f.denominator().size(); ++i)
            out += (i ? "*(" : "(") + to_string(f.denominator()[i]) + ")";
        out += ")";
    }
    return out;
}

WeightMultiset weights_of(const LaurentPoly &p)
{
    WeightMultiset out;
    out.parameter_count = p.vars().size();
    for (const auto &[m, c] : p.terms()) {
        if (!is_integer(c))
            throw Error(ErrorKind::NonIntegerMultiplicity,
                        "coefficient " + c.get_str() + " of " + to_string(m, p.vars()) + " is not an integer");
        if (m.is_one())
            throw Error(ErrorKind::ZeroWeight, "the constant monomial has multiplicity " + c.get_str());
        WeightForm f = WeightForm::of_monomial(m);
        auto &bucket = c > 0 ? out.positive : out.negative;
        Integer count = abs(c.get_num());
        for (Integer i = 0; i < count; ++i)
            bucket.push_back(f);
    }
    return out;
}

WeightFunction euler_of_minus(const WeightMultiset &w)
{
    for (const auto &f : w.positive)
        if (f.is_zero())
            throw Error(ErrorKind::ZeroWeight, "zero weight in the character");
    for (const auto &f : w.negative)
        if (f.is_zero())
            throw Error(ErrorKind::ZeroWeight, "zero weight in the character");
    return WeightFunction(w.parameter_count, 1, w.negative, w.positive);
}

std::string_view to_string(Mode mode) noexcept
{
    return mode == Mode::character ? "character" : "paper";
}

Mode parse_mode(std::string_view text)
{
    if (text == "character")
        return Mode::character;
    if (text == "paper")
        return Mode::paper;
    throw Error(ErrorKind::ModeUnavailable, "unknown mode '" + std::string(text) + "'");
}

namespace
{

WeightFunction paper_contribution(const BoxTuple &b, int twist)
{
    const int r = b.rank;
    const int params = parameter_count(r);
    auto form = [params](long s1, long s2, long s3) {
        std::vector<Integer> c(static_cast<std::size_t>(params), Integer(0));
        c[0] = s1;
        c[1] = s2;
        c[2] = s3;
        return WeightForm(std::move(c));
    };
    std::vector<WeightForm> num, den;
    for (int j = 1; j <= r; ++j) {
        // sigma_j = sum_{l != j} (v_l - v_j)
        std::vector<Integer> sc(static_cast<std::size_t>(params), Integer(0));
        for (int l = 1; l <= r; ++l)
            sc[static_cast<std::size_t>(VariableSet::w(l))] = l == j ? Integer(-(r - 1)) : Integer(1);
        WeightForm sigma(std::move(sc));

        const int d = b.alpha[static_cast<std::size_t>(j - 1)];
        for (int i = 0; i < d; ++i)
            num.push_back(form(i + twist, -1, -1) + sigma);
        for (int i = 1; i <= d; ++i)
            den.push_back(form(-(i + twist), 0, 0) + (-sigma));

        const int c = b.beta[static_cast<std::size_t>(j - 1)];
        for (int i = 0; i < c; ++i)
            num.push_back(form(-(i + 2), -1, -1) + sigma);
        for (int i = 1; i <= c; ++i)
            den.push_back(form(i, 0, 0) + (-sigma));
    }
    return WeightFunction(params, 1, std::move(num), std::move(den));
}

} // namespace

WeightFunction contribution(const BoxTuple &b, int twist, Mode mode)
{
    b.validate();
    if (twist < 0)
        throw Error(ErrorKind::InvalidArgument, "twist must be nonnegative");
    try {
        if (mode == Mode::paper)
            return paper_contribution(b, twist);
        return euler_of_minus(weights_of(total_character(b, twist)));
    } catch (const Error &e) {
        if (!e.context().empty())
            throw;
        throw Error(e.kind(), e.message() + " at " + to_json_string(b), to_json_string(b));
    }
}

WeightFunction specialize(const WeightFunction &f, const Specialization &sp, const std::string &where)
{
    Rational scalar = f.scalar();
    std::vector<WeightForm> num, den;
    for (const auto &x : f.denominator()) {
        auto [s, g] = sp.apply(x);
        if (g.is_zero())
            throw Error(ErrorKind::DivisionByZero,
                        "denominator factor " + to_string(x) + " vanishes under " + sp.text() +
                            (where.empty() ? "" : " at " + where),
                        where);
        scalar /= s;
        den.push_back(std::move(g));
    }
    for (const auto &x : f.numerator()) {
        auto [s, g] = sp.apply(x);
        scalar *= s;
        num.push_back(std::move(g));
    }
    return WeightFunction(f.parameter_count(), scalar, std::move(num), std::move(den));
}

} // namespace hft
