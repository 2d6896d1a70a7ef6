#include <hft/error.hpp>
#include <hft/io.hpp>

#include <iomanip>
#include <sstream>

namespace hft
{

namespace
{

[[noreturn]] void bad(const std::string &field, const std::string &what)
{
    throw Error(ErrorKind::ParseError, field + ": " + what);
}

const Json &member(const Json &j, const char *key, const std::string &where)
{
    if (!j.is_object())
        bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        bad(where, std::string("missing field '") + key + "'");
    return *it;
}

Json integer_json(const Integer &x)
{
    if (x.fits_slong_p())
        return Json(x.get_si());
    return Json(x.get_str());
}

Integer integer_from(const Json &j, const std::string &where)
{
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        if (!is_integer(q))
            bad(where, "expected an integer");
        return q.get_num();
    }
    bad(where, "expected an integer");
}

int int_from(const Json &j, const std::string &where)
{
    if (!j.is_number_integer())
        bad(where, "expected an integer");
    long long v = j.get<long long>();
    if (v < -1000000000LL || v > 1000000000LL)
        bad(where, "integer out of range");
    return static_cast<int>(v);
}

Rational rational_from(const Json &j, const std::string &where)
{
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error &e) {
            bad(where, e.message());
        }
    }
    bad(where, "expected an integer or a \"p/q\" string");
}

std::vector<int> int_list(const Json &j, const std::string &where)
{
    if (!j.is_array())
        bad(where, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(int_from(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<WeightForm> forms_from(const Json &j, int params, const std::string &where)
{
    if (!j.is_array())
        bad(where, "expected an array of forms");
    std::vector<WeightForm> out;
    for (const auto &f : j)
        out.push_back(weight_form_from_json(f, params));
    return out;
}

Json forms_json(const std::vector<WeightForm> &forms)
{
    Json a = Json::array();
    for (const auto &f : forms)
        a.push_back(to_json(f));
    return a;
}

} // namespace

Json to_json(const BoxTuple &b)
{
    return Json{{"rank", b.rank}, {"alpha", b.alpha}, {"beta", b.beta}};
}

BoxTuple box_tuple_from_json(const Json &j)
{
    BoxTuple b;
    b.rank = int_from(member(j, "rank", "box tuple"), "rank");
    b.alpha = int_list(member(j, "alpha", "box tuple"), "alpha");
    b.beta = int_list(member(j, "beta", "box tuple"), "beta");
    try {
        b.validate();
    } catch (const Error &e) {
        bad("box tuple", e.message());
    }
    return b;
}

std::string to_json_string(const BoxTuple &b)
{
    return to_json(b).dump();
}

Json to_json(const WeightForm &f)
{
    Json a = Json::array();
    for (const auto &c : f.coefficients())
        a.push_back(integer_json(c));
    if (f.constant() != 0)
        a.push_back(integer_json(f.constant()));
    return a;
}

WeightForm weight_form_from_json(const Json &j, int parameter_count)
{
    if (!j.is_array())
        bad("form", "expected an array of coefficients");
    const auto n = static_cast<std::size_t>(parameter_count);
    if (j.size() != n && j.size() != n + 1)
        bad("form", "expected " + std::to_string(n) + " coefficients and an optional constant");
    std::vector<Integer> c;
    for (std::size_t i = 0; i < n; ++i)
        c.push_back(integer_from(j[i], "form"));
    Integer constant = j.size() == n + 1 ? integer_from(j[n], "form") : Integer(0);
    return WeightForm(std::move(c), std::move(constant));
}

Json to_json(const WeightFunction &f)
{
    return Json{{"scalar", f.scalar().get_str()}, {"num", forms_json(f.numerator())}, {"den", forms_json(f.denominator())}};
}

WeightFunction weight_function_from_json(const Json &j, int parameter_count)
{
    Rational scalar = rational_from(member(j, "scalar", "weight function"), "scalar");
    auto num = forms_from(member(j, "num", "weight function"), parameter_count, "num");
    auto den = forms_from(member(j, "den", "weight function"), parameter_count, "den");
    try {
        return WeightFunction(parameter_count, scalar, std::move(num), std::move(den));
    } catch (const Error &e) {
        bad("weight function", e.message());
    }
}

Json to_json(const ParamFunction &f)
{
    Json j{{"scalar", f.scalar().get_str()}, {"num", forms_json(f.numerator())}, {"den", forms_json(f.denominator())}};
    if (!f.residual().is_constant()) {
        Json poly = Json::array();
        for (const auto &[e, c] : f.residual().terms())
            poly.push_back(Json{{"coeff", c.get_str()}, {"exp", e}});
        j["poly"] = std::move(poly);
    }
    return j;
}

ParamFunction param_function_from_json(const Json &j, int parameter_count)
{
    Rational scalar = rational_from(member(j, "scalar", "value"), "scalar");
    auto num = forms_from(member(j, "num", "value"), parameter_count, "num");
    auto den = forms_from(member(j, "den", "value"), parameter_count, "den");
    ParamPoly residual = ParamPoly::constant(parameter_count, 1);
    if (auto it = j.find("poly"); it != j.end()) {
        if (!it->is_array())
            bad("poly", "expected an array of terms");
        residual = ParamPoly(parameter_count);
        for (const auto &t : *it) {
            auto e = int_list(member(t, "exp", "poly term"), "exp");
            if (static_cast<int>(e.size()) != parameter_count)
                bad("exp", "wrong number of exponents");
            for (int x : e)
                if (x < 0)
                    bad("exp", "negative exponent");
            residual.add_term(e, rational_from(member(t, "coeff", "poly term"), "coeff"));
        }
    }
    try {
        return ParamFunction(scalar, std::move(num), std::move(residual), std::move(den));
    } catch (const Error &e) {
        bad("value", e.message());
    }
}

Json to_json(const VertexSeries &s)
{
    Json coeffs = Json::array();
    for (std::size_t k = 0; k < s.coefficients.size(); ++k)
        coeffs.push_back(Json{{"k", k}, {"value", to_json(s.coefficients[k])}});
    return Json{{"rank", s.info.rank},
                {"twist", s.info.twist},
                {"order", s.order()},
                {"mode", std::string(to_string(s.info.mode))},
                {"support", std::string(to_string(s.info.support))},
                {"specialization", s.info.specialization},
                {"coefficients", std::move(coeffs)}};
}

VertexSeries vertex_series_from_json(const Json &j)
{
    VertexSeries s;
    s.info.rank = int_from(member(j, "rank", "series"), "rank");
    if (s.info.rank < 1)
        bad("rank", "must be at least 1");
    s.info.twist = int_from(member(j, "twist", "series"), "twist");
    int order = int_from(member(j, "order", "series"), "order");
    const Json &mode = member(j, "mode", "series");
    if (!mode.is_string())
        bad("mode", "expected a string");
    try {
        s.info.mode = parse_mode(mode.get<std::string>());
    } catch (const Error &e) {
        bad("mode", e.message());
    }
    if (auto it = j.find("support"); it != j.end()) {
        if (!it->is_string())
            bad("support", "expected a string");
        try {
            s.info.support = parse_support(it->get<std::string>());
        } catch (const Error &e) {
            bad("support", e.message());
        }
    }
    const Json &sp = member(j, "specialization", "series");
    if (!sp.is_string())
        bad("specialization", "expected a string");
    s.info.specialization = sp.get<std::string>();
    const Json &coeffs = member(j, "coefficients", "series");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        bad("coefficients", "expected order + 1 entries");
    const int params = parameter_count(s.info.rank);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        std::string where = "coefficients[" + std::to_string(k) + "]";
        if (int_from(member(coeffs[k], "k", where), where + ".k") != static_cast<int>(k))
            bad(where, "entries must be in order of k");
        s.coefficients.push_back(param_function_from_json(member(coeffs[k], "value", where), params));
    }
    return s;
}

std::string to_text(const VertexSeries &s)
{
    std::ostringstream out;
    out << "rank " << s.info.rank << "  twist " << s.info.twist << "  order " << s.order() << "  mode "
        << to_string(s.info.mode) << "  support " << to_string(s.info.support) << "\n";
    out << "specialization " << (s.info.specialization.empty() ? "none" : s.info.specialization) << "\n";
    const int width = static_cast<int>(std::to_string(s.order()).size());
    for (std::size_t k = 0; k < s.coefficients.size(); ++k)
        out << "q^" << std::left << std::setw(width) << k << "  " << to_string(s.coefficients[k]) << "\n";
    return out.str();
}

Json to_json(const CountSeries &s, int rank, int twist, int order)
{
    Json coeffs = Json::array();
    for (const auto &[k, c] : s)
        coeffs.push_back(Json{{"k", k}, {"value", c.get_str()}});
    return Json{{"rank", rank}, {"twist", twist}, {"order", order}, {"coefficients", std::move(coeffs)}};
}

std::string to_text(const CountSeries &s)
{
    if (s.empty())
        return "0\n";
    std::ostringstream out;
    for (const auto &[k, c] : s)
        out << "q^" << k << "  " << c.get_str() << "\n";
    return out.str();
}

CountSeries count_series_from_json(const Json &j)
{
    if (!j.is_object())
        bad("P", "expected an object mapping exponents to coefficients");
    CountSeries s;
    for (const auto &[key, value] : j.items()) {
        int m = 0;
        std::size_t used = 0;
        try {
            m = std::stoi(key, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != key.size())
            bad("P", "key '" + key + "' is not an integer exponent");
        if (m < 0)
            bad("P", "key '" + key + "' is negative");
        s[m] += rational_from(value, "P[\"" + key + "\"]");
    }
    return s;
}

Json to_json(const HilbertPoly &p)
{
    Json a = Json::array();
    for (const auto &c : p.coefficients())
        a.push_back(c.get_str());
    return a;
}

HilbertPoly hilbert_poly_from_json(const Json &j, const std::string &field)
{
    if (!j.is_array())
        bad(field, "expected a coefficient array, lowest degree first");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(rational_from(j[i], field + "[" + std::to_string(i) + "]"));
    return HilbertPoly(std::move(c));
}

Json to_json(const FrozenTripleModel &m)
{
    Json subs = Json::array();
    for (const auto &g : m.subobjects)
        subs.push_back(Json{{"P_G", to_json(g.hilbert)}, {"factors_through", g.factors_through}});
    return Json{{"rank_E", m.rank_E}, {"P_F", to_json(m.sheaf)}, {"P_Im", to_json(m.image)}, {"subobjects", subs}};
}

FrozenTripleModel model_from_json(const Json &j)
{
    FrozenTripleModel m;
    m.rank_E = int_from(member(j, "rank_E", "model"), "rank_E");
    m.sheaf = hilbert_poly_from_json(member(j, "P_F", "model"), "P_F");
    m.image = hilbert_poly_from_json(member(j, "P_Im", "model"), "P_Im");
    if (auto it = j.find("subobjects"); it != j.end()) {
        if (!it->is_array())
            bad("subobjects", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string where = "subobjects[" + std::to_string(i) + "]";
            const Json &s = (*it)[i];
            Subobject g;
            g.hilbert = hilbert_poly_from_json(member(s, "P_G", where), where + ".P_G");
            const Json &f = member(s, "factors_through", where);
            if (!f.is_boolean())
                bad(where + ".factors_through", "expected true or false");
            g.factors_through = f.get<bool>();
            m.subobjects.push_back(std::move(g));
        }
    }
    return m;
}

namespace
{

Json optional_json(const std::optional<ParamFunction> &f)
{
    return f ? to_json(*f) : Json(nullptr);
}

Json flag_json(const std::optional<ParamFunction> &diff)
{
    return diff ? Json(diff->is_zero()) : Json(nullptr);
}

} // namespace

Json to_json(const CompareReport &r)
{
    Json rows = Json::array();
    for (const auto &row : r.rows) {
        rows.push_back(Json{{"k", row.k},
                            {"character", optional_json(row.character)},
                            {"paper", optional_json(row.paper)},
                            {"binomial", optional_json(row.binomial)},
                            {"character_equals_paper", flag_json(row.character_minus_paper)},
                            {"character_equals_binomial", flag_json(row.character_minus_binomial)},
                            {"paper_equals_binomial", flag_json(row.paper_minus_binomial)},
                            {"character_minus_paper", optional_json(row.character_minus_paper)},
                            {"character_minus_binomial", optional_json(row.character_minus_binomial)},
                            {"paper_minus_binomial", optional_json(row.paper_minus_binomial)}});
    }
    auto err = [](const std::optional<std::string> &e) { return e ? Json(*e) : Json(nullptr); };
    return Json{{"rank", r.info.rank},
                {"twist", r.info.twist},
                {"order", static_cast<int>(r.rows.size()) - 1},
                {"support", std::string(to_string(r.info.support))},
                {"specialization", r.info.specialization},
                {"errors", Json{{"character", err(r.character_error)},
                                {"paper", err(r.paper_error)},
                                {"binomial", err(r.binomial_error)}}},
                {"rows", std::move(rows)}};
}

std::string to_text(const CompareReport &r)
{
    auto show = [](const std::optional<ParamFunction> &f) { return f ? to_string(*f) : std::string("undefined"); };
    auto flag = [](const std::optional<ParamFunction> &d) {
        return d ? std::string(d->is_zero() ? "equal" : "differ") : std::string("n/a");
    };
    std::ostringstream out;
    out << "rank " << r.info.rank << "  twist " << r.info.twist << "  support " << to_string(r.info.support)
        << "  specialization " << (r.info.specialization.empty() ? "none" : r.info.specialization) << "\n";
    for (const auto &row : r.rows) {
        out << "k=" << row.k << "\n";
        out << "  character  " << show(row.character) << "\n";
        out << "  paper      " << show(row.paper) << "\n";
        out << "  binomial   " << show(row.binomial) << "\n";
        out << "  character/paper " << flag(row.character_minus_paper) << ", character/binomial "
            << flag(row.character_minus_binomial) << ", paper/binomial " << flag(row.paper_minus_binomial) << "\n";
        if (row.character_minus_binomial && !row.character_minus_binomial->is_zero())
            out << "  character - binomial = " << to_string(*row.character_minus_binomial) << "\n";
        if (row.character_minus_paper && !row.character_minus_paper->is_zero())
            out << "  character - paper = " << to_string(*row.character_minus_paper) << "\n";
    }
    auto note = [&out](const char *col, const std::optional<std::string> &e) {
        if (e)
            out << col << " column: " << *e << "\n";
    };
    note("character", r.character_error);
    note("paper", r.paper_error);
    note("binomial", r.binomial_error);
    return out.str();
}

Json parse_json(const std::string &text, const std::string &source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorKind::ParseError, source + ": " + e.what());
    }
}

} // namespace hft
