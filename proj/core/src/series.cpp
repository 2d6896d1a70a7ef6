#include <hft/error.hpp>
#include <hft/io.hpp>
#include <hft/series.hpp>

#include <algorithm>

namespace hft
{

std::string_view to_string(Support s) noexcept
{
    return s == Support::vertex ? "vertex" : "full";
}

Support parse_support(std::string_view text)
{
    if (text == "vertex")
        return Support::vertex;
    if (text == "full")
        return Support::full;
    throw Error(ErrorKind::InvalidArgument, "unknown support '" + std::string(text) + "'");
}

std::vector<BoxTuple> support_tuples(int rank, int k, Support support)
{
    std::vector<BoxTuple> all = enumerate_fixed(rank, k);
    if (support == Support::full)
        return all;
    std::vector<BoxTuple> out;
    for (auto &b : all)
        if (std::all_of(b.beta.begin(), b.beta.end(), [](int c) { return c == 0; }))
            out.push_back(std::move(b));
    return out;
}

namespace
{

ParamFunction coefficient(int rank, int twist, int k, Mode mode, const Specialization &sp, Support support,
                          SpecializeStage stage)
{
    const int params = parameter_count(rank);
    const std::vector<BoxTuple> tuples = support_tuples(rank, k, support);
    std::vector<WeightFunction> contributions;
    std::vector<ParamFunction> terms;
    for (const auto &b : tuples) {
        WeightFunction c = contribution(b, twist, mode);
        contributions.push_back(c);
        if (stage == SpecializeStage::early)
            c = specialize(c, sp, to_json_string(b));
        terms.emplace_back(c);
    }
    ParamFunction total = sum(terms, params);
    if (stage == SpecializeStage::early)
        return total;
    try {
        return total.specialize(sp);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::DivisionByZero)
            throw;
        // Name a fixed point carrying the vanishing factor.
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            try {
                specialize(contributions[i], sp);
            } catch (const Error &) {
                throw Error(e.kind(), e.message() + " at coefficient " + std::to_string(k),
                            to_json_string(tuples[i]));
            }
        }
        throw Error(e.kind(), e.message() + " at coefficient " + std::to_string(k));
    }
}

} // namespace

VertexSeries assemble_vertex(int rank, int twist, int order, Mode mode, const Specialization &sp, Support support,
                             SpecializeStage stage)
{
    if (rank < 1)
        throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
    if (twist < 0)
        throw Error(ErrorKind::InvalidArgument, "twist must be nonnegative");
    if (order < 0)
        throw Error(ErrorKind::InvalidArgument, "order must be nonnegative");
    VertexSeries s{SeriesInfo{rank, twist, mode, support, sp.text()}, {}};
    for (int k = 0; k <= order; ++k)
        s.coefficients.push_back(coefficient(rank, twist, k, mode, sp, support, stage));
    return s;
}

VertexSeries binomial_series(const ParamFunction &exponent, int order)
{
    if (order < 0)
        throw Error(ErrorKind::InvalidArgument, "order must be nonnegative");
    const int params = exponent.parameter_count();
    VertexSeries s;
    s.info.rank = params - VariableSet::torus_count;
    s.coefficients.emplace_back(params, 1);
    for (int k = 1; k <= order; ++k) {
        ParamFunction factor = (exponent - ParamFunction(params, k - 1)) * Rational(1, k);
        s.coefficients.push_back(s.coefficients.back() * factor);
    }
    return s;
}

BinomialityResult binomiality_test(const VertexSeries &s)
{
    if (s.coefficients.empty())
        return {};
    const int params = s.coefficients.front().parameter_count();
    if (!(s.coefficients.front() == ParamFunction(params, 1)))
        return {};
    if (s.order() == 0)
        return {true, ParamFunction(params, 0)};
    const ParamFunction &e = s.coefficients[1];
    VertexSeries expected = binomial_series(e, s.order());
    for (int k = 2; k <= s.order(); ++k)
        if (!(s.coefficients[static_cast<std::size_t>(k)] == expected.coefficients[static_cast<std::size_t>(k)]))
            return {};
    return {true, e};
}

VertexSeries power(const VertexSeries &s, int r)
{
    if (r < 1)
        throw Error(ErrorKind::InvalidArgument, "power must be positive");
    if (s.coefficients.empty())
        return s;
    const int params = s.coefficients.front().parameter_count();
    const auto n = s.coefficients.size();
    VertexSeries out{s.info, {}};
    out.coefficients.assign(n, ParamFunction(params, 0));
    out.coefficients[0] = ParamFunction(params, 1);
    for (int step = 0; step < r; ++step) {
        std::vector<ParamFunction> next(n, ParamFunction(params, 0));
        for (std::size_t i = 0; i < n; ++i) {
            if (out.coefficients[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j < n; ++j)
                if (!s.coefficients[j].is_zero())
                    next[i + j] = next[i + j] + out.coefficients[i] * s.coefficients[j];
        }
        out.coefficients = std::move(next);
    }
    return out;
}

CountSeries hft_partition(const CountSeries &p, int twist, int rank, int order)
{
    if (rank < 1)
        throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
    if (order < 0)
        throw Error(ErrorKind::InvalidArgument, "order must be nonnegative");
    CountSeries base;
    for (const auto &[m, c] : p) {
        if (c == 0)
            continue;
        if (twist * m < 0)
            throw Error(ErrorKind::InvalidArgument, "substituted series has negative exponents");
        if (twist * m <= order)
            base[twist * m] += c;
    }
    if (p.empty())
        return {};
    CountSeries acc{{0, 1}};
    for (int step = 0; step < rank; ++step) {
        CountSeries next;
        for (const auto &[a, ca] : acc)
            for (const auto &[b, cb] : base)
                if (a + b <= order)
                    next[a + b] += ca * cb;
        acc.clear();
        for (auto &[e, c] : next)
            if (c != 0)
                acc.emplace(e, c);
    }
    return acc;
}

ParamFunction closed_form_exponent(int rank, int twist)
{
    const int params = parameter_count(rank);
    std::vector<Integer> num(static_cast<std::size_t>(params), Integer(0));
    num[1] = 1;
    num[2] = 1;
    std::vector<Integer> den(static_cast<std::size_t>(params), Integer(0));
    den[0] = 1;
    return ParamFunction(WeightFunction(params, twist + 1, {WeightForm(num)}, {WeightForm(den)}));
}

namespace
{

struct Column {
    std::vector<std::optional<ParamFunction>> values;
    std::optional<std::string> error;
};

template <typename F> Column fill_column(int order, F &&at)
{
    Column col;
    for (int k = 0; k <= order; ++k) {
        try {
            col.values.emplace_back(at(k));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::DivisionByZero && e.kind() != ErrorKind::ZeroWeight)
                throw;
            col.values.emplace_back(std::nullopt);
            if (!col.error)
                col.error = e.what();
        }
    }
    return col;
}

std::optional<ParamFunction> difference(const std::optional<ParamFunction> &a, const std::optional<ParamFunction> &b)
{
    if (!a || !b)
        return std::nullopt;
    return *a - *b;
}

} // namespace

CompareReport compare(int rank, int twist, int order, const Specialization &sp, Support support)
{
    if (order < 0)
        throw Error(ErrorKind::InvalidArgument, "order must be nonnegative");
    auto stage = SpecializeStage::late;
    Column character = fill_column(order, [&](int k) {
        return coefficient(rank, twist, k, Mode::character, sp, support, stage);
    });
    Column paper = fill_column(order, [&](int k) {
        return coefficient(rank, twist, k, Mode::paper, sp, support, stage);
    });

    // ((1+q)^E)^r, then specialized.
    VertexSeries oracle = power(binomial_series(closed_form_exponent(rank, twist), order), rank);
    Column binomial = fill_column(order, [&](int k) {
        return oracle.coefficients[static_cast<std::size_t>(k)].specialize(sp, "coefficient " + std::to_string(k));
    });

    CompareReport report;
    report.info = SeriesInfo{rank, twist, Mode::character, support, sp.text()};
    report.character_error = character.error;
    report.paper_error = paper.error;
    report.binomial_error = binomial.error;
    for (int k = 0; k <= order; ++k) {
        auto i = static_cast<std::size_t>(k);
        CompareRow row;
        row.k = k;
        row.character = character.values[i];
        row.paper = paper.values[i];
        row.binomial = binomial.values[i];
        row.character_minus_paper = difference(row.character, row.paper);
        row.character_minus_binomial = difference(row.character, row.binomial);
        row.paper_minus_binomial = difference(row.paper, row.binomial);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace hft
