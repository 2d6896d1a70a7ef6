#ifndef HFT_SERIES_HPP
#define HFT_SERIES_HPP

// Truncated generating series in q: the equivariant vertex assembled from
// fixed-point contributions, binomial closed forms, powers, and the
// partition function of counts.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <hft/localize.hpp>
#include <hft/paramfunc.hpp>

namespace hft
{

// Which fixed points feed coefficient k. `vertex`: tuples supported on the
// alpha chart (c = 0), the vertex at 0. `full`: every tuple of length k,
// the product of the vertices at 0 and at infinity.
enum class Support { vertex, full };

std::string_view to_string(Support s) noexcept;
Support parse_support(std::string_view text);

struct SeriesInfo {
    int rank = 1;
    int twist = 0;
    Mode mode = Mode::character;
    Support support = Support::vertex;
    std::string specialization;
};

struct VertexSeries {
    SeriesInfo info;
    // Index k = 0..order.
    std::vector<ParamFunction> coefficients;

    int order() const noexcept
    {
        return static_cast<int>(coefficients.size()) - 1;
    }
};

// When a specialization is applied: to the summed coefficient, or to each
// contribution before summing.
enum class SpecializeStage { late, early };

// Fixed points of length k in the chosen support.
std::vector<BoxTuple> support_tuples(int rank, int k, Support support);

VertexSeries assemble_vertex(int rank, int twist, int order, Mode mode, const Specialization &sp = {},
                             Support support = Support::vertex, SpecializeStage stage = SpecializeStage::late);

// Coefficients E(E-1)...(E-k+1)/k!, k = 0..order.
VertexSeries binomial_series(const ParamFunction &exponent, int order);

struct BinomialityResult {
    bool is_binomial = false;
    std::optional<ParamFunction> exponent;
};

// True iff c0 = 1 and c_k = binom(c1, k) for every k up to the order.
BinomialityResult binomiality_test(const VertexSeries &s);

// S^r truncated at the order of S.
VertexSeries power(const VertexSeries &s, int r);

// Sparse q-series with exact coefficients, keyed by exponent.
using CountSeries = std::map<int, Rational>;

// (sum_m P_m q^(n m))^r truncated at q^order. An empty P gives the zero series.
CountSeries hft_partition(const CountSeries &p, int twist, int rank, int order);

// (n+1)(s2+s3)/s1, the exponent of the rank-1 closed form.
ParamFunction closed_form_exponent(int rank, int twist);

struct CompareRow {
    int k = 0;
    std::optional<ParamFunction> character;
    std::optional<ParamFunction> paper;
    std::optional<ParamFunction> binomial;
    // Exact differences, present when both sides are defined.
    std::optional<ParamFunction> character_minus_paper;
    std::optional<ParamFunction> character_minus_binomial;
    std::optional<ParamFunction> paper_minus_binomial;
};

struct CompareReport {
    SeriesInfo info;
    std::vector<CompareRow> rows;
    // First error per column, e.g. a vanishing denominator.
    std::optional<std::string> character_error;
    std::optional<std::string> paper_error;
    std::optional<std::string> binomial_error;
};

// Character mode, paper mode and the power ((1+q)^E)^r of the closed form,
// side by side with exact differences. Never decides between them.
CompareReport compare(int rank, int twist, int order, const Specialization &sp, Support support = Support::vertex);

} // namespace hft

#endif
