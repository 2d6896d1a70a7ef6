#ifndef HFT_IO_HPP
#define HFT_IO_HPP

// JSON and text serialization of the library's values.

#include <string>

#include <json.hpp>

#include <hft/fixedpoints.hpp>
#include <hft/localize.hpp>
#include <hft/paramfunc.hpp>
#include <hft/series.hpp>
#include <hft/stability.hpp>

namespace hft
{

using Json = nlohmann::ordered_json;

// Readers throw Error(ParseError) naming the offending field.

Json to_json(const BoxTuple &b);
BoxTuple box_tuple_from_json(const Json &j);
// Compact one-line form, used as error context.
std::string to_json_string(const BoxTuple &b);

// Coefficients in parameter order (s1,s2,s3,v1..vr), a trailing constant only
// when it is nonzero.
Json to_json(const WeightForm &f);
WeightForm weight_form_from_json(const Json &j, int parameter_count);

// {"scalar": "p/q", "num": [...], "den": [...]}
Json to_json(const WeightFunction &f);
WeightFunction weight_function_from_json(const Json &j, int parameter_count);

// WeightFunction layout plus "poly": [{"coeff": "p/q", "exp": [...]}, ...]
// when the residual polynomial is not constant.
Json to_json(const ParamFunction &f);
ParamFunction param_function_from_json(const Json &j, int parameter_count);

Json to_json(const VertexSeries &s);
VertexSeries vertex_series_from_json(const Json &j);
std::string to_text(const VertexSeries &s);

// {"coefficients": [{"k": 2, "value": "1"}, ...]} with extra metadata.
Json to_json(const CountSeries &s, int rank, int twist, int order);
std::string to_text(const CountSeries &s);
// Input file layout {"m": coefficient}, values as numbers or "p/q" strings.
CountSeries count_series_from_json(const Json &j);

// Coefficient list, lowest degree first.
Json to_json(const HilbertPoly &p);
HilbertPoly hilbert_poly_from_json(const Json &j, const std::string &field);
// {"rank_E": r, "P_F": [...], "P_Im": [...],
//  "subobjects": [{"P_G": [...], "factors_through": bool}, ...]}
Json to_json(const FrozenTripleModel &m);
FrozenTripleModel model_from_json(const Json &j);

Json to_json(const CompareReport &r);
std::string to_text(const CompareReport &r);

// Parses JSON text, reporting line and column on failure.
Json parse_json(const std::string &text, const std::string &source);

} // namespace hft

#endif
