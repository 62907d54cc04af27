#pragma once

#include <string>

#include "bzeta/braided_sets.hpp"
#include "bzeta/factored.hpp"
#include "bzeta/qrational.hpp"
#include "bzeta/sl2.hpp"
#include "bzeta/tseries.hpp"
#include "json.hpp"

namespace bzeta {

using Json = nlohmann::ordered_json;

// Exact JSON encodings. Every rational is a [numerator, denominator] pair of
// decimal strings; Laurent objects are lists of [exponent, coefficient]
// pairs in ascending exponent, series list their coefficients by ascending
// t-degree. Each *_from_json inverts the matching *_to_json and throws
// InvalidArgument on malformed input.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json qlaurent_to_json(const QLaurent& p);
QLaurent qlaurent_from_json(const Json& j);

/// {"order": N, "coeffs": [c_0, ..., c_N]}
Json tseries_to_json(const TSeries& s);
TSeries tseries_from_json(const Json& j);

/// [[t_degree, coeff], ...] ascending in t.
Json qtpoly_to_json(const QTPoly& p);
QTPoly qtpoly_from_json(const Json& j);

/// {"numerator": qtpoly, "factors": [{"q": r, "t": b, "multiplicity": k}, ...]}
Json factored_to_json(const FactoredRatQT& f);
FactoredRatQT factored_from_json(const Json& j);

/// {"num": qlaurent, "den": qlaurent}
Json qrational_to_json(const QRational& r);
QRational qrational_from_json(const Json& j);

/// [{"m": m, "multiplicity": "k"}, ...] ascending in m.
Json decomposition_to_json(const Sl2Decomposition& d);
Sl2Decomposition decomposition_from_json(const Json& j);

Json graded_dims_to_json(const GradedDims& g);
GradedDims graded_dims_from_json(const Json& j);

enum class OutputKind { series, rational, decomposition, graded_dims, verdict };

std::string kind_name(OutputKind k);
OutputKind kind_from_name(const std::string& name);

/// {"kind", "payload", "metadata": {"command", "parameters", "version"}}
struct OutputDocument {
  OutputKind kind = OutputKind::series;
  Json payload;
  std::string command;
  Json parameters = Json::object();
  std::string version;
};

/// Compact dump; re-parsing and re-dumping gives the same bytes.
std::string to_json_text(const OutputDocument& doc);
OutputDocument parse_output_document(const std::string& text);

/// Library version string.
std::string library_version();

}  // namespace bzeta
