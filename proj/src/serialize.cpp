#include "bzeta/serialize.hpp"

#include "bzeta/errors.hpp"

#ifndef BZETA_VERSION
#define BZETA_VERSION "0.0.0"
#endif

namespace bzeta {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("wrong type for ") + what);
  }
}

BigInt big_from_string(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty integer string");
  BigInt z;
  if (z.set_str(s, 10) != 0) throw InvalidArgument("not a decimal integer: " + s);
  return z;
}

}  // namespace

std::string library_version() { return BZETA_VERSION; }

Json rational_to_json(const Rational& r) { return Json::array({r.get_num().get_str(), r.get_den().get_str()}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw InvalidArgument("a rational is a [numerator, denominator] pair of strings");
  }
  const BigInt num = big_from_string(j[0].get<std::string>());
  const BigInt den = big_from_string(j[1].get<std::string>());
  if (den <= 0) throw InvalidArgument("denominator must be positive");
  Rational r = make_rational(num, den);
  if (r.get_num() != num || r.get_den() != den) throw InvalidArgument("rational is not in lowest terms");
  return r;
}

Json qlaurent_to_json(const QLaurent& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({rational_to_json(e), rational_to_json(c)}));
  return out;
}

QLaurent qlaurent_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("a Laurent object is a list of [exponent, coefficient] pairs");
  QLaurent out;
  bool first = true;
  Rational last;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw InvalidArgument("Laurent term must be [exponent, coefficient]");
    const Rational e = rational_from_json(term[0]);
    const Rational c = rational_from_json(term[1]);
    if (c == 0) throw InvalidArgument("zero coefficients are not stored");
    if (!first && e <= last) throw InvalidArgument("Laurent exponents must be strictly ascending");
    first = false;
    last = e;
    out.add_term(c, e);
  }
  return out;
}

Json tseries_to_json(const TSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(qlaurent_to_json(c));
  Json out;
  out["order"] = s.order();
  out["coeffs"] = std::move(coeffs);
  return out;
}

TSeries tseries_from_json(const Json& j) {
  const int order = as<int>(field(j, "order"), "order");
  const Json& coeffs = field(j, "coeffs");
  if (order < 0 || !coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1) {
    throw InvalidArgument("series needs order + 1 coefficients");
  }
  std::vector<QLaurent> cs;
  for (const auto& c : coeffs) cs.push_back(qlaurent_from_json(c));
  return TSeries(order, std::move(cs));
}

Json qtpoly_to_json(const QTPoly& p) {
  Json out = Json::array();
  for (const auto& [t, c] : p.terms()) out.push_back(Json::array({t, qlaurent_to_json(c)}));
  return out;
}

QTPoly qtpoly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("a polynomial in (q, t) is a list of [t_degree, coefficient] pairs");
  QTPoly out;
  int last = -1;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw InvalidArgument("polynomial term must be [t_degree, coefficient]");
    const int t = as<int>(term[0], "t-degree");
    if (t <= last) throw InvalidArgument("t-degrees must be strictly ascending and non-negative");
    last = t;
    const QLaurent c = qlaurent_from_json(term[1]);
    if (c.is_zero()) throw InvalidArgument("zero coefficients are not stored");
    out += QTPoly::monomial(c, t);
  }
  return out;
}

Json factored_to_json(const FactoredRatQT& f) {
  Json factors = Json::array();
  for (const auto& d : f.factors()) {
    Json e;
    e["q"] = rational_to_json(d.q_exp);
    e["t"] = d.t_exp;
    e["multiplicity"] = d.multiplicity;
    factors.push_back(std::move(e));
  }
  Json out;
  out["numerator"] = qtpoly_to_json(f.numerator());
  out["factors"] = std::move(factors);
  return out;
}

FactoredRatQT factored_from_json(const Json& j) {
  std::vector<DenominatorFactor> factors;
  const Json& fs = field(j, "factors");
  if (!fs.is_array()) throw InvalidArgument("factors must be a list");
  for (const auto& e : fs) {
    factors.push_back(DenominatorFactor{rational_from_json(field(e, "q")), as<int>(field(e, "t"), "t"),
                                        as<int>(field(e, "multiplicity"), "multiplicity")});
  }
  FactoredRatQT out(qtpoly_from_json(field(j, "numerator")), factors);
  if (out.factors() != factors) throw InvalidArgument("factors are not in canonical order");
  return out;
}

Json qrational_to_json(const QRational& r) {
  Json out;
  out["num"] = qlaurent_to_json(r.num());
  out["den"] = qlaurent_to_json(r.den());
  return out;
}

QRational qrational_from_json(const Json& j) {
  const QLaurent num = qlaurent_from_json(field(j, "num"));
  const QLaurent den = qlaurent_from_json(field(j, "den"));
  if (den.is_zero()) throw InvalidArgument("zero denominator");
  QRational out(num, den);
  if (out.num() != num || out.den() != den) throw InvalidArgument("rational function is not in canonical form");
  return out;
}

Json decomposition_to_json(const Sl2Decomposition& d) {
  Json out = Json::array();
  for (const auto& [m, k] : d.parts()) {
    Json e;
    e["m"] = m;
    e["multiplicity"] = k.get_str();
    out.push_back(std::move(e));
  }
  return out;
}

Sl2Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("a decomposition is a list of {m, multiplicity}");
  Sl2Decomposition out;
  for (const auto& e : j) {
    const long m = as<long>(field(e, "m"), "m");
    const BigInt k = big_from_string(as<std::string>(field(e, "multiplicity"), "multiplicity"));
    if (k <= 0 || out.multiplicity(m) != 0) throw InvalidArgument("multiplicities must be positive and listed once");
    out.add(m, k);
  }
  return out;
}

Json graded_dims_to_json(const GradedDims& g) {
  Json out;
  out["dims"] = g.dims;
  out["requested_degree"] = g.requested_degree;
  out["complete"] = g.complete;
  out["stop_reason"] = g.stop_reason;
  return out;
}

GradedDims graded_dims_from_json(const Json& j) {
  GradedDims g;
  g.dims = as<std::vector<std::size_t>>(field(j, "dims"), "dims");
  g.requested_degree = as<int>(field(j, "requested_degree"), "requested_degree");
  g.complete = as<bool>(field(j, "complete"), "complete");
  g.stop_reason = as<std::string>(field(j, "stop_reason"), "stop_reason");
  return g;
}

std::string kind_name(OutputKind k) {
  switch (k) {
    case OutputKind::series: return "series";
    case OutputKind::rational: return "rational";
    case OutputKind::decomposition: return "decomposition";
    case OutputKind::graded_dims: return "graded_dims";
    case OutputKind::verdict: return "verdict";
  }
  throw InternalError("unknown output kind");
}

OutputKind kind_from_name(const std::string& name) {
  for (OutputKind k : {OutputKind::series, OutputKind::rational, OutputKind::decomposition, OutputKind::graded_dims,
                       OutputKind::verdict}) {
    if (kind_name(k) == name) return k;
  }
  throw InvalidArgument("unknown output kind \"" + name + "\"");
}

std::string to_json_text(const OutputDocument& doc) {
  Json out;
  out["kind"] = kind_name(doc.kind);
  out["payload"] = doc.payload;
  Json meta;
  meta["command"] = doc.command;
  meta["parameters"] = doc.parameters;
  meta["version"] = doc.version;
  out["metadata"] = std::move(meta);
  return out.dump();
}

OutputDocument parse_output_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("output document does not parse: ") + e.what());
  }
  OutputDocument doc;
  doc.kind = kind_from_name(as<std::string>(field(j, "kind"), "kind"));
  doc.payload = field(j, "payload");
  const Json& meta = field(j, "metadata");
  doc.command = as<std::string>(field(meta, "command"), "command");
  doc.parameters = field(meta, "parameters");
  doc.version = as<std::string>(field(meta, "version"), "version");
  return doc;
}

}  // namespace bzeta
