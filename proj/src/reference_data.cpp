#include "bzeta/reference_data.hpp"

#include "bzeta/errors.hpp"
#include "json.hpp"

namespace bzeta {

namespace detail {
extern const std::string_view kReferenceJson;
}

std::string_view reference_json_text() { return detail::kReferenceJson; }

const std::vector<ReferenceGH>& reference_gh_table() {
  static const std::vector<ReferenceGH> table = [] {
    std::vector<ReferenceGH> out;
    const auto doc = nlohmann::json::parse(detail::kReferenceJson);
    for (const auto& e : doc.at("entries")) {
      ReferenceGH r;
      r.m = e.at("m").get<long>();
      r.g_text = e.at("g").get<std::string>();
      r.h_text = e.at("h").get<std::string>();
      r.gh = {parse_qt_poly(r.g_text), parse_qt_poly(r.h_text).as_upoly_in_t()};
      out.push_back(std::move(r));
    }
    return out;
  }();
  return table;
}

const ReferenceGH& reference_gh(long m) {
  for (const auto& r : reference_gh_table()) {
    if (r.m == m) return r;
  }
  throw InvalidArgument("no reference (g, h) for m = " + std::to_string(m));
}

}  // namespace bzeta
