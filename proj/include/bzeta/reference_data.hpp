#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bzeta/zeta.hpp"

namespace bzeta {

/// Published (g_m, h_m) for m = 3..6, parsed from data/reference_polys.json
/// (compiled into the library).
struct ReferenceGH {
  long m = 0;
  std::string g_text;
  std::string h_text;
  GHPair gh;
};

std::string_view reference_json_text();
const std::vector<ReferenceGH>& reference_gh_table();
/// Throws InvalidArgument when no reference exists for m.
const ReferenceGH& reference_gh(long m);

}  // namespace bzeta
