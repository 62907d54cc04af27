#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bzeta {

/// Run one `bzeta` command. args excludes the program name. Returns the exit
/// code: 0 success, 1 computation error or failed verification, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bzeta
