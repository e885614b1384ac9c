#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace chromagraph {

inline constexpr std::string_view kVersion = "0.1.0";

/// Entry point behind the chromagraph executable. `args` excludes the program
/// name. Reports go to the --out path when given, otherwise to `out`; errors
/// are written to `err` as {"kind": ..., "detail": ...}. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromagraph
