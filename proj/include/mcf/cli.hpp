#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// args[0] is the program name. One JSON document (or a CSV stream) goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcf::cli
