#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mvmr {

inline constexpr const char* kVersion = "0.1.0";

// Entry point of the `mvmr` tool. args excludes the program name.
// Returns 0 on success, 2 on input errors, 1 on internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvmr
