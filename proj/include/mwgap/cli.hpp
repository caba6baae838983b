#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mwgap {

inline constexpr const char* kVersion = "0.1.0";

/// Entry point of the `mwgap` tool. `args` excludes the program name.
/// Returns 0 on success, 1 when a certificate or check fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwgap
