#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgx::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one `hgx` invocation; args exclude the program name. Returns the
/// exit code: 0 success, 1 domain error (or a non-free host for check-free),
/// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgx::cli
