#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace inclab::cli {

/// Exit codes: 0 all checks passed, 1 a numerical check failed, 2 bad
/// configuration (the message names the offending field).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;

/// Entry point shared by the executable and the tests; args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inclab::cli
