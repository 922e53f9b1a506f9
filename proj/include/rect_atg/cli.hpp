#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rect_atg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kResourceCap = 3;
inline constexpr int kCheckFailed = 4;

// Environment variable that overrides the default materialization cap.
inline constexpr const char* kMaxLevelEnv = "RECT_ATG_MAX_N";

// Runs one command line (args[0] is the program name). Artifacts go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rect_atg::cli
