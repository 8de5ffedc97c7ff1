#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hegf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // failed assertion-mode check or I/O error
inline constexpr int kUsage = 2;

// Runs one command line (without the program name). Human-readable and
// machine output go to `out` (or to --out), diagnostics and usage text to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hegf::cli
