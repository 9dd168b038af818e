#pragma once

#include <iosfwd>

namespace gbslocc {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kUnsupported = 3;
inline constexpr int kGoldenMismatch = 4;
inline constexpr int kNothingToCertify = 5;
}  // namespace exit_code

/// Entry point of the gbs-locc command line tool. Reports go to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gbslocc
