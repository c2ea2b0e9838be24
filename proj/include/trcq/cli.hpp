#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace trcq::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kAssertionFailed = 1,
    kUsageError = 2,
    kDegenerateData = 3,
};

/// Parses `key=value` lines; `#` starts a comment. Throws ParseError with line
/// and column on malformed lines.
std::map<std::string, std::string> parse_config(std::istream& in);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);

/// Comma-separated list of reals. Throws ParseError on malformed entries.
std::vector<double> parse_real_list(const std::string& text);

/// Runs the command line `args` (without the program name). CSV goes to `out`
/// unless --out is given; diagnostics go to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trcq::cli
