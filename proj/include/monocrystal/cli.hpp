#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monocrystal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (argv[0] is the program name) and returns its exit
/// code. Nothing is written to the process streams directly.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monocrystal::cli
