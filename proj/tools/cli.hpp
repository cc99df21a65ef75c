#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hhm::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNumerical = 3;

/// Entry point of the `hhm` tool. Data goes to `out` (or --output), every
/// diagnostic to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhm::cli
