#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kahler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a check fails, 2 on
/// unusable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kahler::cli
