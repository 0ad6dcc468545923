#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pps::cli {

/// Stable exit codes for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 2;
inline constexpr int kExitValidation = 3;

/// Runs the command line `args` (without the program name). Standard input
/// is read from `in` when the input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pps::cli
