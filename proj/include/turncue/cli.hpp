#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turncue {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Subcommands: eval, simulate, suite, metrics. `args[0]` is the program name.
/// Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turncue
