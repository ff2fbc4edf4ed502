#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qsd {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInput = 2;

/// Default tolerance when neither --tol nor QSDIAG_TOL is given.
inline constexpr double kDefaultCliTolerance = 1e-10;

/// Runs the tool with `args` (without the program name). `env_tol` is the
/// value of QSDIAG_TOL, if set. Output goes to `out` unless --out names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> env_tol = std::nullopt);

}  // namespace qsd
