#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsalg {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Runs one command. args excludes the program name. Artifacts go to out
/// (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hsalg
