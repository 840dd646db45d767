#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "specta/error.hpp"
#include "specta/topology/cell_complex.hpp"

namespace specta::cli {

enum ExitCode : int { Ok = 0, Usage = 1, Precondition = 2, Truncation = 3 };

ExitCode exitCodeFor(ErrorKind kind);

/// The body printed by `analyze`.
std::string analysisReport(const topology::CellComplex& k, bool records);

/// One invocation of the command-line front end; args[0] is the program
/// name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specta::cli
