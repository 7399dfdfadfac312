#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mmx::cli {

/**
 * Entry point behind the mmx binary: subcommands compute, roll, signals,
 * plot. args excludes the program name. Returns 0 on success, 1 for data
 * errors (unreadable input, bad rows, series too short), 2 for usage and
 * configuration errors. Normal output goes to out, diagnostics to err.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmx::cli
