#pragma once

/// @file cli.hpp
/// @brief monocirc command-line surface: gen | verify | audit | bench.
///
/// Exit codes: 0 pass/ok, 1 verification or audit failure, 2 usage and I/O
/// errors. All outputs are deterministic for a fixed seed; MONOCIRC_THREADS
/// caps verification workers without changing any output.

#include <iosfwd>
#include <string>
#include <vector>

namespace monocirc {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monocirc
