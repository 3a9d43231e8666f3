#pragma once

#include <ostream>
#include <string>

#include "magphon/config.hpp"

namespace magphon {

// CLI exit codes: 0 ok, 1 usage/config error, 2 numerical self-check failure,
// 3 I/O error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_selfcheck = 2;
inline constexpr int exit_io = 3;

// Executes one of coupling | spectrum | dos | magnetization | curie | oracle
// | selftest and writes its CSV to cfg.output_path (default <command>.csv).
// Returns an exit code; log receives progress and diagnostics.
int run_command(const std::string& command, const RunConfig& cfg, std::ostream& log);

} // namespace magphon
