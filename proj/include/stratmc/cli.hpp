#pragma once

namespace stratmc {

/// Entry point of the command-line tool (subcommands integrate, compare,
/// essays, mesh-dump). Returns 0 on success, 1 on configuration/runtime
/// errors, 2 on usage errors.
int run_cli(int argc, const char* const* argv);

} // namespace stratmc
