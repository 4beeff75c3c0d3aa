#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kforge
{

enum ExitCode : int
{
	exit_pass = 0,
	exit_failure = 1,
	exit_usage = 2,
};

/// Runs `kforge <args...>` (args exclude the program name). Reports go to
/// `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace kforge
