#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmock::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2, kInternal = 3 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err; the return value is the process exit status.
///
/// A `--config PATH` file holds `key = value` lines naming long flags of the
/// chosen command; flags given on the command line win.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmock::cli
