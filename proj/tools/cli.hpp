#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace telegraph_cli {

// Full command-line front end; returns the process exit code.  Streams are
// injectable so the harness is testable in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace telegraph_cli
