#pragma once

#include <iosfwd>

namespace ipgap {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitInput = 2, kExitInternal = 3 };

/// Entry point of the ipgap tool. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ipgap
