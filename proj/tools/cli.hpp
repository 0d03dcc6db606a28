#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vgcdf::cli {

enum ExitCode : int {
    kOk = 0,
    kSelfcheckFailed = 1,
    kBadParameters = 2,
    kNoConvergence = 3,
};

// Runs one command line (program name excluded) and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vgcdf::cli
