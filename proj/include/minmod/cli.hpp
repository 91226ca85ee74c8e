#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minmod::cli {

/// Dispatches one CLI invocation (argv without the program name).
/// Returns the process exit status: 0 on success and when all requested
/// verifications pass, nonzero otherwise with a one-line diagnostic on err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace minmod::cli
