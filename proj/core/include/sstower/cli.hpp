#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sstower::cli {

// Full command-line entry point: parses `args` (without the program
// name), dispatches the subcommand, writes results to `out` and
// diagnostics to `err`. Returns the process exit code: 0 on success, 1
// on a semantic finding (constraint violations, failed consistency fit),
// 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sstower::cli
