#ifndef NMLAB_CLI_HPP
#define NMLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nmlab {

// Runs one command line (without the program name), writing results to out
// and diagnostics to err. Returns the process exit code: 0 on success, 1
// on a user error or a failed check, 2 on an internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nmlab

#endif  // NMLAB_CLI_HPP
