#ifndef DBR_CLI_HPP
#define DBR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dbr {

// Runs one CLI command. Returns 0 on success, 1 on argument or input
// parse errors, 2 on domain errors (capacity, preconditions, closure
// violations). Identical arguments produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dbr

#endif
