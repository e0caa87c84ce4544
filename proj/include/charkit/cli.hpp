#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charkit {

// The dispatch table, in help order; exposed for coverage tests.
const std::vector<std::string>& cli_commands();

// One CLI invocation (args exclude the program name).  Returns the process
// exit code: 0 success, 1 domain error (or failing verify suite), 2 usage
// error.  Resource caps can be tightened via the CHARKIT_LIMITS environment
// variable ("key=value" pairs, comma separated; keys: gb_pairs, gb_basis,
// gb_degree, conductor, fq_max, factor_bound, mann_arity).
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace charkit
