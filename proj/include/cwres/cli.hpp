#ifndef CWRES_CLI_HPP
#define CWRES_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cwres {

// Runs the command-line surface on the given arguments (without the program
// name). Reports are a single JSON object on `out`; structured errors also
// go to `out` so machine consumers see one document either way. Returns 0
// when all requested checks pass, 1 when a check fails, 2 on errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cwres

#endif
