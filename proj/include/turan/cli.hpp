#ifndef TURAN_CLI_HPP
#define TURAN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace turan {

/// Runs the command line `args` (without the program name).
/// Exit codes: 0 success, 1 a check or certificate failed, 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace turan

#endif
