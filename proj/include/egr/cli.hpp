#ifndef EGR_CLI_HPP
#define EGR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace egr {

/// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace egr

#endif
