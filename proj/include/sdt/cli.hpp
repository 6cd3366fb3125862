#ifndef SDT_CLI_HPP
#define SDT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sdt {

/// Command-line driver shared by the sdtool binary and the tests.
/// Exit codes: 0 success, 1 not found / unsatisfiable within budget,
/// 2 usage or input error, 3 infeasible parameters.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdt

#endif
