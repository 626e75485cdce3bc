#ifndef SEPQ_CLI_HPP
#define SEPQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sepq
{

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

inline constexpr int default_order = 100;
inline constexpr int max_order = 2000;
inline constexpr long enumerate_limit = 100000;

// Runs the command line `args` (without the program name). Returns 0 when
// everything checked passes, 1 on any failure and 2 on a usage or
// configuration error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sepq

#endif
