#ifndef FILLING_CLI_HPP
#define FILLING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace filling {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int invalid = 2;
inline constexpr int resources = 3;
} // namespace exit_code

/// Runs one command line (`args[0]` is the program name). Subcommands:
/// verify, glue, search, extend, table, export-svg. Output goes to `out`,
/// diagnostics to `err`; `in` supplies sigma when no flag does.
int run_cli(std::vector<std::string> const &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace filling

#endif // FILLING_CLI_HPP
