#ifndef HYPERTRANS_CLI_HPP
#define HYPERTRANS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ht::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_input = 2;

/// Runs one command; args excludes the program name.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace ht::cli

#endif
