#ifndef STAGELET_CLI_HPP
#define STAGELET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stagelet::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_free_names = 2;
inline constexpr int exit_unknown_example = 3;
inline constexpr int exit_generation_failed = 4;

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stagelet::cli

#endif  // STAGELET_CLI_HPP
