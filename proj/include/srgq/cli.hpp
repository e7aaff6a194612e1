#ifndef SRGQ_CLI_HPP
#define SRGQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace srgq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a mathematical check failed
inline constexpr int kExitUsage = 2;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srgq::cli

#endif  // SRGQ_CLI_HPP
