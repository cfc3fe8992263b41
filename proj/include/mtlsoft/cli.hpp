#ifndef MTLSOFT_CLI_HPP
#define MTLSOFT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mtlsoft::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // counterexamples or failed axioms
inline constexpr int kUsage = 2;   // bad arguments, unknown fixture, unreadable file

/// Environment variable holding the default enumeration budget.
inline constexpr const char* kBudgetEnv = "MTLSOFT_BUDGET";

/// Runs one command. `args` excludes the program name, e.g.
/// {"verify-all", "a1", "--grid", "4", "--json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtlsoft::cli

#endif  // MTLSOFT_CLI_HPP
