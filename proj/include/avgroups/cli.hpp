#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace avgroups::cli {

enum class Format { Text, Json };

/// Parsed flags, validated before any computation.
struct Invocation {
    std::string subcommand;
    std::string poly;
    std::string q;
    std::string b;
    std::string group;
    std::optional<std::uint64_t> prime;
    std::vector<std::string> factors;
    int bound = -1;
    bool shifted = false;
    bool check_stability = false;
    Format format = Format::Text;
    std::size_t limit = 1000;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// Oracle budget override, read by the `oracle` subcommand.
inline constexpr const char* kBudgetEnv = "AVGROUPS_ORACLE_BUDGET";

int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments after the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace avgroups::cli
