#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace moebius::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitVerification = 2,
    kExitPrecision = 3,
};

/// Defaults taken from MOEBIUS_WORKERS and MOEBIUS_PRIME_LIMIT.
struct Environment {
    unsigned workers = 1;
    std::uint64_t prime_limit = 1'000'000;

    /// Reads the process environment; DomainError on a malformed value.
    static Environment from_process();
};

/// Parses argv (argv[0] is the program name), runs the subcommand and
/// returns its exit code. Nothing escapes as an exception.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, const Environment& env);

}  // namespace moebius::cli
