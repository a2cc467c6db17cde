#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace couponlab::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitConvergence = 3,
    kExitDisagreement = 4,
};

inline constexpr unsigned long long kDefaultSeed = 42;
inline constexpr double kDisagreementZ = 4.0;

/// Runs one command line (without the program name). Records go to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace couponlab::cli
