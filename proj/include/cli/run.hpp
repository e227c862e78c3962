#pragma once

// In-process command-line front end. main() is a thin wrapper around run()
// so the tests can drive the full argument-to-bytes pipeline directly.

#include <string>
#include <vector>

#include "gf2/groebner.hpp"

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitResource = 3;

struct RunResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// args excludes the program name. Output is byte-deterministic for a given
/// argument list.
RunResult run(const std::vector<std::string>& args);

/// "degree,dim" header plus one row per degree, ascending.
std::string betti_csv(const gf2::BettiProfile& profile);

}  // namespace cli
