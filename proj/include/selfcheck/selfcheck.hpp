#pragma once

// Seeded randomized property suites over the polynomial core, the reduction
// engine and the Steenrod rules. Shared by the selftest command and the
// test binaries so CI and the CLI exercise identical checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gf2/poly.hpp"

namespace selfcheck {

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr std::size_t kDefaultCases = 1000;

struct SuiteResult {
    std::string name;
    bool passed;
    std::size_t cases;
    std::string detail;
};

/// Random polynomial with up to max_terms monomials, exponents below
/// max_exp. May be zero.
gf2::PolyF2 random_poly(const gf2::SpecPtr& spec, std::size_t max_terms, std::uint32_t max_exp,
                        std::mt19937_64& rng);

/// Random homogeneous polynomial of the given weighted degree: each
/// degree-d monomial is included with probability 1/2.
gf2::PolyF2 random_homogeneous(const gf2::SpecPtr& spec, std::uint64_t degree,
                               std::mt19937_64& rng);

/// Runs every suite with the given seed and case count.
std::vector<SuiteResult> run_all(std::uint64_t seed = kDefaultSeed,
                                 std::size_t cases = kDefaultCases,
                                 std::uint64_t matrix_budget = std::uint64_t{1} << 26);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace selfcheck
