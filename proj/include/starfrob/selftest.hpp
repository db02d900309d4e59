#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace starfrob {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// Cases the oracle could not settle within its budget.
    std::size_t inconclusive = 0;
    /// Description of the first failing case, empty if none.
    std::string first_failure;
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::vector<SuiteResult> suites;

    bool ok() const;
};

/// Runs every cross-module property suite on `cases` seeded random inputs.
/// Each suite draws from its own generator derived from `seed`, so the report
/// is reproducible.
SelftestReport run_selftest(std::uint64_t seed, std::size_t cases);

}  // namespace starfrob
