#pragma once

// Brute-force ground truth. Nothing here depends on the automata code.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "starfrob/regex.hpp"

namespace starfrob::oracle {

/// word ∈ L(ast), by memoized recursion over (subexpression, span).
bool regex_match(const RegexAst& ast, std::string_view word);

/// word ∈ L(ast)*. Position j is reachable iff j == 0 or some reachable i < j
/// has word[i, j) ∈ L(ast).
bool member_star_dp(const RegexAst& ast, std::string_view word);

struct MissingLength {
    std::size_t length = 0;
    std::uint64_t count = 0;
    /// Lexicographically smallest missing word of this length.
    Word smallest;

    bool operator==(const MissingLength&) const = default;
};

struct OracleVerdict {
    bool cofinite = false;
    /// Meaningful when cofinite; nullopt when nothing is missing.
    std::optional<std::size_t> frobenius_length;

    bool operator==(const OracleVerdict&) const = default;
};

struct OracleReport {
    std::size_t horizon = 0;
    /// Sorted by length; only lengths with at least one missing word.
    std::vector<MissingLength> missing;
    bool conclusive = false;
    std::optional<OracleVerdict> verdict;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

/// Total number of words of length 0..horizon over an alphabet of `size`
/// letters, saturating at UINT64_MAX.
std::uint64_t word_count(std::size_t alphabet_size, std::size_t horizon);

/// Enumerates every word of length <= horizon and classifies it with
/// member_star_dp. With a sound bound b (no missing word of length >= b unless
/// infinitely many), the report is conclusive when horizon >= 2b - 1: E* is
/// not co-finite iff a word of length in [b, 2b) is missing, otherwise the
/// Frobenius length is the largest missing length.
///
/// Throws PreconditionError for horizon < 1 or an empty alphabet, and
/// BudgetExceeded when the enumeration would exceed `budget` words.
OracleReport bruteforce_cofinite(const RegexAst& ast, const Alphabet& alphabet, std::size_t horizon,
                                 std::optional<std::size_t> conclusive_bound = std::nullopt,
                                 std::uint64_t budget = kDefaultBudget);

/// 2^(t+1) with t = symbol_length(ast); saturates at SIZE_MAX.
std::size_t worst_case_bound(const RegexAst& ast);

}  // namespace starfrob::oracle
