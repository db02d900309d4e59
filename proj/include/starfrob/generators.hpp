#pragma once

// Seeded random inputs for property tests and the selftest command.

#include <cstddef>
#include <random>
#include <vector>

#include "starfrob/reduction.hpp"
#include "starfrob/regex.hpp"

namespace starfrob::gen {

using Rng = std::mt19937_64;

/// Random expression with between 1 and `max_symbols` symbol occurrences drawn
/// from `alphabet`, mixing union, concatenation, star and the occasional ε.
RegexAst random_regex(Rng& rng, const Alphabet& alphabet, std::size_t max_symbols);

/// Random 3SAT instance with 3 <= n <= max_variables and n/3 <= m <= max_clauses
/// clauses over three distinct variables each. Every variable is used.
CnfInstance random_cnf(Rng& rng, int max_variables, std::size_t max_clauses);

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

/// All words of exactly `length` letters over `alphabet`, in lexicographic order.
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t length);

}  // namespace starfrob::gen
