#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "starfrob/automata.hpp"
#include "starfrob/regex.hpp"

namespace starfrob {

/// E* misses infinitely many words. `witness` is a missing word whose length
/// lies in [n', 2n'), n' being the trimmed size of the complement automaton,
/// so it can be pumped.
struct NotCofinite {
    LengthWitness witness;
};

/// E* misses finitely many words. Both fields are empty when nothing is
/// missing; otherwise `witness` is the lexicographically smallest missing
/// word of the maximal length `frobenius_length`.
struct Cofinite {
    std::optional<std::size_t> frobenius_length;
    std::optional<Word> witness;
};

/// Sizes of the intermediate automata built by decide_cofinite.
struct PipelineStats {
    std::size_t nfa_states = 0;
    std::size_t dfa_states = 0;
    std::size_t complement_useful_states = 0;
    /// Symbol occurrences of the regex; absent for NFA input.
    std::optional<std::size_t> symbol_length;
};

struct CofiniteResult {
    std::variant<NotCofinite, Cofinite> verdict;
    Alphabet alphabet;
    PipelineStats stats;

    bool cofinite() const noexcept { return std::holds_alternative<Cofinite>(verdict); }
    /// Frobenius length when cofinite and something is missing.
    std::optional<std::size_t> frobenius_length() const;
};

/// Decides whether L(ast)* is co-finite over `alphabet` (default: the symbols
/// occurring in `ast`). Throws AlphabetMismatch when the declared alphabet
/// misses a used symbol.
CofiniteResult decide_cofinite(const RegexAst& ast, const std::optional<Alphabet>& alphabet = std::nullopt);

/// Same for S* with S = L(nfa). The NFA's own alphabet is the default.
CofiniteResult decide_cofinite(const Nfa& nfa, const std::optional<Alphabet>& alphabet = std::nullopt);

/// Monoid Frobenius problem for an explicit finite word set. The empty word
/// may appear as "".
CofiniteResult frobenius_of_finite_set(std::span<const Word> words, const Alphabet& alphabet);

/// Regex w1 + w2 + ... for a finite word set; ∅ for the empty set.
RegexAst union_of_words(std::span<const Word> words);

struct NumericFrobenius {
    std::vector<long long> inputs;
    /// Largest non-representable integer; -1 when 1 is among the inputs.
    long long g = -1;
};

/// Coin-problem dynamic programming. Throws PreconditionError on empty input
/// or non-positive values and GcdNotOne when the gcd exceeds 1.
NumericFrobenius numeric_frobenius(std::span<const long long> xs);

struct LengthSpectrum {
    std::vector<std::size_t> lengths;
    /// gcd of the non-zero lengths, 0 when there are none.
    std::size_t gcd = 0;
};

/// Word lengths of L(E) (not L(E)*) up to `horizon`.
LengthSpectrum length_spectrum(const RegexAst& ast, std::size_t horizon);
LengthSpectrum length_spectrum(const Nfa& nfa, std::size_t horizon);

}  // namespace starfrob
