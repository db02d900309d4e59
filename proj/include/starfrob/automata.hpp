#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starfrob/regex.hpp"

namespace starfrob {

using StateId = std::uint32_t;

/// Epsilon-free nondeterministic automaton over a fixed alphabet.
class Nfa {
public:
    Nfa(std::size_t state_count, Alphabet alphabet);

    std::size_t state_count() const noexcept { return state_count_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    /// Throws UnknownSymbol for symbols outside the alphabet and
    /// PreconditionError for out-of-range states.
    void add_transition(StateId from, Symbol symbol, StateId to);
    void add_initial(StateId state);
    void set_accepting(StateId state, bool accepting = true);

    /// Sorted, without duplicates.
    const std::vector<StateId>& initial() const noexcept { return initial_; }
    bool is_accepting(StateId state) const { return accepting_[state]; }
    std::span<const StateId> successors(StateId state, std::size_t letter) const {
        return delta_[state * alphabet_.size() + letter];
    }
    std::size_t transition_count() const noexcept;

    /// Direct set-based simulation. Throws UnknownSymbol.
    bool accepts(std::string_view word) const;

private:
    void check_state(StateId state) const;

    std::size_t state_count_;
    Alphabet alphabet_;
    std::vector<StateId> initial_;
    std::vector<bool> accepting_;
    std::vector<std::vector<StateId>> delta_;
};

/// Complete deterministic automaton. Immutable once built.
class Dfa {
public:
    /// `table[state * alphabet.size() + letter]` is the successor state.
    /// Throws PreconditionError if the table is not total or refers to
    /// nonexistent states.
    Dfa(Alphabet alphabet, StateId start, std::vector<StateId> table, std::vector<bool> accepting);

    std::size_t state_count() const noexcept { return accepting_.size(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    StateId start() const noexcept { return start_; }
    bool is_accepting(StateId state) const { return accepting_[state]; }
    StateId next(StateId state, std::size_t letter) const { return table_[state * alphabet_.size() + letter]; }

    /// Throws UnknownSymbol.
    bool accepts(std::string_view word) const;

    const std::vector<StateId>& table() const noexcept { return table_; }
    const std::vector<bool>& accepting() const noexcept { return accepting_; }

private:
    Alphabet alphabet_;
    StateId start_;
    std::vector<StateId> table_;
    std::vector<bool> accepting_;
};

/// Position automaton for L(ast): one initial state (id 0) plus one state per
/// symbol occurrence, numbered left to right from 1.
Nfa glushkov(const RegexAst& ast);

/// Position automaton for L(ast)*. Exactly symbol_length(ast) + 1 states; the
/// initial state is accepting and last positions loop back to first positions.
Nfa glushkov_star(const RegexAst& ast);

/// Automaton for L(nfa)*. Adds one fresh initial, accepting state that carries
/// copies of the old initial out-transitions; accepting states get the same
/// copies.
Nfa star_closure(const Nfa& nfa);

/// Reachable-subset determinization over `alphabet`, which must include the
/// NFA's alphabet (AlphabetMismatch otherwise). The result is complete; the
/// empty subset appears as a sink when reachable. Start state is 0 and states
/// are numbered in breadth-first discovery order with letters ascending.
Dfa subset_construct(const Nfa& nfa, const Alphabet& alphabet);

/// Same automaton with accepting and non-accepting states swapped.
Dfa complement(const Dfa& dfa);

/// States that are reachable from the start and can reach an accepting state.
struct UsefulStates {
    std::vector<bool> member;
    std::size_t count = 0;

    bool contains(StateId s) const { return member[s]; }
};

UsefulStates trim_useful(const Dfa& dfa);

/// True iff the trimmed automaton has a cycle, i.e. L(dfa) is infinite.
bool is_infinite(const Dfa& dfa);

struct LengthWitness {
    std::size_t length = 0;
    Word word;

    bool operator==(const LengthWitness&) const = default;
};

/// Smallest length in [lo, hi) at which the DFA accepts some word, with the
/// lexicographically smallest such word. Works on per-length layers of
/// states; never enumerates words.
std::optional<LengthWitness> window_accepts(const Dfa& dfa, std::size_t lo, std::size_t hi);

/// Longest accepted word (lexicographically smallest among the longest).
/// Returns nullopt for the empty language, throws InfiniteLanguage when the
/// language is infinite.
std::optional<LengthWitness> longest_accepted(const Dfa& dfa);

/// Lengths 0..horizon at which the NFA accepts some word.
std::vector<std::size_t> accepted_lengths(const Nfa& nfa, std::size_t horizon);

/// Boolean matrix over NFA states. Entry (p, q) is set iff q is reachable from
/// p on the word consumed so far.
class ReachabilityMatrix {
public:
    explicit ReachabilityMatrix(std::size_t dimension);

    static ReachabilityMatrix identity(std::size_t dimension);
    /// Adjacency matrix of one letter. Throws UnknownSymbol.
    static ReachabilityMatrix letter(const Nfa& nfa, Symbol symbol);

    std::size_t dimension() const noexcept { return dimension_; }
    bool at(std::size_t p, std::size_t q) const { return cells_[p * dimension_ + q] != 0; }
    void set(std::size_t p, std::size_t q, bool value = true) { cells_[p * dimension_ + q] = value ? 1 : 0; }

    /// Advances by one letter: this := this * adjacency.
    void step(const ReachabilityMatrix& adjacency);

    friend ReachabilityMatrix operator*(const ReachabilityMatrix& a, const ReachabilityMatrix& b);
    bool operator==(const ReachabilityMatrix&) const = default;

private:
    std::size_t dimension_;
    std::vector<std::uint8_t> cells_;
};

/// Matrix after consuming `word`, starting from the identity.
ReachabilityMatrix reachability_after(const Nfa& nfa, std::string_view word);

/// True iff the NFA rejects `word`, decided with the reachability matrix: no
/// (initial, accepting) entry is set after the last letter. Throws
/// UnknownSymbol.
bool verify_rejected(const Nfa& nfa, std::string_view word);

/// Line-based NFA text format:
///
///     # comment
///     states 3
///     alphabet ab
///     initial 0
///     accepting 1 2
///     0 a 1
///     1 b 2
///
/// `states` must come first; `alphabet` precedes transitions. Alphabet symbols
/// may be written together or separated by spaces. Throws FormatError.
Nfa parse_nfa(std::string_view text);

/// Inverse of parse_nfa.
std::string to_text(const Nfa& nfa);

}  // namespace starfrob
