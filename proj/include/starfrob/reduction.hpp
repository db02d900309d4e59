#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "starfrob/regex.hpp"

namespace starfrob {

/// Non-zero DIMACS literal: +v is variable v, -v its negation.
using Literal = int;
using Clause = std::vector<Literal>;

/// 3SAT instance. Every variable 1..variable_count occurs in some clause and
/// every clause has exactly three literals, none complementary.
class CnfInstance {
public:
    /// Validates the invariants. Throws PreconditionError for an empty clause
    /// list or out-of-range literals, NotThreeSat for clauses of the wrong size
    /// or containing v and -v, UnusedVariable for a variable that never occurs.
    CnfInstance(int variable_count, std::vector<Clause> clauses);

    int variable_count() const noexcept { return variable_count_; }
    std::size_t clause_count() const noexcept { return clauses_.size(); }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    /// `assignment[v - 1]` is the value of variable v.
    bool satisfied_by(const std::vector<bool>& assignment) const;

private:
    int variable_count_;
    std::vector<Clause> clauses_;
};

/// Reads DIMACS CNF (`c` comments, `p cnf n m` header, 0-terminated clauses).
/// Throws FormatError, NotThreeSat or UnusedVariable.
CnfInstance parse_dimacs(std::string_view text);

/// Builds E = e_1 + ... + e_m + (T+F)^n (T+F) where e_i spells the unique
/// assignment falsifying clause i: F for a positive literal, T for a negative
/// one, (T+F) for variables the clause does not mention. Variables appear in
/// ascending index order.
RegexAst cnf_to_regex(const CnfInstance& cnf);

/// Alphabet of every reduction output: {F, T}.
Alphabet reduction_alphabet();

/// Expected symbol count of cnf_to_regex for clauses over three distinct
/// variables: m(2n - 3) + 2n + 2.
std::size_t reduction_symbol_count(std::size_t variable_count, std::size_t clause_count);

inline constexpr int kMaxBruteforceVariables = 24;

/// First satisfying assignment in lexicographic order of (u1, ..., un) with
/// false < true, or nullopt. Throws TooLarge above 24 variables.
std::optional<std::vector<bool>> sat_bruteforce(const CnfInstance& cnf);

struct LemmaVerdict {
    bool cofinite = false;
    bool sigma_m_subset = false;
    bool lemma_respected = false;
};

/// For S ⊆ Σ^m ∪ Σ^n with 0 < m < n: if S* is co-finite then Σ^m ⊆ S.
/// Throws PreconditionError unless 0 < m < n, BadLengths for words of other
/// lengths.
LemmaVerdict check_lemma(std::span<const Word> words, std::size_t m, std::size_t n, const Alphabet& alphabet);

}  // namespace starfrob
