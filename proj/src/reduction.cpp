#include "starfrob/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

#include "starfrob/errors.hpp"
#include "starfrob/frobenius.hpp"

namespace starfrob {

CnfInstance::CnfInstance(int variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses)) {
    if (variable_count_ < 1) throw PreconditionError("a CNF instance needs at least one variable");
    if (clauses_.empty()) throw PreconditionError("a CNF instance needs at least one clause");
    std::vector<bool> used(static_cast<std::size_t>(variable_count_) + 1, false);
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
        const Clause& c = clauses_[i];
        if (c.size() != 3) {
            throw NotThreeSat("clause " + std::to_string(i + 1) + " has " + std::to_string(c.size()) +
                              " literals, expected 3");
        }
        for (Literal lit : c) {
            const int v = std::abs(lit);
            if (lit == 0 || v > variable_count_) {
                throw PreconditionError("literal " + std::to_string(lit) + " out of range");
            }
            if (std::find(c.begin(), c.end(), -lit) != c.end()) {
                throw NotThreeSat("clause " + std::to_string(i + 1) + " is a tautology (contains " +
                                  std::to_string(v) + " and -" + std::to_string(v) + ")");
            }
            used[static_cast<std::size_t>(v)] = true;
        }
    }
    for (int v = 1; v <= variable_count_; ++v) {
        if (!used[static_cast<std::size_t>(v)]) throw UnusedVariable(v);
    }
}

bool CnfInstance::satisfied_by(const std::vector<bool>& assignment) const {
    return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](Literal lit) {
            const bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
            return lit > 0 ? value : !value;
        });
    });
}

CnfInstance parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<int, std::size_t>> header;
    std::vector<Clause> clauses;
    Clause current;
    std::size_t clause_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::string first;
        if (!(words >> first)) continue;
        if (first == "c") continue;
        if (first == "%") break;
        if (first == "p") {
            if (header) throw FormatError("duplicate header", line_no);
            std::string format;
            long long n = -1;
            long long m = -1;
            std::string extra;
            if (!(words >> format >> n >> m) || format != "cnf" || n < 1 || m < 1 || (words >> extra)) {
                throw FormatError("expected 'p cnf <variables> <clauses>' with positive counts", line_no);
            }
            header = std::make_pair(static_cast<int>(n), static_cast<std::size_t>(m));
            continue;
        }
        if (!header) throw FormatError("clause before 'p cnf' header", line_no);

        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            char* end = nullptr;
            const long value = std::strtol(token.c_str(), &end, 10);
            if (end == token.c_str() || *end != '\0') throw FormatError("bad token '" + token + "'", line_no);
            if (value == 0) {
                if (current.size() != 3) {
                    throw NotThreeSat("clause ending on line " + std::to_string(line_no) + " has " +
                                      std::to_string(current.size()) + " literals, expected 3");
                }
                clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::labs(value) > header->first) {
                throw FormatError("literal " + token + " exceeds declared variable count", line_no);
            }
            if (current.empty()) clause_line = line_no;
            current.push_back(static_cast<Literal>(value));
        }
    }
    if (!header) throw FormatError("missing 'p cnf' header");
    if (!current.empty()) throw FormatError("clause not terminated by 0", clause_line);
    if (clauses.size() != header->second) {
        throw FormatError("header declares " + std::to_string(header->second) + " clauses, found " +
                          std::to_string(clauses.size()));
    }
    return CnfInstance(header->first, std::move(clauses));
}

Alphabet reduction_alphabet() { return Alphabet("FT"); }

namespace {

RegexAst either() { return RegexAst::alt(RegexAst::symbol('T'), RegexAst::symbol('F')); }

RegexAst append(std::optional<RegexAst> prefix, RegexAst next) {
    return prefix ? RegexAst::concat(std::move(*prefix), std::move(next)) : std::move(next);
}

}  // namespace

RegexAst cnf_to_regex(const CnfInstance& cnf) {
    const int n = cnf.variable_count();
    std::optional<RegexAst> alternatives;
    for (const Clause& clause : cnf.clauses()) {
        std::optional<RegexAst> term;
        for (int v = 1; v <= n; ++v) {
            RegexAst factor = either();
            if (std::find(clause.begin(), clause.end(), v) != clause.end()) {
                factor = RegexAst::symbol('F');
            } else if (std::find(clause.begin(), clause.end(), -v) != clause.end()) {
                factor = RegexAst::symbol('T');
            }
            term = append(std::move(term), std::move(factor));
        }
        alternatives = alternatives ? RegexAst::alt(std::move(*alternatives), std::move(*term)) : std::move(*term);
    }
    std::optional<RegexAst> all_longer;
    for (int v = 0; v <= n; ++v) all_longer = append(std::move(all_longer), either());
    return RegexAst::alt(std::move(*alternatives), std::move(*all_longer));
}

std::size_t reduction_symbol_count(std::size_t variable_count, std::size_t clause_count) {
    return clause_count * (2 * variable_count - 3) + 2 * variable_count + 2;
}

std::optional<std::vector<bool>> sat_bruteforce(const CnfInstance& cnf) {
    const int n = cnf.variable_count();
    if (n > kMaxBruteforceVariables) {
        throw TooLarge(std::to_string(n) + " variables exceeds the brute-force limit of " +
                       std::to_string(kMaxBruteforceVariables));
    }
    std::vector<bool> assignment(static_cast<std::size_t>(n));
    const std::uint64_t total = std::uint64_t{1} << n;
    // u1 is the most significant bit, so counting up walks the vectors in
    // lexicographic order.
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (int v = 0; v < n; ++v) assignment[static_cast<std::size_t>(v)] = (bits >> (n - 1 - v)) & 1U;
        if (cnf.satisfied_by(assignment)) return assignment;
    }
    return std::nullopt;
}

LemmaVerdict check_lemma(std::span<const Word> words, std::size_t m, std::size_t n, const Alphabet& alphabet) {
    if (m == 0 || m >= n) throw PreconditionError("check_lemma requires 0 < m < n");
    std::set<Word> of_length_m;
    for (const Word& w : words) {
        if (w.size() != m && w.size() != n) {
            throw BadLengths("word '" + w + "' has length " + std::to_string(w.size()) + ", expected " +
                             std::to_string(m) + " or " + std::to_string(n));
        }
        for (char c : w) {
            if (!alphabet.contains(c)) throw UnknownSymbol(c);
        }
        if (w.size() == m) of_length_m.insert(w);
    }
    // |Σ|^m, saturating well above any set we could be handed.
    std::size_t sigma_m = 1;
    for (std::size_t i = 0; i < m && sigma_m <= words.size(); ++i) sigma_m *= alphabet.size();

    LemmaVerdict verdict;
    verdict.cofinite = frobenius_of_finite_set(words, alphabet).cofinite();
    verdict.sigma_m_subset = of_length_m.size() == sigma_m;
    verdict.lemma_respected = !verdict.cofinite || verdict.sigma_m_subset;
    return verdict;
}

}  // namespace starfrob
