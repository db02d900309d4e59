#include "starfrob/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "starfrob/errors.hpp"

namespace starfrob {

std::optional<std::size_t> CofiniteResult::frobenius_length() const {
    if (const auto* c = std::get_if<Cofinite>(&verdict)) return c->frobenius_length;
    return std::nullopt;
}

namespace {

CofiniteResult decide_star(const Nfa& star, const Alphabet& alphabet, std::optional<std::size_t> t) {
    CofiniteResult result{Cofinite{}, alphabet, {}};
    result.stats.nfa_states = star.state_count();
    result.stats.symbol_length = t;

    const Dfa dfa = subset_construct(star, alphabet);
    result.stats.dfa_states = dfa.state_count();

    const Dfa missing = complement(dfa);
    const std::size_t useful = trim_useful(missing).count;
    result.stats.complement_useful_states = useful;

    if (is_infinite(missing)) {
        auto witness = window_accepts(missing, useful, 2 * useful);
        if (!witness) throw std::logic_error("infinite complement without a window witness");
        result.verdict = NotCofinite{std::move(*witness)};
        return result;
    }
    Cofinite cofinite;
    if (auto longest = longest_accepted(missing)) {
        cofinite.frobenius_length = longest->length;
        cofinite.witness = std::move(longest->word);
    }
    result.verdict = std::move(cofinite);
    return result;
}

Alphabet effective_alphabet(const Alphabet& used, const std::optional<Alphabet>& declared) {
    if (!declared) return used;
    if (!declared->includes(used)) {
        throw AlphabetMismatch("declared alphabet '" + declared->symbols() + "' misses symbols of '" +
                               used.symbols() + "'");
    }
    return *declared;
}

LengthSpectrum spectrum_from(std::vector<std::size_t> lengths) {
    LengthSpectrum s;
    for (std::size_t len : lengths) s.gcd = std::gcd(s.gcd, len);
    s.lengths = std::move(lengths);
    return s;
}

}  // namespace

CofiniteResult decide_cofinite(const RegexAst& ast, const std::optional<Alphabet>& alphabet) {
    const Alphabet sigma = effective_alphabet(alphabet_of(ast), alphabet);
    return decide_star(glushkov_star(ast), sigma, symbol_length(ast));
}

CofiniteResult decide_cofinite(const Nfa& nfa, const std::optional<Alphabet>& alphabet) {
    const Alphabet sigma = effective_alphabet(nfa.alphabet(), alphabet);
    return decide_star(star_closure(nfa), sigma, std::nullopt);
}

RegexAst union_of_words(std::span<const Word> words) {
    std::optional<RegexAst> result;
    for (const Word& w : words) {
        std::optional<RegexAst> literal;
        for (char c : w) {
            if (!is_symbol_char(c)) throw PreconditionError(std::string("'") + c + "' cannot be a symbol");
            auto sym = RegexAst::symbol(c);
            literal = literal ? RegexAst::concat(std::move(*literal), std::move(sym)) : std::move(sym);
        }
        RegexAst term = literal ? std::move(*literal) : RegexAst::epsilon();
        result = result ? RegexAst::alt(std::move(*result), std::move(term)) : std::move(term);
    }
    return result ? *result : RegexAst::empty_set();
}

CofiniteResult frobenius_of_finite_set(std::span<const Word> words, const Alphabet& alphabet) {
    return decide_cofinite(union_of_words(words), alphabet);
}

NumericFrobenius numeric_frobenius(std::span<const long long> xs) {
    if (xs.empty()) throw PreconditionError("numeric Frobenius needs at least one integer");
    long long g = 0;
    for (long long x : xs) {
        if (x < 1) throw PreconditionError("inputs must be positive, got " + std::to_string(x));
        g = std::gcd(g, x);
    }
    if (g != 1) throw GcdNotOne(g);

    NumericFrobenius out{{xs.begin(), xs.end()}, -1};
    const long long smallest = *std::min_element(xs.begin(), xs.end());
    const long long largest = *std::max_element(xs.begin(), xs.end());
    if (smallest == 1) return out;

    // Schur's bound g <= (min-1)(max-1) - 1; the scan stops earlier, after
    // `smallest` consecutive representable values.
    const long long limit = (smallest - 1) * (largest - 1) + smallest;
    if (limit > 100'000'000) throw TooLarge("numeric Frobenius search range too large");

    std::vector<bool> representable(static_cast<std::size_t>(limit) + 1, false);
    representable[0] = true;
    long long run = 1;
    for (long long v = 1; v <= limit && run < smallest; ++v) {
        for (long long x : xs) {
            if (x <= v && representable[static_cast<std::size_t>(v - x)]) {
                representable[static_cast<std::size_t>(v)] = true;
                break;
            }
        }
        if (representable[static_cast<std::size_t>(v)]) {
            ++run;
        } else {
            run = 0;
            out.g = v;
        }
    }
    return out;
}

LengthSpectrum length_spectrum(const RegexAst& ast, std::size_t horizon) {
    return length_spectrum(glushkov(ast), horizon);
}

LengthSpectrum length_spectrum(const Nfa& nfa, std::size_t horizon) {
    if (horizon < 1) throw PreconditionError("horizon must be at least 1");
    return spectrum_from(accepted_lengths(nfa, horizon));
}

}  // namespace starfrob
