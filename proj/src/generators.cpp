#include "starfrob/generators.hpp"

#include <algorithm>

namespace starfrob::gen {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace {

RegexAst grow(Rng& rng, const Alphabet& alphabet, std::size_t symbols, bool under_star) {
    const std::size_t roll = uniform(rng, 0, 99);
    if (!under_star && roll < 20) return RegexAst::star(grow(rng, alphabet, symbols, true));
    if (symbols == 1) {
        if (roll < 30) return RegexAst::alt(RegexAst::symbol(alphabet[uniform(rng, 0, alphabet.size() - 1)]),
                                            RegexAst::epsilon());
        return RegexAst::symbol(alphabet[uniform(rng, 0, alphabet.size() - 1)]);
    }
    const std::size_t left = uniform(rng, 1, symbols - 1);
    RegexAst l = grow(rng, alphabet, left, false);
    RegexAst r = grow(rng, alphabet, symbols - left, false);
    if (roll < 60) return RegexAst::concat(std::move(l), std::move(r));
    return RegexAst::alt(std::move(l), std::move(r));
}

}  // namespace

RegexAst random_regex(Rng& rng, const Alphabet& alphabet, std::size_t max_symbols) {
    return grow(rng, alphabet, uniform(rng, 1, std::max<std::size_t>(1, max_symbols)), false);
}

CnfInstance random_cnf(Rng& rng, int max_variables, std::size_t max_clauses) {
    const int n = static_cast<int>(uniform(rng, 3, static_cast<std::size_t>(std::max(3, max_variables))));
    const std::size_t min_clauses = (static_cast<std::size_t>(n) + 2) / 3;
    const std::size_t m = uniform(rng, min_clauses, std::max(min_clauses, max_clauses));

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v + 1;
    while (true) {
        std::vector<Clause> clauses;
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t i = 0; i < m; ++i) {
            std::shuffle(order.begin(), order.end(), rng);
            Clause c(order.begin(), order.begin() + 3);
            std::sort(c.begin(), c.end());
            for (Literal& lit : c) {
                used[static_cast<std::size_t>(lit)] = true;
                if (uniform(rng, 0, 1) == 1) lit = -lit;
            }
            clauses.push_back(std::move(c));
        }
        if (std::all_of(used.begin() + 1, used.end(), [](bool u) { return u; })) {
            return CnfInstance(n, std::move(clauses));
        }
    }
}

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t length) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * alphabet.size());
        for (const Word& w : out) {
            for (char c : alphabet) next.push_back(w + c);
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace starfrob::gen
