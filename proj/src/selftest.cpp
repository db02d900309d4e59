#include "starfrob/selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "starfrob/automata.hpp"
#include "starfrob/errors.hpp"
#include "starfrob/frobenius.hpp"
#include "starfrob/generators.hpp"
#include "starfrob/oracle.hpp"
#include "starfrob/reduction.hpp"

namespace starfrob {

bool SelftestReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

namespace {

// Enumeration budget for one oracle call inside the selftest.
constexpr std::uint64_t kSelftestBudget = std::uint64_t{1} << 15;

enum class Outcome { Pass, Fail, Inconclusive };

struct CaseResult {
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

CaseResult fail(std::string detail) { return {Outcome::Fail, std::move(detail)}; }

Alphabet small_alphabet(gen::Rng& rng) { return gen::uniform(rng, 0, 1) == 0 ? Alphabet("a") : Alphabet("ab"); }

CaseResult parse_print_case(gen::Rng& rng) {
    const RegexAst ast = gen::random_regex(rng, Alphabet("abc"), 8);
    const std::string text = to_string(ast);
    if (!(parse_regex(text) == ast)) return fail("re-parse of '" + text + "' differs");
    return {};
}

CaseResult language_case(gen::Rng& rng) {
    const Alphabet sigma = small_alphabet(rng);
    const RegexAst ast = gen::random_regex(rng, sigma, 6);
    const Nfa nfa = glushkov_star(ast);
    const std::string text = to_string(ast);
    if (nfa.state_count() != symbol_length(ast) + 1) return fail("state bound violated for " + text);
    const Dfa dfa = subset_construct(nfa, sigma);
    for (std::size_t len = 0; len <= 6; ++len) {
        for (const Word& w : gen::all_words(sigma, len)) {
            const bool by_dfa = dfa.accepts(w);
            const bool by_oracle = oracle::member_star_dp(ast, w);
            const bool foreign = std::any_of(w.begin(), w.end(), [&](char c) { return !nfa.alphabet().contains(c); });
            // Words with letters the expression never uses are rejected outright.
            const bool by_nfa = foreign ? false : nfa.accepts(w);
            const bool by_matrix = foreign ? false : !verify_rejected(nfa, w);
            if (by_nfa != by_dfa || by_dfa != by_matrix || by_matrix != by_oracle) {
                return fail("acceptance of '" + w + "' disagrees for " + text);
            }
        }
    }
    return {};
}

CaseResult oracle_case(gen::Rng& rng) {
    const Alphabet sigma = small_alphabet(rng);
    const RegexAst ast = gen::random_regex(rng, sigma, 6);
    const CofiniteResult result = decide_cofinite(ast, sigma);
    const std::size_t bound = result.stats.complement_useful_states;
    const std::size_t horizon = std::max<std::size_t>(1, 2 * bound);
    if (oracle::word_count(sigma.size(), horizon) > kSelftestBudget) return {Outcome::Inconclusive, {}};
    const auto report = oracle::bruteforce_cofinite(ast, sigma, horizon, bound, kSelftestBudget);
    if (!report.conclusive) return {Outcome::Inconclusive, {}};
    if (report.verdict->cofinite != result.cofinite() ||
        report.verdict->frobenius_length != result.frobenius_length()) {
        return fail("oracle disagrees on " + to_string(ast) + " over " + sigma.symbols());
    }
    return {};
}

CaseResult window_case(gen::Rng& rng) {
    const Alphabet sigma = small_alphabet(rng);
    const RegexAst ast = gen::random_regex(rng, sigma, 6);
    const Dfa missing = complement(subset_construct(glushkov_star(ast), sigma));
    const std::size_t n = trim_useful(missing).count;
    if (is_infinite(missing) != window_accepts(missing, n, 2 * n).has_value()) {
        return fail("window criterion disagrees with cycle test on " + to_string(ast));
    }
    return {};
}

CaseResult soundness_case(gen::Rng& rng) {
    const Alphabet sigma = small_alphabet(rng);
    const RegexAst ast = gen::random_regex(rng, sigma, 6);
    const std::string text = to_string(ast);
    const Dfa star = subset_construct(glushkov_star(ast), sigma);
    const Dfa missing = complement(star);
    const std::size_t n = trim_useful(missing).count;
    const CofiniteResult result = decide_cofinite(ast, sigma);

    if (const auto* nc = std::get_if<NotCofinite>(&result.verdict)) {
        const Word& w = nc->witness.word;
        if (w.size() < n || star.accepts(w)) return fail("bad non-cofinite witness for " + text);
        // Find a repeated state along the first n letters and pump that loop.
        std::vector<std::size_t> seen(missing.state_count(), SIZE_MAX);
        StateId s = missing.start();
        std::size_t loop_begin = 0;
        std::size_t loop_end = 0;
        for (std::size_t i = 0; i <= w.size(); ++i) {
            if (seen[s] != SIZE_MAX) {
                loop_begin = seen[s];
                loop_end = i;
                break;
            }
            seen[s] = i;
            if (i < w.size()) s = missing.next(s, *sigma.index_of(w[i]));
        }
        if (loop_end == 0) return fail("no loop in witness for " + text);
        const Word x = w.substr(0, loop_begin);
        const Word y = w.substr(loop_begin, loop_end - loop_begin);
        const Word z = w.substr(loop_end);
        Word pumped_y = y;
        for (int k = 1; k <= 3; ++k) {
            pumped_y += y;
            const Word pumped = x + pumped_y + z;
            if (star.accepts(pumped) || oracle::member_star_dp(ast, pumped)) {
                return fail("pumped witness accepted for " + text);
            }
        }
        return {};
    }

    const auto& c = std::get<Cofinite>(result.verdict);
    if (c.frobenius_length) {
        if (c.witness->size() != *c.frobenius_length || star.accepts(*c.witness) ||
            oracle::member_star_dp(ast, *c.witness)) {
            return fail("bad Frobenius witness for " + text);
        }
        const std::size_t from = *c.frobenius_length + 1;
        if (window_accepts(missing, from, from + n)) return fail("missing word beyond Frobenius length for " + text);
    } else if (n != 0) {
        return fail("cofinite without missing words but non-empty complement for " + text);
    }
    return {};
}

CaseResult reduction_case(gen::Rng& rng) {
    const CnfInstance cnf = gen::random_cnf(rng, 5, 8);
    const bool satisfiable = sat_bruteforce(cnf).has_value();
    const RegexAst e = cnf_to_regex(cnf);
    const bool not_cofinite = !decide_cofinite(e, reduction_alphabet()).cofinite();
    if (satisfiable != not_cofinite) {
        return fail("reduction equivalence fails for " + to_string(e));
    }
    return {};
}

long long naive_frobenius(const std::vector<long long>& xs, long long limit) {
    long long g = -1;
    for (long long v = 1; v <= limit; ++v) {
        // Representable iff some combination of the inputs sums to v.
        std::function<bool(std::size_t, long long)> reach = [&](std::size_t i, long long rest) {
            if (rest == 0) return true;
            if (i == xs.size()) return false;
            for (long long used = 0; used * xs[i] <= rest; ++used) {
                if (reach(i + 1, rest - used * xs[i])) return true;
            }
            return false;
        };
        if (!reach(0, v)) g = v;
    }
    return g;
}

CaseResult numeric_case(gen::Rng& rng) {
    std::vector<long long> xs;
    do {
        xs.clear();
        const std::size_t k = gen::uniform(rng, 2, 3);
        for (std::size_t i = 0; i < k; ++i) xs.push_back(static_cast<long long>(gen::uniform(rng, 2, 15)));
    } while (std::accumulate(xs.begin(), xs.end(), 0LL, [](long long a, long long b) { return std::gcd(a, b); }) != 1);
    const long long got = numeric_frobenius(xs).g;
    const long long want = naive_frobenius(xs, 15 * 15);
    if (got != want) {
        std::ostringstream msg;
        msg << "numeric Frobenius of";
        for (long long x : xs) msg << ' ' << x;
        msg << " gave " << got << ", expected " << want;
        return fail(msg.str());
    }
    return {};
}

CaseResult lemma_case(gen::Rng& rng) {
    const Alphabet sigma("ab");
    const std::size_t n = gen::uniform(rng, 2, 4);
    const std::size_t m = gen::uniform(rng, 1, n - 1);
    std::vector<Word> words;
    for (std::size_t len : {m, n}) {
        const bool keep_all = gen::uniform(rng, 0, 2) == 0;
        for (const Word& w : gen::all_words(sigma, len)) {
            if (keep_all || gen::uniform(rng, 0, 3) != 0) words.push_back(w);
        }
    }
    const LemmaVerdict v = check_lemma(words, m, n, sigma);
    if (!v.lemma_respected) return fail("lemma violated for m=" + std::to_string(m) + " n=" + std::to_string(n));
    return {};
}

CaseResult unary_case(gen::Rng& rng) {
    const Alphabet sigma("a");
    const RegexAst ast = gen::random_regex(rng, sigma, 6);
    const CofiniteResult result = decide_cofinite(ast, sigma);
    const LengthSpectrum spectrum = length_spectrum(ast, 200);
    const bool generated = spectrum.gcd == 1;
    if (result.cofinite() != generated) return fail("unary verdict disagrees with gcd for " + to_string(ast));
    if (!generated) return {};
    std::vector<long long> lengths;
    for (std::size_t len : spectrum.lengths) {
        if (len > 0) lengths.push_back(static_cast<long long>(len));
    }
    const long long g = numeric_frobenius(lengths).g;
    const auto expected = g < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(g));
    if (result.frobenius_length() != expected) return fail("unary Frobenius mismatch for " + to_string(ast));
    return {};
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, std::size_t cases) {
    using CaseFn = CaseResult (*)(gen::Rng&);
    const std::vector<std::pair<std::string, CaseFn>> suites = {
        {"parse_print_roundtrip", parse_print_case},
        {"language_equality", language_case},
        {"oracle_agreement", oracle_case},
        {"window_criterion", window_case},
        {"verdict_soundness", soundness_case},
        {"reduction_equivalence", reduction_case},
        {"numeric_frobenius", numeric_case},
        {"lemma", lemma_case},
        {"unary_consistency", unary_case},
    };

    SelftestReport report{seed, cases, {}};
    for (std::size_t i = 0; i < suites.size(); ++i) {
        gen::Rng rng(seed * 0x9e3779b97f4a7c15ULL + i);
        SuiteResult suite;
        suite.name = suites[i].first;
        for (std::size_t c = 0; c < cases; ++c) {
            CaseResult r;
            try {
                r = suites[i].second(rng);
            } catch (const std::exception& e) {
                r = fail(std::string("exception: ") + e.what());
            }
            switch (r.outcome) {
                case Outcome::Pass:
                    ++suite.passed;
                    break;
                case Outcome::Inconclusive:
                    ++suite.inconclusive;
                    break;
                case Outcome::Fail:
                    if (suite.failed++ == 0) suite.first_failure = "case " + std::to_string(c) + ": " + r.detail;
                    break;
            }
        }
        report.suites.push_back(std::move(suite));
    }
    return report;
}

}  // namespace starfrob
