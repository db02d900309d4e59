#include <doctest.h>

#include <numeric>

#include "starfrob/errors.hpp"
#include "starfrob/frobenius.hpp"
#include "starfrob/generators.hpp"
#include "starfrob/oracle.hpp"

using namespace starfrob;

namespace {

/// Largest value in 0..limit not expressible as a non-negative combination,
/// by plain reachability over 0..limit.
long long dp_oracle(const std::vector<long long>& xs, long long limit) {
    std::vector<bool> ok(static_cast<std::size_t>(limit) + 1, false);
    ok[0] = true;
    long long g = -1;
    for (long long v = 1; v <= limit; ++v) {
        for (long long x : xs) {
            if (x <= v && ok[static_cast<std::size_t>(v - x)]) ok[static_cast<std::size_t>(v)] = true;
        }
        if (!ok[static_cast<std::size_t>(v)]) g = v;
    }
    return g;
}

const Cofinite& as_cofinite(const CofiniteResult& r) {
    REQUIRE(r.cofinite());
    return std::get<Cofinite>(r.verdict);
}

}  // namespace

TEST_CASE("decide_cofinite examples") {
    SUBCASE("a over {a}: nothing missing") {
        const auto r = decide_cofinite(parse_regex("a"), Alphabet("a"));
        CHECK_FALSE(as_cofinite(r).frobenius_length.has_value());
        CHECK_FALSE(as_cofinite(r).witness.has_value());
    }
    SUBCASE("aa over {a}: odd lengths missing") {
        const auto r = decide_cofinite(parse_regex("aa"), Alphabet("a"));
        REQUIRE_FALSE(r.cofinite());
        const auto& w = std::get<NotCofinite>(r.verdict).witness;
        CHECK(w.length >= r.stats.complement_useful_states);
        CHECK(w.length % 2 == 1);
    }
    SUBCASE("aa+aaa over {a}") {
        const RegexAst ast = parse_regex("aa+aaa");
        const auto report = oracle::bruteforce_cofinite(ast, Alphabet("a"), 10);
        REQUIRE(report.missing.size() == 1);
        REQUIRE(report.missing[0].length == 1);
        const auto r = decide_cofinite(ast, Alphabet("a"));
        CHECK(as_cofinite(r).frobenius_length == 1);
        CHECK(as_cofinite(r).witness == "a");
        CHECK(r.stats.nfa_states == 6);
        CHECK(r.stats.symbol_length == 5);
    }
    SUBCASE("a over {a,b}: b^k never in a*") {
        CHECK_FALSE(decide_cofinite(parse_regex("a"), Alphabet("ab")).cofinite());
    }
    SUBCASE("ε over the empty alphabet") {
        const auto r = decide_cofinite(parse_regex("ε"));
        CHECK(r.alphabet.empty());
        CHECK_FALSE(as_cofinite(r).frobenius_length.has_value());
    }
    SUBCASE("L(E) within {ε} over a non-empty alphabet") {
        CHECK_FALSE(decide_cofinite(parse_regex("ε"), Alphabet("a")).cofinite());
        CHECK_FALSE(decide_cofinite(parse_regex("∅"), Alphabet("a")).cofinite());
    }
    SUBCASE("declared alphabet must cover used symbols") {
        CHECK_THROWS_AS(decide_cofinite(parse_regex("ab"), Alphabet("a")), AlphabetMismatch);
    }
}

TEST_CASE("decide_cofinite on the all-sign-patterns reduction instance") {
    const RegexAst e = parse_regex("FFF+FFT+FTF+FTT+TFF+TFT+TTF+TTT+(T+F)(T+F)(T+F)(T+F)");
    const auto report = oracle::bruteforce_cofinite(e, Alphabet("FT"), 12);
    std::vector<std::size_t> lengths;
    for (const auto& m : report.missing) lengths.push_back(m.length);
    REQUIRE(lengths == std::vector<std::size_t>{1, 2, 5});
    REQUIRE(report.missing.back().smallest == "FFFFF");

    const auto r = decide_cofinite(e, Alphabet("FT"));
    CHECK(as_cofinite(r).frobenius_length == 5);
    CHECK(as_cofinite(r).witness == "FFFFF");
}

TEST_CASE("decide_cofinite on NFA input closes under star") {
    // L(M) = {aa, aaa}
    Nfa m(4, Alphabet("a"));
    m.add_initial(0);
    m.add_transition(0, 'a', 1);
    m.add_transition(1, 'a', 2);
    m.add_transition(2, 'a', 3);
    m.set_accepting(2);
    m.set_accepting(3);
    const auto r = decide_cofinite(m);
    CHECK(as_cofinite(r).frobenius_length == 1);
    CHECK(r.stats.nfa_states == 5);
    CHECK_FALSE(r.stats.symbol_length.has_value());
    CHECK_FALSE(decide_cofinite(m, Alphabet("ab")).cofinite());
}

TEST_CASE("frobenius_of_finite_set") {
    const std::vector<Word> two_three{"aa", "aaa"};
    CHECK(frobenius_of_finite_set(two_three, Alphabet("a")).frobenius_length() == 1);

    // Σ^3 over {T,F}: S* holds only lengths divisible by 3. Frozen after the
    // oracle below reported missing words at lengths 1, 2, 4, 5, 7, 8, ...
    const auto sigma3 = gen::all_words(Alphabet("FT"), 3);
    const auto report = oracle::bruteforce_cofinite(union_of_words(sigma3), Alphabet("FT"), 12);
    for (const auto& m : report.missing) REQUIRE(m.length % 3 != 0);
    REQUIRE(report.missing.back().length == 11);
    CHECK_FALSE(frobenius_of_finite_set(sigma3, Alphabet("FT")).cofinite());

    const std::vector<Word> just_empty{""};
    CHECK_FALSE(frobenius_of_finite_set(just_empty, Alphabet("a")).cofinite());
    CHECK(union_of_words({}).kind() == NodeKind::EmptySet);
}

TEST_CASE("numeric_frobenius examples against the DP oracle") {
    auto g = [](std::vector<long long> xs) { return numeric_frobenius(xs).g; };
    CHECK(dp_oracle({2, 3}, 6) == 1);
    CHECK(g({2, 3}) == 1);
    CHECK(g({1, 7}) == -1);
    CHECK(dp_oracle({3, 5}, 15) == 7);
    CHECK(g({3, 5}) == 7);
    CHECK(dp_oracle({6, 10, 15}, 60) == 29);
    CHECK(g({6, 10, 15}) == 29);
    CHECK_THROWS_AS(g({4, 6}), GcdNotOne);
    CHECK_THROWS_AS(g({}), PreconditionError);
    CHECK_THROWS_AS(g({0, 1}), PreconditionError);
    CHECK_THROWS_AS(g({5}), GcdNotOne);
}

TEST_CASE("numeric_frobenius of consecutive integers is n^2 - n - 1") {
    for (long long n = 2; n <= 12; ++n) {
        const long long dp = dp_oracle({n, n + 1}, n * (n + 1));
        REQUIRE(dp == n * n - n - 1);
        CHECK(numeric_frobenius(std::vector<long long>{n, n + 1}).g == dp);
    }
}

TEST_CASE("property: numeric_frobenius matches the DP oracle on random inputs") {
    gen::Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        std::vector<long long> xs;
        const std::size_t k = gen::uniform(rng, 1, 4);
        for (std::size_t j = 0; j < k; ++j) xs.push_back(static_cast<long long>(gen::uniform(rng, 1, 30)));
        const long long gcd = std::accumulate(xs.begin(), xs.end(), 0LL, [](long long a, long long b) {
            return std::gcd(a, b);
        });
        if (gcd != 1) {
            CHECK_THROWS_AS(numeric_frobenius(xs), GcdNotOne);
            continue;
        }
        CHECK(numeric_frobenius(xs).g == dp_oracle(xs, 900));
    }
}

TEST_CASE("length_spectrum") {
    const auto aa = length_spectrum(parse_regex("aa"), 10);
    CHECK(aa.lengths == std::vector<std::size_t>{2});
    CHECK(aa.gcd == 2);
    const auto two_three = length_spectrum(parse_regex("aa+aaa"), 10);
    CHECK(two_three.lengths == std::vector<std::size_t>{2, 3});
    CHECK(two_three.gcd == 1);
    CHECK(length_spectrum(parse_regex("∅"), 5).gcd == 0);
    CHECK(length_spectrum(parse_regex("FTF+(T+F)(T+F)(T+F)(T+F)"), 10).lengths == std::vector<std::size_t>{3, 4});
    CHECK_THROWS_AS(length_spectrum(parse_regex("a"), 0), PreconditionError);
}

TEST_CASE("property: Frobenius witness is missing and nothing longer is") {
    gen::Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const Alphabet sigma = i % 3 == 0 ? Alphabet("ab") : Alphabet("a");
        const RegexAst ast = gen::random_regex(rng, sigma, 6);
        const auto r = decide_cofinite(ast, sigma);
        const Dfa missing = complement(subset_construct(glushkov_star(ast), sigma));
        const std::size_t n = trim_useful(missing).count;
        CHECK(n == r.stats.complement_useful_states);
        if (const auto* c = std::get_if<Cofinite>(&r.verdict)) {
            if (!c->frobenius_length) {
                CHECK(n == 0);
                continue;
            }
            CHECK(c->witness->size() == *c->frobenius_length);
            CHECK_FALSE(oracle::member_star_dp(ast, *c->witness));
            CHECK_FALSE(window_accepts(missing, *c->frobenius_length + 1, *c->frobenius_length + 1 + n));
        } else {
            const auto& w = std::get<NotCofinite>(r.verdict).witness;
            CHECK(w.length >= n);
            CHECK(w.length < 2 * n);
            CHECK_FALSE(oracle::member_star_dp(ast, w.word));
        }
    }
}

TEST_CASE("property: unary verdicts follow the numeric semigroup of lengths") {
    gen::Rng rng(29);
    const Alphabet a("a");
    for (int i = 0; i < 300; ++i) {
        const RegexAst ast = gen::random_regex(rng, a, 6);
        const auto r = decide_cofinite(ast, a);
        const LengthSpectrum s = length_spectrum(ast, 200);
        REQUIRE(r.cofinite() == (s.gcd == 1));
        if (s.gcd != 1) continue;
        std::vector<long long> lengths;
        for (std::size_t len : s.lengths) {
            if (len > 0) lengths.push_back(static_cast<long long>(len));
        }
        const long long g = numeric_frobenius(lengths).g;
        if (g < 0) {
            CHECK_FALSE(r.frobenius_length().has_value());
        } else {
            CHECK(r.frobenius_length() == static_cast<std::size_t>(g));
        }
    }
}
