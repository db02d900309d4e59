#include <doctest.h>

#include "starfrob/automata.hpp"
#include "starfrob/errors.hpp"
#include "starfrob/generators.hpp"
#include "starfrob/oracle.hpp"

using namespace starfrob;
using namespace starfrob::oracle;

TEST_CASE("regex_match") {
    CHECK(regex_match(parse_regex("(T+F)F"), "TF"));
    CHECK_FALSE(regex_match(parse_regex("(T+F)F"), "FT"));
    CHECK(regex_match(parse_regex("a*"), ""));
    CHECK_FALSE(regex_match(parse_regex("aa+aaa"), "aaaa"));
    CHECK(regex_match(parse_regex("(a+ε)*b"), "aab"));
    CHECK_FALSE(regex_match(parse_regex("∅"), ""));
    CHECK(regex_match(parse_regex("ε"), ""));
}

TEST_CASE("member_star_dp") {
    const RegexAst two_three = parse_regex("aa+aaa");
    CHECK(member_star_dp(two_three, "aaaaa"));
    CHECK_FALSE(member_star_dp(two_three, "a"));
    CHECK(member_star_dp(two_three, ""));
    CHECK(member_star_dp(parse_regex("∅"), ""));
    CHECK_FALSE(member_star_dp(parse_regex("∅"), "a"));
}

TEST_CASE("bruteforce_cofinite") {
    const RegexAst two_three = parse_regex("aa+aaa");
    const auto conclusive = bruteforce_cofinite(two_three, Alphabet("a"), 10, 3);
    CHECK(conclusive.conclusive);
    REQUIRE(conclusive.verdict.has_value());
    CHECK(conclusive.verdict->cofinite);
    CHECK(conclusive.verdict->frobenius_length == 1);

    const auto parity = bruteforce_cofinite(parse_regex("aa"), Alphabet("a"), 10, 2);
    CHECK(parity.conclusive);
    CHECK_FALSE(parity.verdict->cofinite);
    CHECK(parity.missing[1].length == 3);

    const auto partial = bruteforce_cofinite(two_three, Alphabet("a"), 2);
    CHECK_FALSE(partial.conclusive);
    CHECK_FALSE(partial.verdict.has_value());
    REQUIRE(partial.missing.size() == 1);
    CHECK(partial.missing[0] == MissingLength{1, 1, "a"});

    // Horizon too short for the bound.
    CHECK_FALSE(bruteforce_cofinite(two_three, Alphabet("a"), 4, 3).conclusive);
    CHECK(bruteforce_cofinite(two_three, Alphabet("a"), 5, 3).conclusive);

    const auto counts = bruteforce_cofinite(parse_regex("a"), Alphabet("ab"), 3);
    REQUIRE(counts.missing.size() == 3);
    CHECK(counts.missing[0] == MissingLength{1, 1, "b"});
    CHECK(counts.missing[1] == MissingLength{2, 3, "ab"});
    CHECK(counts.missing[2] == MissingLength{3, 7, "aab"});
}

TEST_CASE("bruteforce_cofinite errors") {
    const RegexAst a = parse_regex("a");
    CHECK_THROWS_AS(bruteforce_cofinite(a, Alphabet("a"), 0), PreconditionError);
    CHECK_THROWS_AS(bruteforce_cofinite(a, Alphabet(), 3), PreconditionError);
    CHECK_THROWS_AS(bruteforce_cofinite(a, Alphabet("ab"), 30), BudgetExceeded);
    CHECK_THROWS_AS(bruteforce_cofinite(a, Alphabet("ab"), 10, std::nullopt, 100), BudgetExceeded);
    CHECK_THROWS_AS(bruteforce_cofinite(parse_regex("ab"), Alphabet("a"), 3), AlphabetMismatch);
}

TEST_CASE("word_count and the worst-case bound") {
    CHECK(word_count(2, 3) == 15);
    CHECK(word_count(1, 9) == 10);
    CHECK(word_count(2, 200) == UINT64_MAX);
    CHECK(worst_case_bound(parse_regex("aa+aaa")) == 64);
}

TEST_CASE("property: enumeration table agrees with member_star_dp word by word") {
    gen::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const Alphabet sigma = i % 2 == 0 ? Alphabet("a") : Alphabet("ab");
        const RegexAst ast = gen::random_regex(rng, sigma, 6);
        const std::size_t horizon = 7;
        const auto report = bruteforce_cofinite(ast, sigma, horizon);
        std::vector<MissingLength> expected;
        for (std::size_t len = 0; len <= horizon; ++len) {
            MissingLength m{len, 0, {}};
            for (const Word& w : gen::all_words(sigma, len)) {
                if (member_star_dp(ast, w)) continue;
                if (m.count++ == 0) m.smallest = w;
            }
            if (m.count > 0) expected.push_back(m);
        }
        REQUIRE(report.missing == expected);
    }
}

TEST_CASE("property: matcher agrees with the non-starred automaton") {
    gen::Rng rng(43);
    for (int i = 0; i < 150; ++i) {
        const Alphabet sigma = i % 2 == 0 ? Alphabet("a") : Alphabet("ab");
        const RegexAst ast = gen::random_regex(rng, sigma, 6);
        const Dfa plain = subset_construct(glushkov(ast), sigma);
        const Dfa starred = subset_construct(glushkov_star(ast), sigma);
        for (std::size_t len = 0; len <= 7; ++len) {
            for (const Word& w : gen::all_words(sigma, len)) {
                REQUIRE(regex_match(ast, w) == plain.accepts(w));
                REQUIRE(member_star_dp(ast, w) == starred.accepts(w));
            }
        }
    }
}

TEST_CASE("property: S* is closed under concatenation") {
    gen::Rng rng(47);
    const Alphabet sigma("ab");
    for (int i = 0; i < 100; ++i) {
        const RegexAst ast = gen::random_regex(rng, sigma, 5);
        std::vector<Word> members;
        for (std::size_t len = 0; len <= 4; ++len) {
            for (const Word& w : gen::all_words(sigma, len)) {
                if (member_star_dp(ast, w)) members.push_back(w);
            }
        }
        for (std::size_t k = 0; k < 20 && !members.empty(); ++k) {
            const Word& u = members[gen::uniform(rng, 0, members.size() - 1)];
            const Word& v = members[gen::uniform(rng, 0, members.size() - 1)];
            CHECK(member_star_dp(ast, u + v));
        }
    }
}
