#include <doctest.h>

#include "starfrob/automata.hpp"
#include "starfrob/errors.hpp"
#include "starfrob/generators.hpp"
#include "starfrob/oracle.hpp"

using namespace starfrob;

namespace {

Dfa star_dfa(std::string_view regex, std::string_view alphabet) {
    return subset_construct(glushkov_star(parse_regex(regex)), Alphabet(alphabet));
}

/// Reachability from p after `word` by plain set simulation, for comparison
/// with the matrix route.
std::vector<bool> simulate_from(const Nfa& nfa, StateId p, std::string_view word) {
    std::vector<bool> current(nfa.state_count(), false);
    current[p] = true;
    for (char c : word) {
        const std::size_t a = *nfa.alphabet().index_of(c);
        std::vector<bool> next(nfa.state_count(), false);
        for (StateId s = 0; s < nfa.state_count(); ++s) {
            if (!current[s]) continue;
            for (StateId t : nfa.successors(s, a)) next[t] = true;
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace

TEST_CASE("glushkov_star shapes") {
    const Nfa a_star = glushkov_star(parse_regex("a"));
    CHECK(a_star.state_count() == 2);
    CHECK(a_star.is_accepting(0));
    CHECK(a_star.accepts(""));
    CHECK(a_star.accepts("aaaa"));

    const Nfa empty = glushkov_star(parse_regex("∅"));
    CHECK(empty.state_count() == 1);
    CHECK(empty.accepts(""));
    CHECK(empty.transition_count() == 0);
}

TEST_CASE("glushkov_star of aa+aaa agrees with the star oracle up to length 10") {
    const RegexAst ast = parse_regex("aa+aaa");
    const Nfa nfa = glushkov_star(ast);
    CHECK(nfa.state_count() == 6);
    // Frozen from member_star_dp: every length except 1 is in {aa, aaa}*.
    const std::vector<bool> expected{true, false, true, true, true, true, true, true, true, true, true};
    for (std::size_t len = 0; len <= 10; ++len) {
        const Word w(len, 'a');
        REQUIRE(oracle::member_star_dp(ast, w) == expected[len]);
        CHECK(nfa.accepts(w) == expected[len]);
    }
}

TEST_CASE("glushkov without star accepts exactly L(E)") {
    const Nfa nfa = glushkov(parse_regex("aa+aaa"));
    CHECK(nfa.state_count() == 6);
    CHECK_FALSE(nfa.accepts(""));
    CHECK(nfa.accepts("aa"));
    CHECK(nfa.accepts("aaa"));
    CHECK_FALSE(nfa.accepts("aaaa"));
    CHECK(glushkov(parse_regex("a*")).accepts(""));
}

TEST_CASE("subset_construct examples") {
    // Reachable subsets, not minimised: {0} then {1}.
    const Dfa a_star = star_dfa("a", "a");
    CHECK(a_star.state_count() == 2);
    CHECK(a_star.is_accepting(0));
    CHECK(a_star.next(0, 0) == 1);
    CHECK(a_star.next(1, 0) == 1);

    const RegexAst aa = parse_regex("aa");
    const Dfa parity = subset_construct(glushkov_star(aa), Alphabet("a"));
    CHECK(parity.state_count() == 3);  // {0}, {1}, {2}
    for (std::size_t len = 0; len <= 10; ++len) {
        const Word w(len, 'a');
        CHECK(parity.accepts(w) == oracle::member_star_dp(aa, w));
        CHECK(parity.accepts(w) == (len % 2 == 0));
    }

    const Dfa with_b = star_dfa("a", "ab");
    CHECK(with_b.state_count() == 3);
    const StateId sink = with_b.next(with_b.start(), 1);
    CHECK_FALSE(with_b.is_accepting(sink));
    CHECK(with_b.next(sink, 0) == sink);
    CHECK(with_b.next(sink, 1) == sink);

    CHECK_THROWS_AS(subset_construct(glushkov_star(parse_regex("ab")), Alphabet("a")), AlphabetMismatch);
}

TEST_CASE("complement swaps accepting states") {
    const Dfa a_star = star_dfa("a", "a");
    const Dfa none = complement(a_star);
    for (std::size_t len = 0; len <= 6; ++len) CHECK_FALSE(none.accepts(Word(len, 'a')));

    const Dfa odd = complement(star_dfa("aa", "a"));
    for (std::size_t len = 0; len <= 9; ++len) CHECK(odd.accepts(Word(len, 'a')) == (len % 2 == 1));
}

TEST_CASE("trim_useful") {
    // 0 -a-> 1 (accepting); 2 is accepting but unreachable.
    const Dfa d(Alphabet("a"), 0, {1, 1, 2}, {false, true, true});
    const UsefulStates u = trim_useful(d);
    CHECK(u.contains(0));
    CHECK(u.contains(1));
    CHECK_FALSE(u.contains(2));
    CHECK(u.count == 2);

    CHECK(trim_useful(complement(star_dfa("a", "a"))).count == 0);
    CHECK(trim_useful(complement(star_dfa("aa", "a"))).count == 3);
}

TEST_CASE("finiteness of complements") {
    CHECK(is_infinite(complement(star_dfa("aa", "a"))));
    CHECK_FALSE(is_infinite(complement(star_dfa("a", "a"))));

    const RegexAst s34 = parse_regex("(T+F)(T+F)(T+F)+(T+F)(T+F)(T+F)(T+F)");
    const Dfa missing = complement(subset_construct(glushkov_star(s34), Alphabet("FT")));
    // Brute force up to length 12: only lengths 1, 2 and 5 have missing words.
    const auto report = oracle::bruteforce_cofinite(s34, Alphabet("FT"), 12);
    std::vector<std::size_t> lengths;
    for (const auto& m : report.missing) lengths.push_back(m.length);
    REQUIRE(lengths == std::vector<std::size_t>{1, 2, 5});
    CHECK_FALSE(is_infinite(missing));
    CHECK_FALSE(window_accepts(missing, 6, 12).has_value());
    const auto longest = longest_accepted(missing);
    REQUIRE(longest.has_value());
    CHECK(longest->length == 5);
    CHECK(longest->word == "FFFFF");
    CHECK(report.missing.back().smallest == "FFFFF");
}

TEST_CASE("window_accepts") {
    const Dfa odd = complement(star_dfa("aa", "a"));
    const auto w = window_accepts(odd, 2, 4);
    REQUIRE(w.has_value());
    CHECK(*w == LengthWitness{3, "aaa"});
    CHECK_FALSE(window_accepts(odd, 2, 3).has_value());
    CHECK_FALSE(window_accepts(complement(star_dfa("a", "a")), 0, 100).has_value());
    CHECK_THROWS_AS(window_accepts(odd, 4, 2), PreconditionError);

    // Lexicographically smallest witness: b-words missing from a*.
    const auto ab = window_accepts(complement(star_dfa("a", "ab")), 1, 5);
    REQUIRE(ab.has_value());
    CHECK(*ab == LengthWitness{1, "b"});
}

TEST_CASE("longest_accepted") {
    CHECK_FALSE(longest_accepted(complement(star_dfa("a", "a"))).has_value());
    // Exactly {a, aa}: 0 -a-> 1 -a-> 2 -a-> 3 (sink).
    const Dfa d(Alphabet("a"), 0, {1, 2, 3, 3}, {false, true, true, false});
    const auto longest = longest_accepted(d);
    REQUIRE(longest.has_value());
    CHECK(*longest == LengthWitness{2, "aa"});
    CHECK_THROWS_AS(longest_accepted(complement(star_dfa("aa", "a"))), InfiniteLanguage);
}

TEST_CASE("verify_rejected uses the reachability matrix") {
    const Nfa aa = glushkov_star(parse_regex("aa"));
    CHECK(verify_rejected(aa, "a"));
    CHECK_FALSE(verify_rejected(aa, "aaaa"));
    CHECK_FALSE(verify_rejected(aa, ""));

    const RegexAst two_three = parse_regex("aa+aaa");
    const Nfa nfa = glushkov_star(two_three);
    CHECK(verify_rejected(nfa, "a") == !oracle::member_star_dp(two_three, "a"));
    CHECK(verify_rejected(nfa, "a"));
    CHECK(verify_rejected(nfa, "aaaaa") == !oracle::member_star_dp(two_three, "aaaaa"));
    CHECK_FALSE(verify_rejected(nfa, "aaaaa"));

    CHECK_THROWS_AS(verify_rejected(aa, "b"), UnknownSymbol);
    CHECK(reachability_after(aa, "") == ReachabilityMatrix::identity(aa.state_count()));
}

TEST_CASE("property: matrix after k letters matches simulation and the reversed product") {
    gen::Rng rng(11);
    const Alphabet sigma("ab");
    for (int i = 0; i < 100; ++i) {
        const RegexAst ast = gen::random_regex(rng, sigma, 6);
        const Nfa nfa = glushkov_star(ast);
        if (nfa.alphabet().size() != 2) continue;
        for (std::size_t len = 0; len <= 5; ++len) {
            for (const Word& w : gen::all_words(sigma, len)) {
                const ReachabilityMatrix m = reachability_after(nfa, w);
                CHECK(m.dimension() == symbol_length(ast) + 1);
                auto product = ReachabilityMatrix::identity(nfa.state_count());
                for (auto it = w.rbegin(); it != w.rend(); ++it) product = ReachabilityMatrix::letter(nfa, *it) * product;
                CHECK(m == product);
                for (StateId p = 0; p < nfa.state_count(); ++p) {
                    const auto reached = simulate_from(nfa, p, w);
                    for (StateId q = 0; q < nfa.state_count(); ++q) REQUIRE(m.at(p, q) == reached[q]);
                }
            }
        }
    }
}

TEST_CASE("property: NFA, DFA, matrix and oracle agree; complement is an involution") {
    gen::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const Alphabet sigma = i % 2 == 0 ? Alphabet("a") : Alphabet("ab");
        const RegexAst ast = gen::random_regex(rng, sigma, 8);
        const Nfa nfa = glushkov_star(ast);
        REQUIRE(nfa.state_count() == symbol_length(ast) + 1);
        const Dfa dfa = subset_construct(nfa, nfa.alphabet());
        CHECK(dfa.state_count() <= (std::size_t{1} << nfa.state_count()));
        const Dfa twice = complement(complement(dfa));
        for (std::size_t len = 0; len <= 6; ++len) {
            for (const Word& w : gen::all_words(nfa.alphabet(), len)) {
                const bool accepted = oracle::member_star_dp(ast, w);
                REQUIRE(nfa.accepts(w) == accepted);
                REQUIRE(dfa.accepts(w) == accepted);
                REQUIRE(verify_rejected(nfa, w) == !accepted);
                REQUIRE(twice.accepts(w) == accepted);
            }
        }
    }
}

TEST_CASE("property: cycle test agrees with the window over [n', 2n')") {
    gen::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const Alphabet sigma = i % 2 == 0 ? Alphabet("a") : Alphabet("ab");
        const RegexAst ast = gen::random_regex(rng, sigma, 7);
        const Dfa missing = complement(subset_construct(glushkov_star(ast), sigma));
        const std::size_t n = trim_useful(missing).count;
        CHECK(is_infinite(missing) == window_accepts(missing, n, 2 * n).has_value());
    }
}

TEST_CASE("star_closure of an NFA") {
    // L = a*b; L* = ε + (a+b)*b. The initial state has a self-loop, so making
    // it accepting directly would wrongly admit "a".
    Nfa m(2, Alphabet("ab"));
    m.add_initial(0);
    m.set_accepting(1);
    m.add_transition(0, 'a', 0);
    m.add_transition(0, 'b', 1);
    const Nfa star = star_closure(m);
    CHECK(star.state_count() == 3);
    CHECK(star.accepts(""));
    CHECK_FALSE(star.accepts("a"));
    CHECK(star.accepts("ab"));
    CHECK(star.accepts("abaab"));
    CHECK_FALSE(star.accepts("aba"));

    gen::Rng rng(9);
    const Alphabet sigma("ab");
    for (int i = 0; i < 100; ++i) {
        const RegexAst ast = gen::random_regex(rng, sigma, 6);
        const Nfa closed = star_closure(glushkov(ast));
        const Nfa direct = glushkov_star(ast);
        for (std::size_t len = 0; len <= 5; ++len) {
            for (const Word& w : gen::all_words(direct.alphabet(), len)) {
                REQUIRE(closed.accepts(w) == direct.accepts(w));
            }
        }
    }
}

TEST_CASE("NFA text format") {
    const Nfa nfa = parse_nfa(
        "# a*b\n"
        "states 2\n"
        "alphabet a b\n"
        "initial 0\n"
        "accepting 1   # final\n"
        "0 a 0\n"
        "0 b 1\n");
    CHECK(nfa.state_count() == 2);
    CHECK(nfa.alphabet().symbols() == "ab");
    CHECK(nfa.accepts("aab"));
    CHECK_FALSE(nfa.accepts("aba"));
    CHECK(to_text(parse_nfa(to_text(nfa))) == to_text(nfa));

    CHECK_THROWS_AS(parse_nfa("alphabet a\nstates 1\n"), FormatError);
    CHECK_THROWS_AS(parse_nfa("states 2\nalphabet a\n0 b 1\n"), FormatError);
    CHECK_THROWS_AS(parse_nfa("states 2\nalphabet a\n0 a 2\n"), FormatError);
    CHECK_THROWS_AS(parse_nfa("states 2\nalphabet a\nbogus\n"), FormatError);
    CHECK_THROWS_AS(parse_nfa("states x\n"), FormatError);
    CHECK_THROWS_AS(parse_nfa("states 2\nalphabet aa\n"), FormatError);
    try {
        parse_nfa("states 2\nalphabet a\n\n0 a 7\n");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("accepted_lengths walks per-length layers") {
    CHECK(accepted_lengths(glushkov(parse_regex("aa+aaa")), 10) == std::vector<std::size_t>{2, 3});
    CHECK(accepted_lengths(glushkov(parse_regex("(ab)*")), 6) == std::vector<std::size_t>{0, 2, 4, 6});
}
