// starfrob: co-finiteness of Kleene closures, Frobenius lengths, and the
// 3SAT instance generator.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "starfrob/errors.hpp"

namespace {

using starfrob::cli::Json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitBudget = 4;

struct Common {
    std::string format = "json";
    bool timing = false;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--timing", common.timing, "Report wall-clock time in timing_ms (otherwise 0)");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw starfrob::FormatError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::uint64_t oracle_budget() {
    const char* env = std::getenv("STAR_FROBENIUS_BUDGET");
    if (env == nullptr || *env == '\0') return starfrob::oracle::kDefaultBudget;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) {
        throw starfrob::PreconditionError(std::string("bad STAR_FROBENIUS_BUDGET '") + env + "'");
    }
    return value;
}

/// Literal word argument; `ε` and `EPS` denote the empty word.
starfrob::Word word_argument(const std::string& arg) {
    if (arg == "EPS" || arg == "\xce\xb5") return {};
    return arg;
}

class Stopwatch {
public:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Common& common, const std::string& command, Json echo, Json result, const Stopwatch& clock) {
    const Json out = starfrob::cli::envelope(command, std::move(echo), std::move(result),
                                             common.timing ? clock.elapsed_ms() : 0);
    if (common.format == "text") {
        std::cout << starfrob::cli::render_text(out);
    } else {
        std::cout << out.dump(2) << '\n';
    }
}

std::optional<starfrob::Alphabet> alphabet_option(const std::string& symbols, bool given) {
    if (!given) return std::nullopt;
    return starfrob::Alphabet(symbols);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide co-finiteness of E* and compute Frobenius lengths of languages"};
    app.require_subcommand(1);

    Common common;

    // decide
    std::string decide_regex;
    std::string decide_file;
    std::string decide_nfa;
    std::string decide_alphabet;
    auto* decide = app.add_subcommand("decide", "Decide whether E* (or L(M)*) is co-finite");
    decide->add_option("regex", decide_regex, "Regular expression");
    decide->add_option("-f,--file", decide_file, "Read the regular expression from a file");
    decide->add_option("--nfa", decide_nfa, "Read an NFA in text format ('-' for stdin)");
    auto* decide_alpha_opt = decide->add_option("--alphabet", decide_alphabet, "Alphabet, e.g. ab");
    add_common(decide, common);

    // frobenius
    std::vector<std::string> set_words;
    std::string set_alphabet;
    auto* frobenius = app.add_subcommand("frobenius", "Monoid Frobenius problem for a finite word set");
    frobenius->add_option("words", set_words, "Words of the set (EPS for the empty word)")->required();
    auto* set_alpha_opt = frobenius->add_option("--alphabet", set_alphabet, "Alphabet (default: symbols used)");
    add_common(frobenius, common);

    // reduce
    std::string reduce_file = "-";
    bool reduce_decide = false;
    auto* reduce = app.add_subcommand("reduce", "Build the star-free expression for a 3SAT instance");
    reduce->add_option("cnf", reduce_file, "DIMACS CNF file ('-' for stdin)");
    reduce->add_flag("--decide", reduce_decide, "Also decide co-finiteness of the result");
    add_common(reduce, common);

    // sat
    std::string sat_file = "-";
    auto* sat = app.add_subcommand("sat", "Brute-force satisfiability of a small 3SAT instance");
    sat->add_option("cnf", sat_file, "DIMACS CNF file ('-' for stdin)");
    add_common(sat, common);

    // oracle
    std::string oracle_regex;
    std::string oracle_file;
    std::string oracle_alphabet;
    std::size_t oracle_horizon = 0;
    std::size_t oracle_bound = 0;
    bool oracle_worst_case = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive enumeration of words missing from E*");
    oracle_cmd->add_option("regex", oracle_regex, "Regular expression");
    oracle_cmd->add_option("-f,--file", oracle_file, "Read the regular expression from a file");
    auto* oracle_alpha_opt = oracle_cmd->add_option("--alphabet", oracle_alphabet, "Alphabet");
    auto* horizon_opt = oracle_cmd->add_option("--horizon", oracle_horizon, "Longest word length to enumerate");
    auto* bound_opt = oracle_cmd->add_option("--bound", oracle_bound, "Sound bound for a conclusive verdict");
    auto* worst_case_opt =
        oracle_cmd->add_flag("--worst-case-bound", oracle_worst_case, "Use the worst-case bound 2^(t+1)");
    bound_opt->excludes(worst_case_opt);
    add_common(oracle_cmd, common);

    // numeric
    std::vector<long long> numbers;
    auto* numeric = app.add_subcommand("numeric", "Frobenius number of positive integers");
    numeric->add_option("numbers", numbers, "Positive integers")->required();
    add_common(numeric, common);

    // selftest
    std::uint64_t seed = 42;
    std::size_t cases = 200;
    auto* selftest = app.add_subcommand("selftest", "Run the seeded cross-module property suites");
    selftest->add_option("--seed", seed, "Generator seed");
    selftest->add_option("--cases", cases, "Cases per suite");
    add_common(selftest, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    const Stopwatch clock;
    try {
        auto load_regex = [](const std::string& inline_text, const std::string& file) {
            if (!inline_text.empty() && !file.empty()) {
                throw starfrob::PreconditionError("give the expression inline or with -f, not both");
            }
            if (file.empty() && inline_text.empty()) throw starfrob::PreconditionError("no regular expression given");
            return starfrob::parse_regex(file.empty() ? inline_text : read_input(file));
        };

        if (decide->parsed()) {
            const auto declared = alphabet_option(decide_alphabet, decide_alpha_opt->count() > 0);
            Json echo;
            starfrob::CofiniteResult result{starfrob::Cofinite{}, {}, {}};
            if (!decide_nfa.empty()) {
                if (!decide_regex.empty() || !decide_file.empty()) {
                    throw starfrob::PreconditionError("--nfa cannot be combined with a regular expression");
                }
                const starfrob::Nfa nfa = starfrob::parse_nfa(read_input(decide_nfa));
                result = starfrob::decide_cofinite(nfa, declared);
                echo["nfa"] = decide_nfa;
            } else {
                const auto ast = load_regex(decide_regex, decide_file);
                result = starfrob::decide_cofinite(ast, declared);
                echo["regex"] = starfrob::to_string(ast);
            }
            echo["alphabet"] = result.alphabet.symbols();
            emit(common, "decide", std::move(echo), starfrob::cli::decision_body(result), clock);
        } else if (frobenius->parsed()) {
            std::vector<starfrob::Word> words;
            std::string used;
            for (const auto& arg : set_words) {
                words.push_back(word_argument(arg));
                used += words.back();
            }
            const starfrob::Alphabet sigma = set_alpha_opt->count() > 0
                                                 ? starfrob::Alphabet(set_alphabet)
                                                 : starfrob::Alphabet::from_unordered(used);
            if (!sigma.includes(starfrob::Alphabet::from_unordered(used))) {
                throw starfrob::AlphabetMismatch("alphabet '" + sigma.symbols() + "' misses symbols of the words");
            }
            const auto result = starfrob::frobenius_of_finite_set(words, sigma);
            Json echo;
            echo["words"] = words;
            echo["alphabet"] = sigma.symbols();
            emit(common, "frobenius", std::move(echo), starfrob::cli::decision_body(result), clock);
        } else if (reduce->parsed()) {
            const auto cnf = starfrob::parse_dimacs(read_input(reduce_file));
            const auto regex = starfrob::cnf_to_regex(cnf);
            Json body = starfrob::cli::reduction_body(cnf, regex);
            if (reduce_decide) {
                body["decision"] = starfrob::cli::decision_body(
                    starfrob::decide_cofinite(regex, starfrob::reduction_alphabet()));
            }
            Json echo;
            echo["cnf"] = reduce_file;
            echo["decide"] = reduce_decide;
            emit(common, "reduce", std::move(echo), std::move(body), clock);
        } else if (sat->parsed()) {
            const auto cnf = starfrob::parse_dimacs(read_input(sat_file));
            Json echo;
            echo["cnf"] = sat_file;
            emit(common, "sat", std::move(echo), starfrob::cli::sat_body(starfrob::sat_bruteforce(cnf)), clock);
        } else if (oracle_cmd->parsed()) {
            const auto ast = load_regex(oracle_regex, oracle_file);
            const starfrob::Alphabet sigma = oracle_alpha_opt->count() > 0 ? starfrob::Alphabet(oracle_alphabet)
                                                                           : starfrob::alphabet_of(ast);
            const std::uint64_t budget = oracle_budget();
            std::optional<std::size_t> bound;
            if (bound_opt->count() > 0) bound = oracle_bound;
            if (oracle_worst_case) bound = starfrob::oracle::worst_case_bound(ast);

            std::size_t horizon = oracle_horizon;
            if (horizon_opt->count() == 0) {
                if (!bound) throw starfrob::PreconditionError("--horizon is required without a bound");
                horizon = *bound > 0 ? 2 * *bound - 1 : 1;
                if (*bound > SIZE_MAX / 2 || starfrob::oracle::word_count(sigma.size(), horizon) > budget) {
                    horizon = 1;
                    while (starfrob::oracle::word_count(sigma.size(), horizon + 1) <= budget &&
                           horizon < 4096) {
                        ++horizon;
                    }
                    std::cerr << "warning: the bound needs words up to length " << (*bound > SIZE_MAX / 2 ? SIZE_MAX : 2 * *bound - 1)
                              << ", beyond the enumeration budget; enumerating up to length " << horizon
                              << " (inconclusive)\n";
                }
            }
            const auto report = starfrob::oracle::bruteforce_cofinite(ast, sigma, horizon, bound, budget);
            Json echo;
            echo["regex"] = starfrob::to_string(ast);
            echo["alphabet"] = sigma.symbols();
            echo["bound"] = bound ? Json(*bound) : Json(nullptr);
            emit(common, "oracle", std::move(echo), starfrob::cli::oracle_body(report), clock);
        } else if (numeric->parsed()) {
            const auto result = starfrob::numeric_frobenius(numbers);
            Json echo;
            echo["inputs"] = numbers;
            emit(common, "numeric", std::move(echo), starfrob::cli::numeric_body(result), clock);
        } else if (selftest->parsed()) {
            const auto report = starfrob::run_selftest(seed, cases);
            Json echo;
            echo["seed"] = seed;
            echo["cases"] = cases;
            emit(common, "selftest", std::move(echo), starfrob::cli::selftest_body(report), clock);
            return report.ok() ? kExitOk : kExitInternal;
        }
    } catch (const starfrob::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.category()) {
            case starfrob::Error::Category::Input:
                return kExitInput;
            case starfrob::Error::Category::Semantic:
                return kExitSemantic;
            case starfrob::Error::Category::Budget:
                return kExitBudget;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}
