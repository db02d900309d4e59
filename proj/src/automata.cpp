#include "starfrob/automata.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "starfrob/errors.hpp"

namespace starfrob {

// ---------------------------------------------------------------- Nfa

Nfa::Nfa(std::size_t state_count, Alphabet alphabet)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      accepting_(state_count, false),
      delta_(state_count * alphabet_.size()) {}

void Nfa::check_state(StateId state) const {
    if (state >= state_count_) {
        throw PreconditionError("state " + std::to_string(state) + " out of range (" +
                                std::to_string(state_count_) + " states)");
    }
}

void Nfa::add_transition(StateId from, Symbol symbol, StateId to) {
    check_state(from);
    check_state(to);
    const auto letter = alphabet_.index_of(symbol);
    if (!letter) throw UnknownSymbol(symbol);
    auto& targets = delta_[from * alphabet_.size() + *letter];
    auto it = std::lower_bound(targets.begin(), targets.end(), to);
    if (it == targets.end() || *it != to) targets.insert(it, to);
}

void Nfa::add_initial(StateId state) {
    check_state(state);
    auto it = std::lower_bound(initial_.begin(), initial_.end(), state);
    if (it == initial_.end() || *it != state) initial_.insert(it, state);
}

void Nfa::set_accepting(StateId state, bool accepting) {
    check_state(state);
    accepting_[state] = accepting;
}

std::size_t Nfa::transition_count() const noexcept {
    std::size_t n = 0;
    for (const auto& targets : delta_) n += targets.size();
    return n;
}

bool Nfa::accepts(std::string_view word) const {
    std::vector<bool> current(state_count_, false);
    for (StateId s : initial_) current[s] = true;
    for (char c : word) {
        const auto letter = alphabet_.index_of(c);
        if (!letter) throw UnknownSymbol(c);
        std::vector<bool> next(state_count_, false);
        for (StateId s = 0; s < state_count_; ++s) {
            if (!current[s]) continue;
            for (StateId t : successors(s, *letter)) next[t] = true;
        }
        current = std::move(next);
    }
    for (StateId s = 0; s < state_count_; ++s) {
        if (current[s] && accepting_[s]) return true;
    }
    return false;
}

// ---------------------------------------------------------------- Dfa

Dfa::Dfa(Alphabet alphabet, StateId start, std::vector<StateId> table, std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)), start_(start), table_(std::move(table)), accepting_(std::move(accepting)) {
    const std::size_t n = accepting_.size();
    if (n == 0) throw PreconditionError("a DFA needs at least one state");
    if (table_.size() != n * alphabet_.size()) throw PreconditionError("DFA transition table is not total");
    if (start_ >= n) throw PreconditionError("DFA start state out of range");
    for (StateId t : table_) {
        if (t >= n) throw PreconditionError("DFA transition to nonexistent state");
    }
}

bool Dfa::accepts(std::string_view word) const {
    StateId s = start_;
    for (char c : word) {
        const auto letter = alphabet_.index_of(c);
        if (!letter) throw UnknownSymbol(c);
        s = next(s, *letter);
    }
    return accepting_[s];
}

// ---------------------------------------------------------------- Glushkov

namespace {

struct PositionSets {
    bool nullable = false;
    std::vector<StateId> first;
    std::vector<StateId> last;
};

struct PositionBuilder {
    std::vector<Symbol> letters{0};  // index 0 is the initial state
    std::vector<std::vector<StateId>> follow{{}};

    PositionSets visit(const RegexAst& ast) {
        switch (ast.kind()) {
            case NodeKind::EmptySet:
                return {false, {}, {}};
            case NodeKind::Epsilon:
                return {true, {}, {}};
            case NodeKind::Symbol: {
                const auto p = static_cast<StateId>(letters.size());
                letters.push_back(ast.letter());
                follow.emplace_back();
                return {false, {p}, {p}};
            }
            case NodeKind::Union: {
                PositionSets l = visit(ast.left());
                PositionSets r = visit(ast.right());
                l.nullable = l.nullable || r.nullable;
                l.first.insert(l.first.end(), r.first.begin(), r.first.end());
                l.last.insert(l.last.end(), r.last.begin(), r.last.end());
                return l;
            }
            case NodeKind::Concat: {
                PositionSets l = visit(ast.left());
                PositionSets r = visit(ast.right());
                link(l.last, r.first);
                PositionSets out;
                out.nullable = l.nullable && r.nullable;
                out.first = l.first;
                if (l.nullable) out.first.insert(out.first.end(), r.first.begin(), r.first.end());
                out.last = r.last;
                if (r.nullable) out.last.insert(out.last.end(), l.last.begin(), l.last.end());
                return out;
            }
            case NodeKind::Star: {
                PositionSets c = visit(ast.left());
                link(c.last, c.first);
                c.nullable = true;
                return c;
            }
        }
        return {};
    }

    void link(const std::vector<StateId>& from, const std::vector<StateId>& to) {
        for (StateId p : from) follow[p].insert(follow[p].end(), to.begin(), to.end());
    }

    Nfa build(const PositionSets& top, bool starred, const Alphabet& alphabet) {
        Nfa nfa(letters.size(), alphabet);
        nfa.add_initial(0);
        for (StateId q : top.first) nfa.add_transition(0, letters[q], q);
        for (StateId p = 1; p < letters.size(); ++p) {
            for (StateId q : follow[p]) nfa.add_transition(p, letters[q], q);
        }
        for (StateId p : top.last) nfa.set_accepting(p);
        if (starred) {
            for (StateId p : top.last) {
                for (StateId q : top.first) nfa.add_transition(p, letters[q], q);
            }
            nfa.set_accepting(0);
        } else if (top.nullable) {
            nfa.set_accepting(0);
        }
        return nfa;
    }
};

Nfa build_position_automaton(const RegexAst& ast, bool starred) {
    PositionBuilder builder;
    const PositionSets top = builder.visit(ast);
    return builder.build(top, starred, alphabet_of(ast));
}

}  // namespace

Nfa glushkov(const RegexAst& ast) { return build_position_automaton(ast, false); }

Nfa glushkov_star(const RegexAst& ast) { return build_position_automaton(ast, true); }

Nfa star_closure(const Nfa& nfa) {
    const std::size_t n = nfa.state_count();
    const auto fresh = static_cast<StateId>(n);
    const Alphabet& sigma = nfa.alphabet();
    Nfa out(n + 1, sigma);
    for (StateId s = 0; s < n; ++s) {
        if (nfa.is_accepting(s)) out.set_accepting(s);
        for (std::size_t a = 0; a < sigma.size(); ++a) {
            for (StateId t : nfa.successors(s, a)) out.add_transition(s, sigma[a], t);
        }
    }
    out.add_initial(fresh);
    out.set_accepting(fresh);
    for (StateId i : nfa.initial()) {
        for (std::size_t a = 0; a < sigma.size(); ++a) {
            for (StateId t : nfa.successors(i, a)) {
                out.add_transition(fresh, sigma[a], t);
                for (StateId f = 0; f < n; ++f) {
                    if (nfa.is_accepting(f)) out.add_transition(f, sigma[a], t);
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- subsets

namespace {

using Subset = std::vector<std::uint64_t>;

struct SubsetHash {
    std::size_t operator()(const Subset& s) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint64_t w : s) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

Dfa subset_construct(const Nfa& nfa, const Alphabet& alphabet) {
    if (!alphabet.includes(nfa.alphabet())) {
        throw AlphabetMismatch("alphabet '" + alphabet.symbols() + "' does not include NFA alphabet '" +
                               nfa.alphabet().symbols() + "'");
    }
    const std::size_t n = nfa.state_count();
    const std::size_t words = (n + 63) / 64;
    const std::size_t k = alphabet.size();

    // letter index in the target alphabet -> index in the NFA alphabet
    std::vector<std::optional<std::size_t>> nfa_letter(k);
    for (std::size_t a = 0; a < k; ++a) nfa_letter[a] = nfa.alphabet().index_of(alphabet[a]);

    std::unordered_map<Subset, StateId, SubsetHash> ids;
    std::vector<Subset> subsets;
    std::vector<StateId> table;
    std::vector<bool> accepting;

    auto intern = [&](Subset s) -> StateId {
        auto [it, inserted] = ids.try_emplace(s, static_cast<StateId>(subsets.size()));
        if (inserted) {
            bool acc = false;
            for (std::size_t q = 0; q < n && !acc; ++q) {
                acc = ((s[q / 64] >> (q % 64)) & 1U) && nfa.is_accepting(static_cast<StateId>(q));
            }
            accepting.push_back(acc);
            subsets.push_back(std::move(s));
        }
        return it->second;
    };

    Subset start(words, 0);
    for (StateId s : nfa.initial()) start[s / 64] |= std::uint64_t{1} << (s % 64);
    intern(std::move(start));

    for (std::size_t current = 0; current < subsets.size(); ++current) {
        for (std::size_t a = 0; a < k; ++a) {
            Subset target(words, 0);
            if (nfa_letter[a]) {
                const Subset& from = subsets[current];
                for (std::size_t q = 0; q < n; ++q) {
                    if (!((from[q / 64] >> (q % 64)) & 1U)) continue;
                    for (StateId t : nfa.successors(static_cast<StateId>(q), *nfa_letter[a])) {
                        target[t / 64] |= std::uint64_t{1} << (t % 64);
                    }
                }
            }
            const StateId id = intern(std::move(target));
            table.push_back(id);
        }
    }
    return Dfa(alphabet, 0, std::move(table), std::move(accepting));
}

Dfa complement(const Dfa& dfa) {
    std::vector<bool> flipped = dfa.accepting();
    flipped.flip();
    return Dfa(dfa.alphabet(), dfa.start(), dfa.table(), std::move(flipped));
}

// ---------------------------------------------------------------- analysis

UsefulStates trim_useful(const Dfa& dfa) {
    const std::size_t n = dfa.state_count();
    const std::size_t k = dfa.alphabet().size();

    std::vector<bool> reachable(n, false);
    std::vector<StateId> stack{dfa.start()};
    reachable[dfa.start()] = true;
    while (!stack.empty()) {
        const StateId s = stack.back();
        stack.pop_back();
        for (std::size_t a = 0; a < k; ++a) {
            const StateId t = dfa.next(s, a);
            if (!reachable[t]) {
                reachable[t] = true;
                stack.push_back(t);
            }
        }
    }

    std::vector<std::vector<StateId>> reverse(n);
    for (StateId s = 0; s < n; ++s) {
        for (std::size_t a = 0; a < k; ++a) reverse[dfa.next(s, a)].push_back(s);
    }
    std::vector<bool> productive(n, false);
    for (StateId s = 0; s < n; ++s) {
        if (dfa.is_accepting(s)) {
            productive[s] = true;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        const StateId s = stack.back();
        stack.pop_back();
        for (StateId p : reverse[s]) {
            if (!productive[p]) {
                productive[p] = true;
                stack.push_back(p);
            }
        }
    }

    UsefulStates useful;
    useful.member.assign(n, false);
    for (StateId s = 0; s < n; ++s) {
        if (reachable[s] && productive[s]) {
            useful.member[s] = true;
            ++useful.count;
        }
    }
    return useful;
}

namespace {

/// Kahn's algorithm on the trimmed automaton. Returns the topological order,
/// which is shorter than `useful.count` exactly when a cycle exists.
std::vector<StateId> useful_topological_order(const Dfa& dfa, const UsefulStates& useful) {
    const std::size_t n = dfa.state_count();
    const std::size_t k = dfa.alphabet().size();
    std::vector<std::size_t> indegree(n, 0);
    for (StateId s = 0; s < n; ++s) {
        if (!useful.contains(s)) continue;
        for (std::size_t a = 0; a < k; ++a) {
            const StateId t = dfa.next(s, a);
            if (useful.contains(t)) ++indegree[t];
        }
    }
    std::vector<StateId> order;
    order.reserve(useful.count);
    for (StateId s = 0; s < n; ++s) {
        if (useful.contains(s) && indegree[s] == 0) order.push_back(s);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        const StateId s = order[i];
        for (std::size_t a = 0; a < k; ++a) {
            const StateId t = dfa.next(s, a);
            if (useful.contains(t) && --indegree[t] == 0) order.push_back(t);
        }
    }
    return order;
}

}  // namespace

bool is_infinite(const Dfa& dfa) {
    const UsefulStates useful = trim_useful(dfa);
    return useful_topological_order(dfa, useful).size() < useful.count;
}

std::optional<LengthWitness> window_accepts(const Dfa& dfa, std::size_t lo, std::size_t hi) {
    if (lo > hi) throw PreconditionError("window lower bound exceeds upper bound");
    const UsefulStates useful = trim_useful(dfa);
    if (useful.count == 0 || lo == hi) return std::nullopt;

    const std::size_t n = dfa.state_count();
    const std::size_t k = dfa.alphabet().size();

    // Forward layers: useful states reachable in exactly `len` steps.
    std::vector<bool> layer(n, false);
    layer[dfa.start()] = true;
    std::optional<std::size_t> found;
    for (std::size_t len = 0; len < hi; ++len) {
        if (len >= lo) {
            for (StateId s = 0; s < n; ++s) {
                if (layer[s] && dfa.is_accepting(s)) {
                    found = len;
                    break;
                }
            }
            if (found) break;
        }
        std::vector<bool> next(n, false);
        bool any = false;
        for (StateId s = 0; s < n; ++s) {
            if (!layer[s]) continue;
            for (std::size_t a = 0; a < k; ++a) {
                const StateId t = dfa.next(s, a);
                if (useful.contains(t)) next[t] = any = true;
            }
        }
        if (!any) return std::nullopt;
        layer = std::move(next);
    }
    if (!found) return std::nullopt;

    // Backward layers: can_finish[r][s] iff an accepting state is reachable
    // from s in exactly r steps.
    const std::size_t length = *found;
    std::vector<std::vector<bool>> can_finish(length + 1, std::vector<bool>(n, false));
    for (StateId s = 0; s < n; ++s) can_finish[0][s] = useful.contains(s) && dfa.is_accepting(s);
    for (std::size_t r = 1; r <= length; ++r) {
        for (StateId s = 0; s < n; ++s) {
            if (!useful.contains(s)) continue;
            for (std::size_t a = 0; a < k; ++a) {
                if (can_finish[r - 1][dfa.next(s, a)]) {
                    can_finish[r][s] = true;
                    break;
                }
            }
        }
    }

    LengthWitness witness{length, {}};
    StateId s = dfa.start();
    for (std::size_t r = length; r > 0; --r) {
        for (std::size_t a = 0; a < k; ++a) {
            const StateId t = dfa.next(s, a);
            if (can_finish[r - 1][t]) {
                witness.word += dfa.alphabet()[a];
                s = t;
                break;
            }
        }
    }
    return witness;
}

std::optional<LengthWitness> longest_accepted(const Dfa& dfa) {
    const UsefulStates useful = trim_useful(dfa);
    if (useful.count == 0) return std::nullopt;
    const std::vector<StateId> order = useful_topological_order(dfa, useful);
    if (order.size() < useful.count) throw InfiniteLanguage();

    const std::size_t k = dfa.alphabet().size();
    // remaining[s]: longest path from s to an accepting state.
    std::vector<std::size_t> remaining(dfa.state_count(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const StateId s = *it;
        std::size_t best = 0;
        for (std::size_t a = 0; a < k; ++a) {
            const StateId t = dfa.next(s, a);
            if (useful.contains(t)) best = std::max(best, remaining[t] + 1);
        }
        remaining[s] = best;
    }

    LengthWitness witness{remaining[dfa.start()], {}};
    StateId s = dfa.start();
    for (std::size_t r = witness.length; r > 0; --r) {
        for (std::size_t a = 0; a < k; ++a) {
            const StateId t = dfa.next(s, a);
            if (useful.contains(t) && remaining[t] == r - 1) {
                witness.word += dfa.alphabet()[a];
                s = t;
                break;
            }
        }
    }
    return witness;
}

std::vector<std::size_t> accepted_lengths(const Nfa& nfa, std::size_t horizon) {
    const std::size_t n = nfa.state_count();
    const std::size_t k = nfa.alphabet().size();
    std::vector<bool> layer(n, false);
    for (StateId s : nfa.initial()) layer[s] = true;

    std::vector<std::size_t> lengths;
    for (std::size_t len = 0; len <= horizon; ++len) {
        bool any = false;
        for (StateId s = 0; s < n; ++s) {
            if (!layer[s]) continue;
            any = true;
            if (nfa.is_accepting(s)) {
                lengths.push_back(len);
                break;
            }
        }
        if (!any) break;
        std::vector<bool> next(n, false);
        for (StateId s = 0; s < n; ++s) {
            if (!layer[s]) continue;
            for (std::size_t a = 0; a < k; ++a) {
                for (StateId t : nfa.successors(s, a)) next[t] = true;
            }
        }
        layer = std::move(next);
    }
    return lengths;
}

// ---------------------------------------------------------------- matrices

ReachabilityMatrix::ReachabilityMatrix(std::size_t dimension)
    : dimension_(dimension), cells_(dimension * dimension, 0) {}

ReachabilityMatrix ReachabilityMatrix::identity(std::size_t dimension) {
    ReachabilityMatrix m(dimension);
    for (std::size_t i = 0; i < dimension; ++i) m.set(i, i);
    return m;
}

ReachabilityMatrix ReachabilityMatrix::letter(const Nfa& nfa, Symbol symbol) {
    const auto a = nfa.alphabet().index_of(symbol);
    if (!a) throw UnknownSymbol(symbol);
    ReachabilityMatrix m(nfa.state_count());
    for (StateId p = 0; p < nfa.state_count(); ++p) {
        for (StateId q : nfa.successors(p, *a)) m.set(p, q);
    }
    return m;
}

ReachabilityMatrix operator*(const ReachabilityMatrix& a, const ReachabilityMatrix& b) {
    if (a.dimension_ != b.dimension_) throw PreconditionError("matrix dimensions differ");
    const std::size_t d = a.dimension_;
    ReachabilityMatrix c(d);
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t r = 0; r < d; ++r) {
            if (!a.at(p, r)) continue;
            for (std::size_t q = 0; q < d; ++q) {
                if (b.at(r, q)) c.set(p, q);
            }
        }
    }
    return c;
}

void ReachabilityMatrix::step(const ReachabilityMatrix& adjacency) { *this = *this * adjacency; }

ReachabilityMatrix reachability_after(const Nfa& nfa, std::string_view word) {
    auto m = ReachabilityMatrix::identity(nfa.state_count());
    for (char c : word) m.step(ReachabilityMatrix::letter(nfa, c));
    return m;
}

bool verify_rejected(const Nfa& nfa, std::string_view word) {
    const ReachabilityMatrix m = reachability_after(nfa, word);
    for (StateId i : nfa.initial()) {
        for (StateId f = 0; f < nfa.state_count(); ++f) {
            if (nfa.is_accepting(f) && m.at(i, f)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- text format

namespace {

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

StateId parse_state(const std::string& token, std::size_t state_count, std::size_t line) {
    StateId value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw FormatError("expected a state number, got '" + token + "'", line);
    }
    if (value >= state_count) throw FormatError("state " + token + " out of range", line);
    return value;
}

}  // namespace

Nfa parse_nfa(std::string_view text) {
    std::optional<std::size_t> state_count;
    std::optional<Alphabet> alphabet;
    std::optional<Nfa> nfa;
    bool seen_initial = false;
    bool seen_accepting = false;

    auto require_nfa = [&](std::size_t line) -> Nfa& {
        if (!state_count) throw FormatError("'states' must come first", line);
        if (!alphabet) throw FormatError("'alphabet' must precede transitions", line);
        if (!nfa) nfa.emplace(*state_count, *alphabet);
        return *nfa;
    };

    std::size_t line_no = 0;
    std::size_t begin = 0;
    std::vector<StateId> initial;
    std::vector<StateId> accepting;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto words = split_words(line);
        if (words.empty()) continue;

        const std::string& head = words[0];
        if (head == "states") {
            if (state_count) throw FormatError("duplicate 'states'", line_no);
            if (words.size() != 2) throw FormatError("'states' takes one number", line_no);
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), value);
            if (ec != std::errc{} || ptr != words[1].data() + words[1].size()) {
                throw FormatError("bad state count '" + words[1] + "'", line_no);
            }
            state_count = value;
        } else if (head == "alphabet") {
            if (!state_count) throw FormatError("'states' must come first", line_no);
            if (alphabet) throw FormatError("duplicate 'alphabet'", line_no);
            std::string symbols;
            for (std::size_t i = 1; i < words.size(); ++i) symbols += words[i];
            try {
                alphabet = Alphabet(symbols);
            } catch (const PreconditionError& e) {
                throw FormatError(e.what(), line_no);
            }
        } else if (head == "initial" || head == "accepting") {
            if (!state_count) throw FormatError("'states' must come first", line_no);
            bool& seen = head == "initial" ? seen_initial : seen_accepting;
            if (seen) throw FormatError("duplicate '" + head + "'", line_no);
            seen = true;
            auto& target = head == "initial" ? initial : accepting;
            for (std::size_t i = 1; i < words.size(); ++i) {
                target.push_back(parse_state(words[i], *state_count, line_no));
            }
        } else if (words.size() == 3) {
            Nfa& m = require_nfa(line_no);
            const StateId from = parse_state(words[0], *state_count, line_no);
            const StateId to = parse_state(words[2], *state_count, line_no);
            if (words[1].size() != 1) throw FormatError("symbol must be one character", line_no);
            if (!m.alphabet().contains(words[1][0])) {
                throw FormatError("symbol '" + words[1] + "' not in alphabet", line_no);
            }
            m.add_transition(from, words[1][0], to);
        } else {
            throw FormatError("unrecognized line", line_no);
        }
    }

    if (!state_count) throw FormatError("missing 'states'");
    if (!alphabet) alphabet = Alphabet();
    Nfa& m = require_nfa(line_no);
    for (StateId s : initial) m.add_initial(s);
    for (StateId s : accepting) m.set_accepting(s);
    return std::move(m);
}

std::string to_text(const Nfa& nfa) {
    std::ostringstream out;
    out << "states " << nfa.state_count() << '\n';
    out << "alphabet " << nfa.alphabet().symbols() << '\n';
    out << "initial";
    for (StateId s : nfa.initial()) out << ' ' << s;
    out << "\naccepting";
    for (StateId s = 0; s < nfa.state_count(); ++s) {
        if (nfa.is_accepting(s)) out << ' ' << s;
    }
    out << '\n';
    for (StateId s = 0; s < nfa.state_count(); ++s) {
        for (std::size_t a = 0; a < nfa.alphabet().size(); ++a) {
            for (StateId t : nfa.successors(s, a)) out << s << ' ' << nfa.alphabet()[a] << ' ' << t << '\n';
        }
    }
    return out.str();
}

}  // namespace starfrob
