#include "starfrob/oracle.hpp"

#include <algorithm>
#include <limits>

#include "starfrob/errors.hpp"

namespace starfrob::oracle {

namespace {

/// Flattened tree: children always precede their parent.
struct FlatNode {
    NodeKind kind;
    Symbol letter = 0;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
};

std::size_t flatten(const RegexAst& ast, std::vector<FlatNode>& out) {
    FlatNode node{ast.kind(), ast.letter()};
    switch (ast.kind()) {
        case NodeKind::Union:
        case NodeKind::Concat:
            node.lhs = flatten(ast.left(), out);
            node.rhs = flatten(ast.right(), out);
            break;
        case NodeKind::Star:
            node.lhs = flatten(ast.left(), out);
            break;
        default:
            break;
    }
    out.push_back(node);
    return out.size() - 1;
}

/// Recursive span matcher, memoized on (node, i, j).
class SpanMatcher {
public:
    SpanMatcher(const RegexAst& ast, std::string_view word) : word_(word), width_(word.size() + 1) {
        root_ = flatten(ast, nodes_);
        memo_.assign(nodes_.size() * width_ * width_, kUnknown);
    }

    bool matches(std::size_t i, std::size_t j) { return match(root_, i, j); }

private:
    static constexpr std::int8_t kUnknown = -1;

    bool match(std::size_t node, std::size_t i, std::size_t j) {
        std::int8_t& slot = memo_[(node * width_ + i) * width_ + j];
        if (slot != kUnknown) return slot != 0;
        const FlatNode& n = nodes_[node];
        bool result = false;
        switch (n.kind) {
            case NodeKind::EmptySet:
                break;
            case NodeKind::Epsilon:
                result = i == j;
                break;
            case NodeKind::Symbol:
                result = j == i + 1 && word_[i] == n.letter;
                break;
            case NodeKind::Union:
                result = match(n.lhs, i, j) || match(n.rhs, i, j);
                break;
            case NodeKind::Concat:
                for (std::size_t k = i; k <= j && !result; ++k) result = match(n.lhs, i, k) && match(n.rhs, k, j);
                break;
            case NodeKind::Star:
                // ε, or a non-empty first chunk followed by the rest.
                result = i == j;
                for (std::size_t k = i + 1; k <= j && !result; ++k) result = match(n.lhs, i, k) && match(node, k, j);
                break;
        }
        slot = result ? 1 : 0;
        return result;
    }

    std::string_view word_;
    std::size_t width_;
    std::vector<FlatNode> nodes_;
    std::size_t root_ = 0;
    std::vector<std::int8_t> memo_;
};

/// Dynamic bitset over word positions.
class Positions {
public:
    explicit Positions(std::size_t words = 0) : bits_(words, 0) {}

    void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { bits_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1U; }
    void clear() { std::fill(bits_.begin(), bits_.end(), 0); }
    Positions& operator|=(const Positions& o) {
        for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= o.bits_[w];
        return *this;
    }
    /// Any bit set in both, ignoring position `skip`.
    bool intersects_except(const Positions& o, std::size_t skip) const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t x = bits_[w] & o.bits_[w];
            if (w == skip / 64) x &= ~(std::uint64_t{1} << (skip % 64));
            if (x != 0) return true;
        }
        return false;
    }

private:
    std::vector<std::uint64_t> bits_;
};

/// Column-by-column span matching for words grown one letter at a time.
/// column(j)[node] holds the start positions i with word[i, j) in L(node),
/// so every word prefix is processed once during enumeration.
class PrefixMatcher {
public:
    PrefixMatcher(const RegexAst& ast, std::size_t horizon)
        : words_(horizon / 64 + 1), word_(horizon, '\0') {
        root_ = flatten(ast, nodes_);
        columns_.assign(horizon + 1, std::vector<Positions>(nodes_.size(), Positions(words_)));
        reach_ = Positions(words_);
        compute_column(0);
        reach_.set(0);
    }

    std::size_t depth() const noexcept { return depth_; }

    void push(char c) {
        word_[depth_++] = c;
        compute_column(depth_);
        if (columns_[depth_][root_].intersects_except(reach_, depth_)) {
            reach_.set(depth_);
        } else {
            reach_.reset(depth_);
        }
    }

    void pop() { --depth_; }

    /// Current prefix is in L(E)*.
    bool in_star() const { return reach_.test(depth_); }

    const std::string& buffer() const noexcept { return word_; }

private:
    void compute_column(std::size_t j) {
        auto& col = columns_[j];
        for (std::size_t id = 0; id < nodes_.size(); ++id) {
            const FlatNode& n = nodes_[id];
            Positions& out = col[id];
            out.clear();
            switch (n.kind) {
                case NodeKind::EmptySet:
                    break;
                case NodeKind::Epsilon:
                    out.set(j);
                    break;
                case NodeKind::Symbol:
                    if (j > 0 && word_[j - 1] == n.letter) out.set(j - 1);
                    break;
                case NodeKind::Union:
                    out |= col[n.lhs];
                    out |= col[n.rhs];
                    break;
                case NodeKind::Concat:
                    for (std::size_t k = 0; k <= j; ++k) {
                        if (col[n.rhs].test(k)) out |= columns_[k][n.lhs];
                    }
                    break;
                case NodeKind::Star:
                    out.set(j);
                    // Walking k downwards, every k already in `out` can be
                    // preceded by one more chunk word[i, k).
                    for (std::size_t k = j; k >= 1; --k) {
                        if (out.test(k)) out |= columns_[k][n.lhs];
                    }
                    break;
            }
        }
    }

    std::size_t words_;
    std::string word_;
    std::vector<FlatNode> nodes_;
    std::size_t root_ = 0;
    std::vector<std::vector<Positions>> columns_;
    Positions reach_;
    std::size_t depth_ = 0;
};

void enumerate(PrefixMatcher& matcher, const Alphabet& alphabet, std::size_t horizon,
               std::vector<MissingLength>& by_length) {
    const std::size_t d = matcher.depth();
    if (!matcher.in_star()) {
        MissingLength& slot = by_length[d];
        if (slot.count++ == 0) slot.smallest = matcher.buffer().substr(0, d);
    }
    if (d == horizon) return;
    for (char c : alphabet) {
        matcher.push(c);
        enumerate(matcher, alphabet, horizon, by_length);
        matcher.pop();
    }
}

constexpr std::size_t kMaxHorizon = 4096;

}  // namespace

bool regex_match(const RegexAst& ast, std::string_view word) {
    return SpanMatcher(ast, word).matches(0, word.size());
}

bool member_star_dp(const RegexAst& ast, std::string_view word) {
    SpanMatcher matcher(ast, word);
    std::vector<bool> reachable(word.size() + 1, false);
    reachable[0] = true;
    for (std::size_t j = 1; j <= word.size(); ++j) {
        for (std::size_t i = 0; i < j && !reachable[j]; ++i) reachable[j] = reachable[i] && matcher.matches(i, j);
    }
    return reachable[word.size()];
}

std::uint64_t word_count(std::size_t alphabet_size, std::size_t horizon) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t len = 0; len <= horizon; ++len) {
        if (total > kMax - layer) return kMax;
        total += layer;
        if (len < horizon) {
            if (alphabet_size != 0 && layer > kMax / alphabet_size) return kMax;
            layer *= alphabet_size;
        }
    }
    return total;
}

OracleReport bruteforce_cofinite(const RegexAst& ast, const Alphabet& alphabet, std::size_t horizon,
                                 std::optional<std::size_t> conclusive_bound, std::uint64_t budget) {
    if (horizon < 1) throw PreconditionError("horizon must be at least 1");
    if (alphabet.empty()) throw PreconditionError("the oracle needs a non-empty alphabet");
    if (!alphabet.includes(alphabet_of(ast))) {
        throw AlphabetMismatch("alphabet '" + alphabet.symbols() + "' misses symbols of the expression");
    }
    const std::uint64_t total = word_count(alphabet.size(), horizon);
    if (total > budget || horizon > kMaxHorizon) {
        throw BudgetExceeded("enumerating " + std::to_string(total) + " words up to length " +
                             std::to_string(horizon) + " exceeds the budget of " + std::to_string(budget));
    }

    std::vector<MissingLength> by_length(horizon + 1);
    PrefixMatcher matcher(ast, horizon);
    enumerate(matcher, alphabet, horizon, by_length);

    OracleReport report;
    report.horizon = horizon;
    for (std::size_t len = 0; len <= horizon; ++len) {
        if (by_length[len].count == 0) continue;
        by_length[len].length = len;
        report.missing.push_back(std::move(by_length[len]));
    }

    if (conclusive_bound) {
        const std::size_t b = *conclusive_bound;
        if (b <= (horizon + 1) / 2) {
            report.conclusive = true;
            OracleVerdict verdict{true, std::nullopt};
            for (const MissingLength& m : report.missing) {
                if (m.length >= b && m.length < 2 * b) verdict.cofinite = false;
                if (m.length < b) verdict.frobenius_length = m.length;
            }
            if (!verdict.cofinite) verdict.frobenius_length.reset();
            report.verdict = verdict;
        }
    }
    return report;
}

std::size_t worst_case_bound(const RegexAst& ast) {
    const std::size_t exponent = symbol_length(ast) + 1;
    if (exponent >= std::numeric_limits<std::size_t>::digits) return std::numeric_limits<std::size_t>::max();
    return std::size_t{1} << exponent;
}

}  // namespace starfrob::oracle
