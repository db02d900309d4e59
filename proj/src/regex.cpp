#include "starfrob/regex.hpp"

#include <algorithm>

#include "starfrob/errors.hpp"

namespace starfrob {

struct RegexNode {
    NodeKind kind;
    Symbol letter = 0;
    std::shared_ptr<const RegexNode> lhs{};
    std::shared_ptr<const RegexNode> rhs{};
};

bool is_symbol_char(char c) noexcept {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x21 || u > 0x7e) return false;
    return c != '+' && c != '(' && c != ')' && c != '*';
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    for (char c : symbols_) {
        if (!is_symbol_char(c)) {
            throw PreconditionError(std::string("'") + c + "' cannot be an alphabet symbol");
        }
    }
    std::sort(symbols_.begin(), symbols_.end());
    if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end()) {
        throw PreconditionError("duplicate symbol in alphabet '" + std::string(symbols) + "'");
    }
}

Alphabet Alphabet::from_unordered(std::string_view symbols) {
    std::string s(symbols);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return Alphabet(s);
}

bool Alphabet::contains(Symbol s) const noexcept {
    return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

std::optional<std::size_t> Alphabet::index_of(Symbol s) const noexcept {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - symbols_.begin());
}

bool Alphabet::includes(const Alphabet& other) const noexcept {
    return std::includes(symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

// ---------------------------------------------------------------- RegexAst

RegexAst RegexAst::empty_set() {
    static const auto node = std::make_shared<const RegexNode>(RegexNode{NodeKind::EmptySet});
    return RegexAst(node);
}

RegexAst RegexAst::epsilon() {
    static const auto node = std::make_shared<const RegexNode>(RegexNode{NodeKind::Epsilon});
    return RegexAst(node);
}

RegexAst RegexAst::symbol(Symbol s) {
    return RegexAst(std::make_shared<const RegexNode>(RegexNode{NodeKind::Symbol, s}));
}

RegexAst RegexAst::alt(RegexAst left, RegexAst right) {
    return RegexAst(std::make_shared<const RegexNode>(
        RegexNode{NodeKind::Union, 0, std::move(left.node_), std::move(right.node_)}));
}

RegexAst RegexAst::concat(RegexAst left, RegexAst right) {
    return RegexAst(std::make_shared<const RegexNode>(
        RegexNode{NodeKind::Concat, 0, std::move(left.node_), std::move(right.node_)}));
}

RegexAst RegexAst::star(RegexAst child) {
    return RegexAst(std::make_shared<const RegexNode>(RegexNode{NodeKind::Star, 0, std::move(child.node_)}));
}

NodeKind RegexAst::kind() const noexcept { return node_->kind; }
Symbol RegexAst::letter() const noexcept { return node_->letter; }
RegexAst RegexAst::left() const { return RegexAst(node_->lhs); }
RegexAst RegexAst::right() const { return RegexAst(node_->rhs); }

bool operator==(const RegexAst& a, const RegexAst& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case NodeKind::EmptySet:
        case NodeKind::Epsilon:
            return true;
        case NodeKind::Symbol:
            return a.letter() == b.letter();
        case NodeKind::Star:
            return a.left() == b.left();
        case NodeKind::Union:
        case NodeKind::Concat:
            return a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

// ---------------------------------------------------------------- parser

namespace {

constexpr std::string_view kEpsilonUtf8 = "\xce\xb5";     // ε
constexpr std::string_view kEmptySetUtf8 = "\xe2\x88\x85";  // ∅

enum class Tok { Symbol, Epsilon, EmptySet, Plus, Star, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    Symbol letter = 0;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            ++i;
        } else if (c == '+') {
            tokens.push_back({Tok::Plus, i++});
        } else if (c == '*') {
            tokens.push_back({Tok::Star, i++});
        } else if (c == '(') {
            tokens.push_back({Tok::LParen, i++});
        } else if (c == ')') {
            tokens.push_back({Tok::RParen, i++});
        } else if (text.substr(i, kEpsilonUtf8.size()) == kEpsilonUtf8) {
            tokens.push_back({Tok::Epsilon, i});
            i += kEpsilonUtf8.size();
        } else if (text.substr(i, kEmptySetUtf8.size()) == kEmptySetUtf8) {
            tokens.push_back({Tok::EmptySet, i});
            i += kEmptySetUtf8.size();
        } else if (is_symbol_char(c)) {
            std::size_t j = i;
            while (j < text.size() && is_symbol_char(text[j])) ++j;
            const auto run = text.substr(i, j - i);
            if (run == "EPS") {
                tokens.push_back({Tok::Epsilon, i});
            } else if (run == "EMPTY") {
                tokens.push_back({Tok::EmptySet, i});
            } else {
                for (std::size_t k = i; k < j; ++k) tokens.push_back({Tok::Symbol, k, text[k]});
            }
            i = j;
        } else {
            throw SyntaxError("invalid character", i);
        }
    }
    tokens.push_back({Tok::End, text.size()});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    RegexAst parse() {
        RegexAst result = expr();
        if (peek().kind == Tok::RParen) throw SyntaxError("unmatched ')'", peek().offset);
        return result;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    static bool starts_atom(Tok t) {
        return t == Tok::Symbol || t == Tok::Epsilon || t == Tok::EmptySet || t == Tok::LParen;
    }

    void expect_atom_start() const {
        const Token& t = peek();
        if (starts_atom(t.kind)) return;
        if (t.kind == Tok::Star) throw SyntaxError("dangling '*'", t.offset);
        throw SyntaxError("empty alternative", t.offset);
    }

    RegexAst expr() {
        RegexAst result = term();
        while (peek().kind == Tok::Plus) {
            next();
            result = RegexAst::alt(std::move(result), term());
        }
        return result;
    }

    RegexAst term() {
        expect_atom_start();
        RegexAst result = factor();
        while (starts_atom(peek().kind)) result = RegexAst::concat(std::move(result), factor());
        return result;
    }

    RegexAst factor() {
        RegexAst result = atom();
        while (peek().kind == Tok::Star) {
            next();
            result = RegexAst::star(std::move(result));
        }
        return result;
    }

    RegexAst atom() {
        const Token& t = next();
        switch (t.kind) {
            case Tok::Symbol:
                return RegexAst::symbol(t.letter);
            case Tok::Epsilon:
                return RegexAst::epsilon();
            case Tok::EmptySet:
                return RegexAst::empty_set();
            case Tok::LParen: {
                if (peek().kind == Tok::RParen) throw SyntaxError("empty group", peek().offset);
                RegexAst inner = expr();
                if (peek().kind != Tok::RParen) {
                    throw SyntaxError("unbalanced parenthesis, expected ')'", peek().offset);
                }
                next();
                return inner;
            }
            default:
                throw SyntaxError("expected a symbol or '('", t.offset);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

void print(const RegexAst& ast, std::string& out) {
    auto parenthesized = [&out](const RegexAst& child, bool wrap) {
        if (wrap) out += '(';
        print(child, out);
        if (wrap) out += ')';
    };
    switch (ast.kind()) {
        case NodeKind::EmptySet:
            out += kEmptySetUtf8;
            break;
        case NodeKind::Epsilon:
            out += kEpsilonUtf8;
            break;
        case NodeKind::Symbol:
            out += ast.letter();
            break;
        case NodeKind::Union:
            print(ast.left(), out);
            out += '+';
            parenthesized(ast.right(), ast.right().kind() == NodeKind::Union);
            break;
        case NodeKind::Concat: {
            parenthesized(ast.left(), ast.left().kind() == NodeKind::Union);
            const NodeKind rk = ast.right().kind();
            parenthesized(ast.right(), rk == NodeKind::Union || rk == NodeKind::Concat);
            break;
        }
        case NodeKind::Star: {
            const NodeKind ck = ast.left().kind();
            parenthesized(ast.left(), ck == NodeKind::Union || ck == NodeKind::Concat);
            out += '*';
            break;
        }
    }
}

void collect_symbols(const RegexAst& ast, std::string& out) {
    switch (ast.kind()) {
        case NodeKind::Symbol:
            out += ast.letter();
            break;
        case NodeKind::Union:
        case NodeKind::Concat:
            collect_symbols(ast.left(), out);
            collect_symbols(ast.right(), out);
            break;
        case NodeKind::Star:
            collect_symbols(ast.left(), out);
            break;
        default:
            break;
    }
}

}  // namespace

RegexAst parse_regex(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.size() == 1) throw SyntaxError("empty expression", 0);
    return Parser(std::move(tokens)).parse();
}

std::string to_string(const RegexAst& ast) {
    std::string out;
    print(ast, out);
    return out;
}

std::size_t symbol_length(const RegexAst& ast) {
    switch (ast.kind()) {
        case NodeKind::Symbol:
            return 1;
        case NodeKind::Union:
        case NodeKind::Concat:
            return symbol_length(ast.left()) + symbol_length(ast.right());
        case NodeKind::Star:
            return symbol_length(ast.left());
        default:
            return 0;
    }
}

Alphabet alphabet_of(const RegexAst& ast) {
    std::string symbols;
    collect_symbols(ast, symbols);
    return Alphabet::from_unordered(symbols);
}

std::size_t node_count(const RegexAst& ast) {
    switch (ast.kind()) {
        case NodeKind::Union:
        case NodeKind::Concat:
            return 1 + node_count(ast.left()) + node_count(ast.right());
        case NodeKind::Star:
            return 1 + node_count(ast.left());
        default:
            return 1;
    }
}

}  // namespace starfrob
