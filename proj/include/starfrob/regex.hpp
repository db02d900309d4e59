#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starfrob {

using Symbol = char;
using Word = std::string;

/// True for characters usable as alphabet symbols: printable, non-whitespace
/// ASCII other than the operators `+ ( ) *`.
bool is_symbol_char(char c) noexcept;

/// Ordered set of symbols, ascending by code point.
class Alphabet {
public:
    Alphabet() = default;

    /// Builds from a list of symbols; throws PreconditionError on duplicates or
    /// characters that cannot be symbols.
    explicit Alphabet(std::string_view symbols);

    /// Sorts and deduplicates.
    static Alphabet from_unordered(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    bool contains(Symbol s) const noexcept;
    std::optional<std::size_t> index_of(Symbol s) const noexcept;
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    /// True when every symbol of `other` is in this alphabet.
    bool includes(const Alphabet& other) const noexcept;

    const std::string& symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    bool operator==(const Alphabet&) const = default;

private:
    std::string symbols_;
};

enum class NodeKind { EmptySet, Epsilon, Symbol, Union, Concat, Star };

struct RegexNode;

/// Immutable regular expression syntax tree. Copies share structure.
class RegexAst {
public:
    static RegexAst empty_set();
    static RegexAst epsilon();
    static RegexAst symbol(Symbol s);
    static RegexAst alt(RegexAst left, RegexAst right);
    static RegexAst concat(RegexAst left, RegexAst right);
    static RegexAst star(RegexAst child);

    NodeKind kind() const noexcept;
    /// Only meaningful for NodeKind::Symbol.
    Symbol letter() const noexcept;
    /// Children: `left()` for Union/Concat/Star, `right()` for Union/Concat.
    RegexAst left() const;
    RegexAst right() const;

    /// Stable identity of the underlying node; used for memoization.
    const void* id() const noexcept { return node_.get(); }

    friend bool operator==(const RegexAst& a, const RegexAst& b);

private:
    explicit RegexAst(std::shared_ptr<const RegexNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const RegexNode> node_;
};

/// Parses the grammar
///
///     expr   := term ('+' term)*
///     term   := factor+
///     factor := atom '*'*
///     atom   := symbol | 'ε' | 'EPS' | '∅' | 'EMPTY' | '(' expr ')'
///
/// Union and concatenation associate to the left. Whitespace between tokens
/// is ignored. `EPS` and `EMPTY` are keywords only when they form a whole run
/// of symbol characters; inside a longer run they are ordinary symbols.
///
/// Throws SyntaxError carrying the byte offset of the problem.
RegexAst parse_regex(std::string_view text);

/// Canonical text form, re-parsable to a structurally identical tree.
/// Uses `ε` and `∅` for the constants.
std::string to_string(const RegexAst& ast);

/// Number of symbol occurrences (leaves of kind Symbol).
std::size_t symbol_length(const RegexAst& ast);

/// Distinct symbols occurring in the expression.
Alphabet alphabet_of(const RegexAst& ast);

/// Number of nodes in the tree.
std::size_t node_count(const RegexAst& ast);

}  // namespace starfrob
