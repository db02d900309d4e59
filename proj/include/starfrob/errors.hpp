#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starfrob {

/// Base of every error thrown by the library. `category()` drives the CLI
/// exit code mapping.
class Error : public std::runtime_error {
public:
    enum class Category { Input, Semantic, Budget };

    Error(Category category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    Category category() const noexcept { return category_; }

private:
    Category category_;
};

/// An argument violates an operation's documented precondition.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message) : Error(Category::Input, message) {}
};

/// Malformed regular expression. `position()` is a byte offset into the text.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(Category::Input, message + " at offset " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Malformed NFA text or DIMACS CNF input. `line()` is 1-based, 0 if unknown.
class FormatError : public Error {
public:
    FormatError(const std::string& message, std::size_t line = 0)
        : Error(Category::Input,
                line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class NotThreeSat : public Error {
public:
    explicit NotThreeSat(const std::string& message) : Error(Category::Input, message) {}
};

class UnusedVariable : public Error {
public:
    explicit UnusedVariable(int variable)
        : Error(Category::Input, "variable " + std::to_string(variable) + " never appears in a clause"),
          variable_(variable) {}

    int variable() const noexcept { return variable_; }

private:
    int variable_;
};

class BadLengths : public Error {
public:
    explicit BadLengths(const std::string& message) : Error(Category::Input, message) {}
};

/// A declared alphabet misses a symbol that the input uses.
class AlphabetMismatch : public Error {
public:
    explicit AlphabetMismatch(const std::string& message) : Error(Category::Semantic, message) {}
};

class UnknownSymbol : public Error {
public:
    explicit UnknownSymbol(char symbol)
        : Error(Category::Semantic, std::string("symbol '") + symbol + "' is not in the alphabet"),
          symbol_(symbol) {}

    char symbol() const noexcept { return symbol_; }

private:
    char symbol_;
};

class InfiniteLanguage : public Error {
public:
    InfiniteLanguage() : Error(Category::Semantic, "language is infinite; no longest word") {}
};

class GcdNotOne : public Error {
public:
    explicit GcdNotOne(long long gcd)
        : Error(Category::Semantic, "gcd of inputs is " + std::to_string(gcd) + ", Frobenius number undefined"),
          gcd_(gcd) {}

    long long gcd() const noexcept { return gcd_; }

private:
    long long gcd_;
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& message) : Error(Category::Budget, message) {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& message) : Error(Category::Budget, message) {}
};

}  // namespace starfrob
