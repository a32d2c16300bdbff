#pragma once

#include <stdexcept>
#include <string>

namespace mc {

/// Two operands live in polynomial rings with different numbers of variables.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An argument is outside the domain of the operation (zero ideal where a
/// proper nonzero ideal is required, a non-complete graph, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual or JSON input. Line and column are 1-based; 0 means
/// the position is unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(line == 0 ? what
                                       : what + " (line " + std::to_string(line) + ", column "
                                             + std::to_string(column) + ")"),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace mc
