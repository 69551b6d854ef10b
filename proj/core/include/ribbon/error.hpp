#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbon {

enum class ErrorCode {
    SyntaxError,
    DuplicateLabelCount,
    UnknownSign,
    UnknownEdge,
    PositionOutOfRange,
    TooManyEdges,
    TooManyCrossings,
    FractionalExponent,
    NegativeExponentNonUnit,
    InexactDivision,
    DanglingCrossing,
    RoleConflict,
    SignConflict,
    InvalidState,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// Parse failures and invalid-input rejections, as opposed to enumeration guards.
    bool is_input_error() const noexcept {
        return code_ != ErrorCode::TooManyEdges && code_ != ErrorCode::TooManyCrossings;
    }

private:
    ErrorCode code_;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace ribbon
