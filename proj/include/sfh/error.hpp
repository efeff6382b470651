#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sfh {

enum class ErrorCode {
    EmptyInput,
    Disconnected,
    UndecidedBeyondBound,
    NonIntegerIndex,
    LatticeNotZero,
    DifferentialUndetermined,
    EmptySupport,
    ZeroRank,
    BadParams,
    SameDiagramCircle,
    InvalidDiagram,
    InvalidArgument,
    ParseError,
    UndeclaredIdentifier,
    DuplicateIdentifier,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Parser failures carry a 1-based source position.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace sfh
