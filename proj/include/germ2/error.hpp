#pragma once
#include <stdexcept>
#include <string>

namespace germ2 {

// Mathematical precondition failure (exit code 2 at the CLI).
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; carries 1-based line/column.
struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), col(col_) {}
};

// Bad command line (exit code 1 at the CLI).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace germ2
