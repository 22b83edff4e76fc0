#ifndef ACD_ERRORS_HPP
#define ACD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acd {

/// Malformed code file. line/column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, size_t line, size_t column = 0)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

    size_t line() const { return line_; }
    size_t column() const { return column_; }

  private:
    static std::string format(const std::string& msg, size_t line, size_t column) {
        std::string s = "line " + std::to_string(line);
        if (column > 0) s += ", column " + std::to_string(column);
        return s + ": " + msg;
    }

    size_t line_;
    size_t column_;
};

/// An operation was called on an input that violates its stated requirement
/// (non-LCD input to a lift, equal mixing scalars, odd length to fold, ...).
class PreconditionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive computation would exceed its configured bound
/// (codeword enumeration with k too large, permutation search with n too large).
class LimitExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace acd

#endif
