#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hlr {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after canonicalize(), which all entry points call.
using Scalar = mpq_class;

/// Thrown for malformed textual input. Line and column are 1-based and 0
/// when the position is unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses "p" or "p/q" with an optional leading '-'. Rejects a zero
/// denominator, whitespace and anything that is not a decimal integer.
Scalar parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& value);

}  // namespace hlr
