#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qwalk/int_matrix.hpp"

namespace qwalk {

/// Malformed input. `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Text format: "rows cols" on the first line, then one line per row of
// whitespace-separated decimal integers.
IntMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const IntMatrix& m);

// JSON format: {"rows": r, "cols": c, "entries": ["..", ...]} with row-major
// decimal strings.
IntMatrix parse_matrix_json(std::string_view text);
std::string format_matrix_json(const IntMatrix& m);

/// Comma-separated rows, no header.
std::string format_matrix_csv(const IntMatrix& m);

/// Dispatches on the first non-blank character: '{' selects JSON.
IntMatrix parse_matrix(std::string_view text);

/// Parses a decimal integer with optional leading sign; throws ParseError.
BigInt parse_bigint(std::string_view token, std::size_t line = 0);

}  // namespace qwalk
