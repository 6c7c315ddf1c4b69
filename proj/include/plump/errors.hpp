#ifndef PLUMP_ERRORS_HPP
#define PLUMP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plump {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (signature files, tree expressions, number lists).
// `line` is 1-based for line-oriented input, `column` 1-based for expression
// input; either may be 0 when it does not apply.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line_no = 0, std::size_t column_no = 0)
      : Error(what), line(line_no), column(column_no) {}
  std::size_t line;
  std::size_t column;
};

// A shape name that is not declared by the governing signature.
struct InvalidShape : Error {
  using Error::Error;
};

// Child count does not match the arity of the tag.
struct ArityMismatch : Error {
  ArityMismatch(const std::string& what, std::size_t expected_n, std::size_t actual_n)
      : Error(what), expected(expected_n), actual(actual_n) {}
  std::size_t expected;
  std::size_t actual;
};

// Invalid configuration (missing designated base shape, bad generator config).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace plump

#endif
