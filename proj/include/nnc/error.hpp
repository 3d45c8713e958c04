#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nnc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated precondition or malformed in-memory input.
struct InvalidInput : Error {
  using Error::Error;
};

/// Malformed external data; `row` is 1-based.
struct ParseError : Error {
  ParseError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row(row) {}
  std::size_t row;
};

struct UnsupportedDimension : Error {
  using Error::Error;
};

}  // namespace nnc
