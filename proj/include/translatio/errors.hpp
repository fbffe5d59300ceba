#pragma once

#include <stdexcept>
#include <string>

namespace translatio {

// Error taxonomy used across the library.  Callers that need to map these
// to exit codes (the CLI) catch the base class and inspect the kind.

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad construction input: unknown type label, malformed flags.
struct ConfigError : Error {
  using Error::Error;
};

// Precondition violation on otherwise well-formed data.
struct DomainError : Error {
  using Error::Error;
};

// A guard (Weyl group size, representation dimension) was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

// Division by the zero function and friends.
struct ArithmeticError : Error {
  using Error::Error;
};

// Evaluation of a factored rational at a point where a denominator factor
// vanishes; carries the offending factor, printed.
struct PoleError : Error {
  std::string factor;
  PoleError(const std::string& msg, std::string f) : Error(msg), factor(std::move(f)) {}
};

}  // namespace translatio
