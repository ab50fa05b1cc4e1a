#pragma once

#include <stdexcept>

namespace capsid {

// Base of every error raised by the library. Messages are single lines.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (permutations, trees, group files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on mathematical inputs failed (degree mismatch, H not a
// subgroup, non-simple action, tree not fixed, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size or resource bound was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace capsid
