#pragma once

#include <stdexcept>
#include <string>

namespace matchspec {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, edge lists, family expressions).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the documented domain of an operation.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Exponential scans refuse inputs above their size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace matchspec
