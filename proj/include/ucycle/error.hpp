#pragma once

#include <stdexcept>
#include <string>

namespace ucycle {

// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments or violated preconditions (n < 2, letters >= k, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A closed-form formula was evaluated outside the (n, k, s) range it holds for.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

// Construction was requested for a word set with no u-cycle / u-word.
class NotUniversal : public Error {
 public:
  using Error::Error;
};

// a -> b is not an edge of the de Bruijn graph.
class NotAnEdge : public Error {
 public:
  using Error::Error;
};

// Exhaustive work would exceed the configured cap.
class WorkCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ucycle
