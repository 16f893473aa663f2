#pragma once

#include <stdexcept>
#include <string>

namespace qmock {

// Base of every error the library raises. Categories mirror the failure
// classes callers branch on; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition on an argument (bad lattice exponent, r = 0, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Arithmetic without an answer in the current domain: inverting zero or a
// non-unit, a pole hit during specialization, conductor overflow.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A coefficient was requested at or beyond the proven truncation order.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Unknown registry id or table kind.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmock
