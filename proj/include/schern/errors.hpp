#pragma once

#include "schern/numeric.hpp"

#include <stdexcept>
#include <string>

namespace schern {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller asked for something outside an operation's domain (bad partition,
// length > n, d not dividing n, unknown case id, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// A configured size budget would be exceeded.
struct CeilingExceeded : PreconditionError {
  using PreconditionError::PreconditionError;
};

// Two independent computations of the same quantity disagree.
struct CrossCheckFailure : Error {
  CrossCheckFailure(const std::string& what, BigInt first, BigInt second)
      : Error(what), first_value(std::move(first)), second_value(std::move(second)) {}

  BigInt first_value;
  BigInt second_value;
};

// An exactness postcondition failed (e.g. a quotient that must be integral).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace schern
