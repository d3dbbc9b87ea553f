#pragma once

#include <stdexcept>
#include <string>

namespace ptmnc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (bad JSON, mismatched ids, bad flags).
struct InputError : Error {
  using Error::Error;
};

// A configured resource cap was hit before the computation finished.
struct BudgetError : Error {
  using Error::Error;
};

// A precondition of an operation does not hold (empty polytope, certify on a
// feasible result, t-dependent marginals, ...).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace ptmnc
