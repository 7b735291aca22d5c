#pragma once

#include <stdexcept>
#include <string>

namespace pangram {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: unknown symbols, bad references, bad shapes.
class InputError : public Error {
  public:
    using Error::Error;
};

/// A configured size cap would be exceeded.
class SizeLimitError : public Error {
  public:
    using Error::Error;
};

/// A search ran out of its step budget.
class BudgetExhausted : public SizeLimitError {
  public:
    using SizeLimitError::SizeLimitError;
};

/// The (problem, acceptor class) combination has no decision procedure.
class UndecidableProblem : public Error {
  public:
    using Error::Error;
};

} // namespace pangram
