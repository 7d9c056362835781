#pragma once

#include <stdexcept>
#include <string>

namespace godeaux {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematical failure: a contract violation the caller asked us to certify
// (membership that does not hold, inconsistent linear system, wrong locus...).
struct MathError : Error {
  using Error::Error;
};

// Structural misuse: mixed rings, bad variable names, parse errors.
struct UsageError : Error {
  using Error::Error;
};

// A resource budget was exhausted before the computation finished. Callers
// treat this as "inconclusive", never as a negative mathematical answer.
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace godeaux
