#ifndef DBR_ERRORS_HPP
#define DBR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dbr {

// Base class for all domain errors raised by the library. The CLI maps
// these to exit status 2; anything else (bad arguments) is status 1.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A group table or group file violates a group axiom.
struct LoadError : Error {
  using Error::Error;
};

// An input exceeds a configured size bound.
struct CapacityError : Error {
  using Error::Error;
};

// A stated precondition does not hold (wrong normality, non-Sylow, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// Two factors cannot be composed (middle groups differ).
struct CompositionError : Error {
  using Error::Error;
};

// A product left the declared subgroup system.
struct SystemClosureError : Error {
  using Error::Error;
};

// A subgroup of a direct product fails the requested classification
// (e.g. extracting a triple from a subgroup that is not left-free).
struct ClassificationError : Error {
  using Error::Error;
};

}  // namespace dbr

#endif
