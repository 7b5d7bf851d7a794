#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace jtl {

// Base class for all recoverable errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input tables are malformed: wrong dimensions, indices out of range, ...
struct ShapeError : Error {
  using Error::Error;
};

// A structure axiom failed during validation. Carries the axiom name and the
// witnessing elements (unused witness slots are -1).
struct AxiomViolation : Error {
  AxiomViolation(std::string axiom_name, std::array<int, 3> witness_elems,
                 const std::string& detail);
  std::string axiom;
  std::array<int, 3> witness;
};

struct NotTwoSidedIdeal : Error {
  using Error::Error;
};

struct NotSubmodule : Error {
  using Error::Error;
};

struct ReduciblePolynomial : Error {
  using Error::Error;
};

struct CompositionMismatch : Error {
  using Error::Error;
};

struct UnknownFlag : Error {
  using Error::Error;
};

// An enumeration exceeded one of the configured caps. Raised instead of
// silently truncating.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A mathematically guaranteed invariant failed. This indicates a bug in the
// library, never a problem with the input.
struct InternalCheck : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace jtl
