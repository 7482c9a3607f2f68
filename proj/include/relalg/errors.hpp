#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relalg {

// Malformed inputs: inconsistent atom structures, mixed-algebra arguments,
// bad file contents.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Atom count (or closure size) exceeds the bitmask capacity.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrimePowerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested field/plane order is above the configured ceiling.
struct CeilingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The affine construction is known not to verify at this order (q = 2).
struct ConstructionUnsoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace relalg
