#pragma once

#include <stdexcept>
#include <string>

namespace dioext {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Structural corruption: dangling ids, dimension mismatches, identity failures.
struct IntegrityError : Error {
  using Error::Error;
};

// Parameter out of the documented domain (negative dimension, bad index).
struct DomainError : Error {
  using Error::Error;
};

// Input has the wrong shape for the operation (system form, rim mismatch,
// non-sphere wedge, witness not face-closed, invalid map).
struct FormError : Error {
  using Error::Error;
};

// A pointed operation received an unpointed object or an unpointed map.
struct PointednessError : Error {
  using Error::Error;
};

// Hard precondition on computed invariants failed (non-sphere homology,
// not a homotopy equivalence, torsion where freeness is required).
struct PreconditionError : Error {
  using Error::Error;
};

// Configured budget exceeded (brute force box too large, matrix too big).
struct ResourceError : Error {
  using Error::Error;
};

// Malformed input text for one of the file formats.
struct ParseError : Error {
  using Error::Error;
};

// A shipped data asset failed its load-time verification oracle.
struct AssetError : Error {
  using Error::Error;
};

} // namespace dioext
