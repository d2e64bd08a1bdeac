#pragma once

#include <stdexcept>
#include <string>

namespace fincat {

/// Base class of everything the engine throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Domains/codomains/carriers that should agree do not.
class ShapeMismatch : public Error {
public:
  using Error::Error;
};

/// A value failed one of its structural invariants (non-total table,
/// non-transitive order, non-commuting triangle, ...).
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// An enumeration was asked to go past its configured size limit.
class BoundExceeded : public Error {
public:
  using Error::Error;
};

/// An internal self-check failed. Always a bug in the engine.
class DefectError : public Error {
public:
  using Error::Error;
};

} // namespace fincat
