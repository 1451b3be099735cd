#pragma once

#include <cstddef>
#include <stdexcept>

namespace moore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a group operation live in different groups.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search bound was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request is outside what this release computes.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Enumeration bound for finite closures; `MOORE_MAX_ELEMENTS` overrides the
/// default of 100000.
std::size_t max_elements();

}  // namespace moore
