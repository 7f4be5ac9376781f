#pragma once

#include <stdexcept>
#include <string>

namespace sphmod {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad Dynkin data, wrong vector length, out-of-range index.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotInRootLattice : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotARoot : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotInLattice : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonPointedCone : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotDominant : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotSaturated : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnsupportedType : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidSigmaBar : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace sphmod
