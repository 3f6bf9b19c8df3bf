#pragma once

#include <stdexcept>
#include <string>

namespace ajt {

// Base of every error raised by the toolkit. The CLI maps subclasses onto
// its exit-code contract (input error, mathematical violation, budget).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidPrime : public InputError {
 public:
  using InputError::InputError;
};

class SingularMatrix : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class RadiusTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionViolated : public InputError {
 public:
  using InputError::InputError;
};

class DegreeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class RingMismatch : public InputError {
 public:
  using InputError::InputError;
};

class PhaseInNonCyclotomicRing : public InputError {
 public:
  using InputError::InputError;
};

// A configured node/entry/enumeration cap was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Randomized or staged constructions that did not produce a certified object.
class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class PartitionNotFound : public ConstructionFailed {
 public:
  using ConstructionFailed::ConstructionFailed;
};

class NotFound : public ConstructionFailed {
 public:
  using ConstructionFailed::ConstructionFailed;
};

}  // namespace ajt
