#pragma once

#include <stdexcept>
#include <string>

namespace upst {

// Bad arguments: wrong lengths, mismatched conductors, non-units, bad descriptors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix or spec failed a structural check (Hermiticity, flatness, unitarity).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Repeated or coincident eigenvalues where distinct ones are required.
class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that the construction guarantees did not hold; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace upst
