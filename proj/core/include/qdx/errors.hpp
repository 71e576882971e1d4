#pragma once

#include <stdexcept>
#include <string>

namespace qdx {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A density matrix that fails trace or positivity checks.
class InvalidStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A 4x4 result that is not of X form.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problem size beyond what an exact construction supports.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qdx
