#ifndef SRGQ_ERRORS_HPP
#define SRGQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace srgq {

// Bad input to a constructor or query (self-loop, out-of-range vertex, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation refuses input outside its supported size.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input graph does not satisfy the hypotheses an analysis relies on.
class ApplicabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A structural property that must hold for the input failed to hold.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Search budget exhausted.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal self-check failed; indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed serialized input (JSON shape, types).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace srgq

#endif  // SRGQ_ERRORS_HPP
