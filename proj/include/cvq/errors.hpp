#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvq {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller broke a documented precondition (non-Hermitian input, bad trace, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPositiveSemidefinite : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The Fock expansion needs more terms than the configured cap allows.
class TruncationOverflow : public std::runtime_error {
 public:
  TruncationOverflow(std::size_t required, std::size_t cap)
      : std::runtime_error("Fock truncation needs n_max=" + std::to_string(required) +
                           " which exceeds the cap " + std::to_string(cap)),
        required_n_max(required),
        cap_n_max(cap) {}

  std::size_t required_n_max;
  std::size_t cap_n_max;
};

}  // namespace cvq
