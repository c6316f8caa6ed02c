#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bchcov {

// Raised when an argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search whose estimated work exceeds the configured limit.
class WorkLimitError : public PreconditionError {
 public:
  WorkLimitError(const std::string& what, double estimated_work)
      : PreconditionError(what + " (estimated work " + format_work(estimated_work) + ")"),
        estimated_work_(estimated_work) {}

  double estimated_work() const noexcept { return estimated_work_; }

 private:
  static std::string format_work(double w);
  double estimated_work_;
};

// Modulus polynomial that is not irreducible; carries a nontrivial factor.
class ReducibleModulusError : public PreconditionError {
 public:
  ReducibleModulusError(std::uint64_t modulus, std::uint64_t factor);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t factor() const noexcept { return factor_; }

 private:
  std::uint64_t modulus_;
  std::uint64_t factor_;
};

class DivisionByZeroError : public std::domain_error {
 public:
  DivisionByZeroError() : std::domain_error("division by zero in GF(2^m)") {}
};

}  // namespace bchcov
