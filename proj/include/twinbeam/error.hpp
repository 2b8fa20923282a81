#pragma once

#include <stdexcept>
#include <string>

namespace twinbeam {

// A caller-supplied value violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// The truncated Fock space cannot hold the requested object within the tail tolerance.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// A quadrature or iterative refinement did not reach its target accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A conditioning outcome is too improbable to normalize reliably.
class RejectedOutcome : public std::runtime_error {
 public:
  explicit RejectedOutcome(const std::string& what) : std::runtime_error(what) {}
};

// An outcome family does not cover enough probability mass.
class CoverageError : public std::runtime_error {
 public:
  CoverageError(const std::string& what, double deficit)
      : std::runtime_error(what), deficit_(deficit) {}
  double deficit() const noexcept { return deficit_; }

 private:
  double deficit_;
};

}  // namespace twinbeam
