#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;

  /// Short machine-readable tag, e.g. "divergence".
  [[nodiscard]] virtual const char* kind() const noexcept = 0;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "invalid_argument"; }
};

/// Coefficient table does not reach the index a computation needs.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t required, std::size_t available);
  [[nodiscard]] const char* kind() const noexcept override { return "capacity"; }
  [[nodiscard]] std::size_t required_index() const noexcept { return required_; }
  [[nodiscard]] std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

/// Input lies outside the region where a series converges.
class DivergenceError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "divergence"; }
};

/// Input outside the real branch an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "domain"; }
};

class DegenerateNormalization : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "degenerate_normalization"; }
};

/// No quartic root qualified as x/a in (0, 1).
class SelectionFailure : public Error {
 public:
  struct Root {
    double re;
    double im;
  };

  SelectionFailure(const std::string& what, std::vector<Root> roots)
      : Error(what), roots_(std::move(roots)) {}
  [[nodiscard]] const char* kind() const noexcept override { return "selection_failure"; }
  [[nodiscard]] const std::vector<Root>& roots() const noexcept { return roots_; }

 private:
  std::vector<Root> roots_;
};

class IterationLimit : public Error {
 public:
  IterationLimit(const std::string& what, double last_iterate)
      : Error(what), last_(last_iterate) {}
  [[nodiscard]] const char* kind() const noexcept override { return "iteration_limit"; }
  [[nodiscard]] double last_iterate() const noexcept { return last_; }

 private:
  double last_;
};

/// A finished solve whose residual still exceeds the requested tolerance.
class ToleranceNotMet : public Error {
 public:
  ToleranceNotMet(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  [[nodiscard]] const char* kind() const noexcept override { return "tolerance_not_met"; }
  [[nodiscard]] double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace bring
