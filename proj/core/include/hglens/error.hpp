#pragma once

#include <stdexcept>
#include <string>

namespace hglens {

/// Bad arguments or configuration supplied by the caller.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver, bracket or root search failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested operating point violates a physical approximation
/// (Raman-Nath regime, weak-field dipole potential).
class PhysicsValidityError : public std::runtime_error {
 public:
  PhysicsValidityError(const std::string& what, double ratio)
      : std::runtime_error(what), ratio_(ratio) {}

  [[nodiscard]] double ratio() const noexcept { return ratio_; }

 private:
  double ratio_;
};

}  // namespace hglens
