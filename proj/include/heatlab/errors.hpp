#pragma once

#include <stdexcept>
#include <string>

namespace heatlab {

/// Argument outside the domain of an operation, optionally tied to an abscissa.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
  DomainError(const std::string& what, double abscissa);

  bool has_abscissa() const noexcept { return has_abscissa_; }
  double abscissa() const noexcept { return abscissa_; }

private:
  double abscissa_ = 0.0;
  bool has_abscissa_ = false;
};

/// A function produced NaN or infinity at the reported abscissa.
class NonFiniteError : public DomainError {
public:
  NonFiniteError(const std::string& where, double abscissa);
};

/// The claimed closed form hits a non-positive base (the x^(-2/3) blow-up).
class SingularityError : public DomainError {
public:
  SingularityError(const std::string& where, double abscissa);
};

/// No sign change over the searched interval.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace heatlab
