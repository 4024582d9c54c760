#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace laglead {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: bad order, duplicate frequencies, mismatched
/// coefficient lists, non-finite values, schema violations.
class InputError : public Error {
public:
  using Error::Error;
};

/// A frequency-response evaluation produced a non-finite value.
class NumericOverflowError : public Error {
public:
  using Error::Error;
};

/// The denominator vanishes (to working precision) at the requested frequency.
class PoleAtFrequencyError : public Error {
public:
  explicit PoleAtFrequencyError(double omega);
  double omega() const { return omega_; }

private:
  double omega_;
};

/// gain_phase() called on (0, 0): the argument is undefined.
class UndefinedPhaseError : public Error {
public:
  using Error::Error;
};

/// The coefficient matrix is singular (or too ill-conditioned to accept).
/// Carries the feasibility classification of the offending system so callers
/// can report it instead of a bare failure.
class SingularSystemError : public Error {
public:
  SingularSystemError(const std::string& message, std::string classification);
  const std::string& classification() const { return classification_; }

private:
  std::string classification_;
};

/// Iterative root finding hit the iteration cap before converging.
class NoConvergenceError : public Error {
public:
  NoConvergenceError(const std::string& message, double best_residual);
  double best_residual() const { return best_residual_; }

private:
  double best_residual_;
};

/// A root set contains roots with imaginary parts beyond tolerance.
class ComplexRootsError : public Error {
public:
  explicit ComplexRootsError(std::vector<std::complex<double>> offenders);
  const std::vector<std::complex<double>>& offenders() const {
    return offenders_;
  }

private:
  std::vector<std::complex<double>> offenders_;
};

/// A compensator cannot be written as a product of first-order sections
/// because one of its polynomials has non-real roots.
class NotFactorableError : public Error {
public:
  NotFactorableError(std::string which,
                     std::vector<std::complex<double>> offenders);
  /// "numerator" or "denominator".
  const std::string& which() const { return which_; }
  const std::vector<std::complex<double>>& offenders() const {
    return offenders_;
  }

private:
  std::string which_;
  std::vector<std::complex<double>> offenders_;
};

}  // namespace laglead
