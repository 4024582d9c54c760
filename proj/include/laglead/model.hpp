#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "laglead/errors.hpp"

namespace laglead {

using Complex = std::complex<double>;

/// One performance requirement: demand |Gc(j*omega)| = gain and
/// arg Gc(j*omega) = phase.
struct RequirementPair {
  double omega = 0.0;  ///< angular frequency, rad/s, > 0
  double gain = 0.0;   ///< linear (non-dB) magnitude, > 0
  double phase = 0.0;  ///< radians
};

/// Throws InputError unless omega > 0, gain > 0 and phase is finite.
void validate(const RequirementPair& req);

/// Validates each pair and rejects duplicate frequencies.
void validate_requirements(std::span<const RequirementPair> reqs);

/// Degree-n real polynomial s^n + c[0] s^(n-1) + ... + c[n-1] with the unit
/// leading coefficient implicit. Coefficients may be negative; nonnegativity
/// is an admissibility property checked by the stability module, not a
/// construction invariant.
class MonicPolynomial {
public:
  /// coeffs = [x1, ..., xn]; degree n >= 1; all entries finite.
  explicit MonicPolynomial(std::vector<double> coeffs);

  /// Product of linear factors (s + k[0]) * ... * (s + k[m-1]).
  static MonicPolynomial from_linear_constants(std::span<const double> k);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Horner evaluation at an arbitrary complex point.
  Complex eval(Complex s) const;
  /// Horner evaluation returning {p(s), p'(s)}.
  std::pair<Complex, Complex> eval_with_derivative(Complex s) const;

  double max_abs_coeff() const;  ///< includes the implicit leading 1

private:
  std::vector<double> coeffs_;
};

/// Equal-degree monic rational function Gc(s) = numerator / denominator.
struct Compensator {
  MonicPolynomial numerator;
  MonicPolynomial denominator;

  Compensator(MonicPolynomial num, MonicPolynomial den);
  int order() const { return numerator.degree(); }
};

struct GainPhase {
  double gain;   ///< magnitude, > 0
  double phase;  ///< principal value in (-pi, pi], radians
};

/// Evaluates poly at s = j*omega. Throws InputError for omega <= 0 and
/// NumericOverflowError if the result is not finite.
Complex eval_polynomial_at_jomega(const MonicPolynomial& poly, double omega);

/// numerator(j*omega) / denominator(j*omega). Throws PoleAtFrequencyError when
/// the denominator magnitude falls below 1e-300.
Complex eval_compensator(const Compensator& comp, double omega);

/// Magnitude and principal-value argument. Throws UndefinedPhaseError on 0.
GainPhase gain_phase(Complex value);

}  // namespace laglead
