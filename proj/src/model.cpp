#include "laglead/model.hpp"

#include <cmath>
#include <numbers>

#include "laglead/format.hpp"

namespace laglead {

void validate(const RequirementPair& req) {
  if (!std::isfinite(req.omega) || req.omega <= 0.0)
    throw InputError("requirement omega must be a positive finite value, got " +
                     format_double(req.omega));
  if (!std::isfinite(req.gain) || req.gain <= 0.0)
    throw InputError("requirement gain must be a positive finite value, got " +
                     format_double(req.gain));
  if (!std::isfinite(req.phase))
    throw InputError("requirement phase must be finite");
}

void validate_requirements(std::span<const RequirementPair> reqs) {
  for (const auto& req : reqs) validate(req);
  for (size_t i = 0; i < reqs.size(); ++i)
    for (size_t j = i + 1; j < reqs.size(); ++j)
      if (reqs[i].omega == reqs[j].omega)
        throw InputError("duplicate requirement frequency omega = " +
                         format_double(reqs[i].omega) +
                         " (rows would be pairwise dependent)");
}

MonicPolynomial::MonicPolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw InputError("monic polynomial needs degree >= 1");
  for (double c : coeffs_)
    if (!std::isfinite(c))
      throw InputError("monic polynomial coefficients must be finite");
}

MonicPolynomial MonicPolynomial::from_linear_constants(
    std::span<const double> k) {
  if (k.empty()) throw InputError("need at least one linear factor");
  std::vector<double> c{k[0]};
  for (size_t f = 1; f < k.size(); ++f) {
    // multiply (s^m + c1 s^(m-1) + ... + cm) by (s + k[f])
    std::vector<double> next(c.size() + 1, 0.0);
    next[0] = c[0] + k[f];
    for (size_t i = 1; i < c.size(); ++i) next[i] = c[i] + k[f] * c[i - 1];
    next[c.size()] = k[f] * c.back();
    c = std::move(next);
  }
  return MonicPolynomial(std::move(c));
}

Complex MonicPolynomial::eval(Complex s) const {
  Complex acc(1.0, 0.0);
  for (double c : coeffs_) acc = acc * s + c;
  return acc;
}

std::pair<Complex, Complex> MonicPolynomial::eval_with_derivative(
    Complex s) const {
  Complex v(1.0, 0.0);
  Complex d(0.0, 0.0);
  for (double c : coeffs_) {
    d = d * s + v;
    v = v * s + c;
  }
  return {v, d};
}

double MonicPolynomial::max_abs_coeff() const {
  double m = 1.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Compensator::Compensator(MonicPolynomial num, MonicPolynomial den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (numerator.degree() != denominator.degree())
    throw InputError("numerator degree " +
                     std::to_string(numerator.degree()) +
                     " != denominator degree " +
                     std::to_string(denominator.degree()));
}

Complex eval_polynomial_at_jomega(const MonicPolynomial& poly, double omega) {
  if (!std::isfinite(omega) || omega <= 0.0)
    throw InputError("omega must be positive, got " + format_double(omega));
  Complex v = poly.eval(Complex(0.0, omega));
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NumericOverflowError("polynomial evaluation overflowed at omega = " +
                               format_double(omega));
  return v;
}

Complex eval_compensator(const Compensator& comp, double omega) {
  Complex num = eval_polynomial_at_jomega(comp.numerator, omega);
  Complex den = eval_polynomial_at_jomega(comp.denominator, omega);
  if (std::abs(den) < 1e-300) throw PoleAtFrequencyError(omega);
  Complex v = num / den;
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NumericOverflowError(
        "compensator evaluation overflowed at omega = " + format_double(omega));
  return v;
}

GainPhase gain_phase(Complex value) {
  if (value.real() == 0.0 && value.imag() == 0.0)
    throw UndefinedPhaseError("phase of zero is undefined");
  double gain = std::abs(value);
  double phase = std::atan2(value.imag(), value.real());
  if (phase == -std::numbers::pi) phase = std::numbers::pi;
  return {gain, phase};
}

}  // namespace laglead
