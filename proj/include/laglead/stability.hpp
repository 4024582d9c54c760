#pragma once

#include <vector>

#include "laglead/model.hpp"

namespace laglead {

enum class StabilityVerdict { STABLE, UNSTABLE, MARGINAL };

const char* to_string(StabilityVerdict v);

struct RouthReport {
  /// The completed Routh array, one row per power of s from s^n down to s^0.
  /// When epsilon or auxiliary substitutions were needed the stored table is
  /// the one computed with the +epsilon convention.
  std::vector<std::vector<double>> table;
  /// First-column sign changes; equals the open-right-half-plane root count
  /// for polynomials without imaginary-axis roots.
  int sign_changes = 0;
  bool epsilon_used = false;    ///< a lone first-column zero was replaced
  bool auxiliary_used = false;  ///< an all-zero row was replaced
  StabilityVerdict verdict = StabilityVerdict::UNSTABLE;
};

/// Routh-Hurwitz criterion on s^n + a1 s^(n-1) + ... + an. A lone zero in the
/// first column is replaced by epsilon = 1e-8 * max|coefficient| and both sign
/// limits (epsilon -> 0+ and 0-) are examined; an all-zero row is replaced by
/// the derivative of the auxiliary polynomial formed from the row above.
/// Verdict: UNSTABLE when sign changes occur, MARGINAL when a substitution
/// indicates imaginary-axis roots without sign changes, STABLE otherwise.
RouthReport routh_hurwitz(const MonicPolynomial& poly);

struct PositivityReport {
  bool ok = true;
  /// 0-based indices into coeffs() of entries < 0.
  std::vector<int> violating_indices;
};

/// The admissibility condition: all stored coefficients >= 0.
PositivityReport coefficient_positivity(const MonicPolynomial& poly);

}  // namespace laglead
