#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laglead/cascade.hpp"
#include "laglead/linear_solver.hpp"
#include "laglead/model.hpp"
#include "laglead/stability.hpp"

namespace laglead {

struct RequirementCheck {
  double omega = 0.0;
  double target_gain = 0.0;
  double achieved_gain = 0.0;
  double target_phase = 0.0;   ///< radians
  double achieved_phase = 0.0; ///< radians
  double gain_rel_err = 0.0;
  double phase_abs_err = 0.0;  ///< wrapped shortest-arc difference, radians
};

struct DesignReport {
  Compensator compensator;
  std::vector<RequirementCheck> per_requirement;
  FeasibilityReport feasibility;
  RouthReport routh;          ///< denominator stability
  bool positivity_ok = true;  ///< numerator and denominator coefficients >= 0
  std::optional<CascadeForm> cascade;
  std::string cascade_note;   ///< reason when cascade is absent
};

/// Evaluates the compensator at every requirement frequency and attaches the
/// feasibility classification of the induced system, the Routh verdict of the
/// denominator, coefficient positivity, and the cascade factorization (or the
/// reason it does not exist).
DesignReport verify_design(const Compensator& comp,
                           std::span<const RequirementPair> reqs);

struct BodePoint {
  double omega = 0.0;
  double gain_linear = 0.0;
  double gain_db = 0.0;
  double phase_deg = 0.0;
  double re = 0.0;
  double im = 0.0;
  bool pole_flag = false;  ///< true when the denominator vanished here
};

/// Logarithmically spaced sweep, endpoints included, exactly `points` rows.
/// Rows where the denominator vanishes carry pole_flag = true and NaN values
/// instead of aborting the sweep. Throws InputError unless
/// 0 < omega_min < omega_max and points >= 2.
std::vector<BodePoint> bode_table(const Compensator& comp, double omega_min,
                                  double omega_max, int points);

}  // namespace laglead
