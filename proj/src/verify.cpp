#include "laglead/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace laglead {

DesignReport verify_design(const Compensator& comp,
                           std::span<const RequirementPair> reqs) {
  const RequirementSystem sys = build_system(reqs, comp.order());

  DesignReport report{comp,
                      {},
                      classify_feasibility(sys),
                      routh_hurwitz(comp.denominator),
                      false,
                      std::nullopt,
                      {}};
  report.positivity_ok = coefficient_positivity(comp.numerator).ok &&
                         coefficient_positivity(comp.denominator).ok;

  for (const auto& req : reqs) {
    const GainPhase achieved = gain_phase(eval_compensator(comp, req.omega));
    RequirementCheck check;
    check.omega = req.omega;
    check.target_gain = req.gain;
    check.achieved_gain = achieved.gain;
    check.target_phase = req.phase;
    check.achieved_phase = achieved.phase;
    check.gain_rel_err = std::abs(achieved.gain - req.gain) / req.gain;
    // Shortest-arc difference, compared on the principal branch.
    check.phase_abs_err =
        std::abs(std::remainder(achieved.phase - req.phase,
                                2.0 * std::numbers::pi));
    report.per_requirement.push_back(check);
  }

  try {
    report.cascade = factor_cascade(comp);
  } catch (const NotFactorableError& e) {
    report.cascade_note = e.what();
  } catch (const NoConvergenceError& e) {
    report.cascade_note = e.what();
  }
  return report;
}

std::vector<BodePoint> bode_table(const Compensator& comp, double omega_min,
                                  double omega_max, int points) {
  if (!(omega_min > 0.0) || !(omega_max > omega_min))
    throw InputError("need 0 < omega_min < omega_max");
  if (points < 2) throw InputError("need at least 2 sweep points");

  const double lmin = std::log(omega_min);
  const double lmax = std::log(omega_max);
  std::vector<BodePoint> table;
  table.reserve(points);
  for (int i = 0; i < points; ++i) {
    double omega;
    if (i == 0)
      omega = omega_min;
    else if (i == points - 1)
      omega = omega_max;
    else
      omega = std::exp(lmin + (lmax - lmin) * i / (points - 1));
    BodePoint row;
    row.omega = omega;
    try {
      const Complex v = eval_compensator(comp, omega);
      const GainPhase gp = gain_phase(v);
      row.gain_linear = gp.gain;
      row.gain_db = 20.0 * std::log10(gp.gain);
      row.phase_deg = gp.phase * 180.0 / std::numbers::pi;
      row.re = v.real();
      row.im = v.imag();
    } catch (const PoleAtFrequencyError&) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.gain_linear = row.gain_db = row.phase_deg = row.re = row.im = nan;
      row.pole_flag = true;
    }
    table.push_back(row);
  }
  return table;
}

}  // namespace laglead
