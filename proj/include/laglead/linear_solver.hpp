#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laglead/model.hpp"
#include "laglead/system_builder.hpp"

namespace laglead {

enum class Feasibility {
  UNIQUE,
  UNDERDETERMINED_INFINITE,
  OVERDETERMINED_INFEASIBLE,
  RANK_DEFICIENT_CONSISTENT,
  RANK_DEFICIENT_INCONSISTENT,
};

const char* to_string(Feasibility f);

struct FeasibilityReport {
  int r = 0;
  int n = 0;
  int rank = 0;
  bool consistent = false;
  Feasibility classification = Feasibility::RANK_DEFICIENT_INCONSISTENT;
  /// Ratio of largest to smallest pivot magnitude; absent when no pivot was
  /// found. Values above 1e12 indicate an untrustworthy solve.
  std::optional<double> condition_estimate;
};

enum class SolveMethod { CRAMER, ELIMINATION };

const char* to_string(SolveMethod m);

struct SolveResult {
  Compensator compensator;
  /// Infinity norm of (matrix * solution - rhs); accepted results satisfy
  /// residual_norm <= 1e-9 * (1 + ||rhs||_inf).
  double residual_norm = 0.0;
  SolveMethod method = SolveMethod::ELIMINATION;
  /// One entry per coefficient that violates the nonnegativity admissibility
  /// condition.
  std::vector<std::string> admissibility_warnings;
};

struct SolverOptions {
  /// Pivot tolerance is rank_tolerance_scale * (largest initial |entry|).
  double rank_tolerance_scale = 1e-10;
};

/// Rank/consistency classification of the assembled system. Never throws on
/// well-formed systems; every input is classifiable.
FeasibilityReport classify_feasibility(const RequirementSystem& sys,
                                       const SolverOptions& opts = {});

/// Cramer's rule: each unknown is det(matrix with column j replaced by rhs) /
/// det(matrix), determinants by fraction-free (Bareiss) elimination with row
/// pivoting. Requires r == n; throws SingularSystemError (carrying the
/// feasibility classification) when the determinant is negligible.
SolveResult solve_cramer(const RequirementSystem& sys,
                         const SolverOptions& opts = {});

/// Partial-pivoted LU with row/column equilibration and one step of iterative
/// refinement. Requires r == n; throws SingularSystemError on pivot underflow.
SolveResult solve_elimination(const RequirementSystem& sys,
                              const SolverOptions& opts = {});

/// Cramer for n <= 3, elimination for n >= 4.
SolveResult solve_auto(const RequirementSystem& sys,
                       const SolverOptions& opts = {});

}  // namespace laglead
