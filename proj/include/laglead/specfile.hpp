#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "laglead/verify.hpp"

namespace laglead {

struct DesignSpecOptions {
  std::optional<double> tolerance;       ///< verification threshold override
  std::optional<double> rank_tolerance;  ///< epsilon_rank scale override
  bool check_numerator_stability = false;
  std::string solver = "auto";  ///< "cramer" | "elimination" | "auto"
};

/// Parsed requirement-spec file. Requirements are canonicalized to linear
/// gain and radian phase.
struct DesignSpec {
  int order = 0;  ///< resolved order (defaults to requirement count)
  std::vector<RequirementPair> requirements;
  DesignSpecOptions options;
};

/// Loads and validates a JSON spec file:
///   { "order": n?, "requirements": [ {"omega": w,
///       "gain": g | "gain_db": db, "phase_deg": d | "phase_rad": r}, ... ],
///     "options": {"tolerance": t?, "rank_tolerance": t?,
///                 "check_numerator_stability": b?, "solver": s?}? }
/// Exactly one gain field and one phase field per requirement; omegas positive
/// and pairwise distinct. With gain_fields_are_db, plain "gain" values are
/// read as dB. Throws InputError naming the offending field (or line, for
/// syntax errors).
DesignSpec load_design_spec(const std::filesystem::path& path,
                            bool gain_fields_are_db = false);

/// Machine-readable design result written by `design --out` and read back by
/// `verify --design`.
struct DesignResultFile {
  Compensator compensator;
  std::vector<RequirementPair> requirements;
};

/// Serializes the full outcome of a design run. Fields that do not apply
/// (e.g. a compensator for a non-UNIQUE system) are omitted.
std::string design_result_to_json(const FeasibilityReport& feasibility,
                                  const SolveResult* solve,
                                  const DesignReport* report);

DesignResultFile load_design_result(const std::filesystem::path& path);

}  // namespace laglead
