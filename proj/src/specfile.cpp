#include "laglead/specfile.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "laglead/format.hpp"

namespace laglead {

namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offset to a line number for a readable diagnostic.
    size_t line = 1;
    for (size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw InputError(path.string() + ": line " + std::to_string(line) + ": " +
                     e.what());
  }
}

double require_number(const json& obj, const std::string& field,
                      const std::string& where) {
  if (!obj.contains(field))
    throw InputError(where + ": missing field '" + field + "'");
  const auto& v = obj.at(field);
  if (!v.is_number())
    throw InputError(where + ": field '" + field + "' must be a number");
  return v.get<double>();
}

}  // namespace

DesignSpec load_design_spec(const std::filesystem::path& path,
                            bool gain_fields_are_db) {
  const json root = parse_file(path);
  if (!root.is_object())
    throw InputError(path.string() + ": top level must be an object");
  for (const auto& [key, _] : root.items())
    if (key != "order" && key != "requirements" && key != "options")
      throw InputError(path.string() + ": unknown field '" + key + "'");

  DesignSpec spec;
  if (!root.contains("requirements") || !root.at("requirements").is_array() ||
      root.at("requirements").empty())
    throw InputError(path.string() +
                     ": 'requirements' must be a non-empty array");

  int index = 0;
  for (const auto& item : root.at("requirements")) {
    const std::string where =
        path.string() + ": requirements[" + std::to_string(index) + "]";
    if (!item.is_object()) throw InputError(where + ": must be an object");
    for (const auto& [key, _] : item.items())
      if (key != "omega" && key != "gain" && key != "gain_db" &&
          key != "phase_deg" && key != "phase_rad")
        throw InputError(where + ": unknown field '" + key + "'");

    RequirementPair req;
    req.omega = require_number(item, "omega", where);

    const bool has_gain = item.contains("gain");
    const bool has_gain_db = item.contains("gain_db");
    if (has_gain == has_gain_db)
      throw InputError(where + ": exactly one of 'gain' or 'gain_db' required");
    if (has_gain_db || gain_fields_are_db) {
      const double db =
          require_number(item, has_gain_db ? "gain_db" : "gain", where);
      req.gain = std::pow(10.0, db / 20.0);
    } else {
      req.gain = require_number(item, "gain", where);
    }

    const bool has_deg = item.contains("phase_deg");
    const bool has_rad = item.contains("phase_rad");
    if (has_deg == has_rad)
      throw InputError(where +
                       ": exactly one of 'phase_deg' or 'phase_rad' required");
    req.phase = has_deg ? require_number(item, "phase_deg", where) *
                              std::numbers::pi / 180.0
                        : require_number(item, "phase_rad", where);

    try {
      validate(req);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    spec.requirements.push_back(req);
    ++index;
  }
  try {
    validate_requirements(spec.requirements);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": requirements: " + e.what());
  }

  spec.order = static_cast<int>(spec.requirements.size());
  if (root.contains("order")) {
    const auto& v = root.at("order");
    if (!v.is_number_integer() || v.get<int>() < 1)
      throw InputError(path.string() + ": 'order' must be an integer >= 1");
    spec.order = v.get<int>();
  }

  if (root.contains("options")) {
    const auto& opts = root.at("options");
    const std::string where = path.string() + ": options";
    if (!opts.is_object()) throw InputError(where + ": must be an object");
    for (const auto& [key, _] : opts.items())
      if (key != "tolerance" && key != "rank_tolerance" &&
          key != "check_numerator_stability" && key != "solver")
        throw InputError(where + ": unknown field '" + key + "'");
    if (opts.contains("tolerance")) {
      const double t = require_number(opts, "tolerance", where);
      if (!(t > 0.0)) throw InputError(where + ": 'tolerance' must be > 0");
      spec.options.tolerance = t;
    }
    if (opts.contains("rank_tolerance")) {
      const double t = require_number(opts, "rank_tolerance", where);
      if (!(t > 0.0))
        throw InputError(where + ": 'rank_tolerance' must be > 0");
      spec.options.rank_tolerance = t;
    }
    if (opts.contains("check_numerator_stability")) {
      const auto& v = opts.at("check_numerator_stability");
      if (!v.is_boolean())
        throw InputError(where +
                         ": 'check_numerator_stability' must be a boolean");
      spec.options.check_numerator_stability = v.get<bool>();
    }
    if (opts.contains("solver")) {
      const auto& v = opts.at("solver");
      const std::string s = v.is_string() ? v.get<std::string>() : "";
      if (s != "cramer" && s != "elimination" && s != "auto")
        throw InputError(
            where + ": 'solver' must be one of cramer|elimination|auto");
      spec.options.solver = s;
    }
  }
  return spec;
}

std::string design_result_to_json(const FeasibilityReport& feasibility,
                                  const SolveResult* solve,
                                  const DesignReport* report) {
  json out;
  out["classification"] = to_string(feasibility.classification);
  out["r"] = feasibility.r;
  out["n"] = feasibility.n;
  out["rank"] = feasibility.rank;
  out["consistent"] = feasibility.consistent;
  if (feasibility.condition_estimate)
    out["condition_estimate"] = *feasibility.condition_estimate;

  if (solve) {
    out["compensator"] = {
        {"numerator", solve->compensator.numerator.coeffs()},
        {"denominator", solve->compensator.denominator.coeffs()}};
    out["solver"] = to_string(solve->method);
    out["residual_norm"] = solve->residual_norm;
    out["admissibility_warnings"] = solve->admissibility_warnings;
  }

  if (report) {
    out["routh"] = {{"verdict", to_string(report->routh.verdict)},
                    {"sign_changes", report->routh.sign_changes},
                    {"epsilon_used", report->routh.epsilon_used},
                    {"auxiliary_used", report->routh.auxiliary_used}};
    out["positivity_ok"] = report->positivity_ok;
    if (report->cascade) {
      json sections = json::array();
      for (const auto& s : report->cascade->sections)
        sections.push_back(
            {{"d", s.d}, {"c", s.c}, {"kind", to_string(s.kind)}});
      out["cascade"] = {{"sections", sections},
                        {"warnings", report->cascade->warnings}};
    } else {
      out["cascade_error"] = report->cascade_note;
    }
    json reqs = json::array();
    json checks = json::array();
    for (const auto& chk : report->per_requirement) {
      reqs.push_back({{"omega", chk.omega},
                      {"gain", chk.target_gain},
                      {"phase_rad", chk.target_phase}});
      checks.push_back({{"omega", chk.omega},
                        {"target_gain", chk.target_gain},
                        {"achieved_gain", chk.achieved_gain},
                        {"target_phase", chk.target_phase},
                        {"achieved_phase", chk.achieved_phase},
                        {"gain_rel_err", chk.gain_rel_err},
                        {"phase_abs_err", chk.phase_abs_err}});
    }
    out["requirements"] = reqs;
    out["verification"] = checks;
  }
  return out.dump(2) + "\n";
}

DesignResultFile load_design_result(const std::filesystem::path& path) {
  const json root = parse_file(path);
  const std::string where = path.string();
  if (!root.is_object() || !root.contains("compensator"))
    throw InputError(where + ": missing 'compensator'");
  const auto& comp = root.at("compensator");
  if (!comp.contains("numerator") || !comp.contains("denominator"))
    throw InputError(where +
                     ": 'compensator' needs 'numerator' and 'denominator'");
  auto coeffs = [&](const char* key) {
    std::vector<double> v;
    for (const auto& x : comp.at(key)) {
      if (!x.is_number())
        throw InputError(where + ": compensator." + key +
                         " must hold numbers");
      v.push_back(x.get<double>());
    }
    return v;
  };
  DesignResultFile result{Compensator(MonicPolynomial(coeffs("numerator")),
                                      MonicPolynomial(coeffs("denominator"))),
                          {}};
  if (root.contains("requirements")) {
    for (const auto& item : root.at("requirements")) {
      RequirementPair req;
      req.omega = require_number(item, "omega", where + ": requirements");
      req.gain = require_number(item, "gain", where + ": requirements");
      req.phase = require_number(item, "phase_rad", where + ": requirements");
      validate(req);
      result.requirements.push_back(req);
    }
  }
  return result;
}

}  // namespace laglead
