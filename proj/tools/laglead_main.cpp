#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laglead/cascade.hpp"
#include "laglead/format.hpp"
#include "laglead/linear_solver.hpp"
#include "laglead/roots.hpp"
#include "laglead/specfile.hpp"
#include "laglead/stability.hpp"
#include "laglead/verify.hpp"

namespace {

using namespace laglead;

// Exit codes: 0 success, 1 input error, 2 unstable/inadmissible design,
// 3 infeasible/non-unique, 4 not factorable.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInadmissible = 2;
constexpr int kInfeasible = 3;
constexpr int kNotFactorable = 4;

std::string section_str(const CascadeSection& s) {
  auto term = [](double v) {
    return v < 0.0 ? "(s - " + format_double(-v) + ")"
                   : "(s + " + format_double(v) + ")";
  };
  return term(s.d) + "/" + term(s.c);
}

void print_feasibility(const FeasibilityReport& rep) {
  std::cout << "feasibility: " << to_string(rep.classification)
            << " (r=" << rep.r << ", n=" << rep.n << ", rank=" << rep.rank
            << ", consistent=" << (rep.consistent ? "yes" : "no") << ")\n";
  if (rep.condition_estimate) {
    std::cout << "condition estimate: " << format_double(*rep.condition_estimate)
              << "\n";
    if (*rep.condition_estimate > 1e12)
      std::cout << "warning: condition estimate above 1e12; coefficients may "
                   "be inaccurate\n";
  }
}

void print_coeff_line(const char* label, const std::vector<double>& coeffs) {
  std::cout << label;
  for (double c : coeffs) std::cout << " " << format_double(c);
  std::cout << "\n";
}

struct DesignArgs {
  std::string spec_path;
  std::string out_path;
  std::string solver;  // empty = use file option
  std::optional<double> tol;
  std::optional<double> rank_tol;
  bool gain_db = false;
  bool check_numerator = false;
};

int run_design(const DesignArgs& args) {
  DesignSpec spec = load_design_spec(args.spec_path, args.gain_db);
  SolverOptions opts;
  if (args.rank_tol)
    opts.rank_tolerance_scale = *args.rank_tol;
  else if (spec.options.rank_tolerance)
    opts.rank_tolerance_scale = *spec.options.rank_tolerance;
  const double tol = args.tol ? *args.tol
                              : spec.options.tolerance.value_or(1e-6);
  const std::string solver =
      !args.solver.empty() ? args.solver : spec.options.solver;

  const RequirementSystem sys = build_system(spec.requirements, spec.order);
  const FeasibilityReport feas = classify_feasibility(sys, opts);
  print_feasibility(feas);

  auto write_out = [&](const SolveResult* solve, const DesignReport* report) {
    if (args.out_path.empty()) return;
    std::ofstream out(args.out_path);
    if (!out) throw InputError("cannot write " + args.out_path);
    out << design_result_to_json(feas, solve, report);
  };

  if (feas.classification != Feasibility::UNIQUE) {
    std::cout << "no unique solution for this requirement set\n";
    write_out(nullptr, nullptr);
    return kInfeasible;
  }

  SolveResult solve = solver == "cramer"        ? solve_cramer(sys, opts)
                      : solver == "elimination" ? solve_elimination(sys, opts)
                                                : solve_auto(sys, opts);
  std::cout << "solver: " << to_string(solve.method) << "\n";
  print_coeff_line("b:", solve.compensator.numerator.coeffs());
  print_coeff_line("a:", solve.compensator.denominator.coeffs());
  std::cout << "residual: " << format_double(solve.residual_norm) << "\n";

  const DesignReport report = verify_design(solve.compensator,
                                            spec.requirements);
  std::cout << "routh (denominator): " << to_string(report.routh.verdict)
            << " (sign changes: " << report.routh.sign_changes << ")\n";
  const bool check_num =
      args.check_numerator || spec.options.check_numerator_stability;
  if (check_num) {
    const RouthReport num_routh = routh_hurwitz(solve.compensator.numerator);
    std::cout << "routh (numerator, minimum-phase): "
              << to_string(num_routh.verdict)
              << " (sign changes: " << num_routh.sign_changes << ")\n";
  }
  std::cout << "positivity: " << (report.positivity_ok ? "ok" : "violated")
            << "\n";
  for (const auto& w : solve.admissibility_warnings)
    std::cout << "warning: " << w << "\n";

  std::cout << "verification (tolerance " << format_double(tol) << "):\n";
  bool verified = true;
  for (const auto& c : report.per_requirement) {
    std::cout << "  omega=" << format_double(c.omega) << ": gain rel err "
              << format_double(c.gain_rel_err) << ", phase abs err "
              << format_double(c.phase_abs_err) << " rad\n";
    if (c.gain_rel_err > tol || c.phase_abs_err > tol) verified = false;
  }
  if (!verified) std::cout << "warning: verification exceeds tolerance\n";

  if (report.cascade) {
    std::cout << "cascade:\n";
    for (const auto& s : report.cascade->sections)
      std::cout << "  " << section_str(s) << "  " << to_string(s.kind) << "\n";
    for (const auto& w : report.cascade->warnings)
      std::cout << "warning: " << w << "\n";
  } else {
    std::cout << "cascade: " << report.cascade_note << "\n";
  }

  write_out(&solve, &report);

  const bool admissible =
      report.routh.verdict == StabilityVerdict::STABLE && report.positivity_ok;
  return admissible ? kOk : kInadmissible;
}

Compensator compensator_from_args(const std::vector<double>& num,
                                  const std::vector<double>& den) {
  if (num.empty() || den.empty())
    throw InputError("need --num and --den coefficient lists");
  if (num.size() != den.size())
    throw InputError("numerator and denominator must have the same length");
  return Compensator(MonicPolynomial(num), MonicPolynomial(den));
}

int run_factor(const std::vector<double>& num, const std::vector<double>& den,
               double root_tol) {
  const Compensator comp = compensator_from_args(num, den);
  const CascadeForm cascade = factor_cascade(comp, root_tol);
  for (const auto& s : cascade.sections)
    std::cout << section_str(s) << "  " << to_string(s.kind) << "\n";
  for (const auto& w : cascade.warnings) std::cout << "warning: " << w << "\n";
  return kOk;
}

int run_bode(const std::vector<double>& num, const std::vector<double>& den,
             double wmin, double wmax, int points,
             const std::string& out_path) {
  const Compensator comp = compensator_from_args(num, den);
  const auto table = bode_table(comp, wmin, wmax, points);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw InputError("cannot write " + out_path);
    out = &file;
  }
  *out << "omega,gain_linear,gain_db,phase_deg,re,im,flag\n";
  for (const auto& row : table) {
    *out << format_double(row.omega) << "," << format_double(row.gain_linear)
         << "," << format_double(row.gain_db) << ","
         << format_double(row.phase_deg) << "," << format_double(row.re) << ","
         << format_double(row.im) << "," << (row.pole_flag ? 1 : 0) << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string spec_path;
  std::string design_path;
  std::vector<double> num, den;
  std::optional<double> tol;
  bool gain_db = false;
};

int run_verify(const VerifyArgs& args) {
  std::optional<Compensator> comp;
  std::vector<RequirementPair> reqs;
  if (!args.design_path.empty()) {
    DesignResultFile result = load_design_result(args.design_path);
    comp = result.compensator;
    reqs = result.requirements;
  }
  if (!args.num.empty() || !args.den.empty())
    comp = compensator_from_args(args.num, args.den);
  if (!comp)
    throw InputError("need either --design or --num/--den coefficients");
  if (!args.spec_path.empty()) {
    DesignSpec spec = load_design_spec(args.spec_path, args.gain_db);
    reqs = spec.requirements;
  }
  if (reqs.empty())
    throw InputError(
        "no requirements: give a spec file or a --design file that embeds "
        "them");

  const double tol = args.tol.value_or(1e-6);
  const DesignReport report = verify_design(*comp, reqs);
  bool ok = true;
  for (const auto& c : report.per_requirement) {
    const double deg = 180.0 / std::numbers::pi;
    std::cout << "omega=" << format_double(c.omega) << ": gain "
              << format_double(c.achieved_gain) << " (target "
              << format_double(c.target_gain) << ", rel err "
              << format_double(c.gain_rel_err) << "), phase "
              << format_double(c.achieved_phase * deg) << " deg (target "
              << format_double(c.target_phase * deg) << ", abs err "
              << format_double(c.phase_abs_err) << " rad)\n";
    if (c.gain_rel_err > tol || c.phase_abs_err > tol) ok = false;
  }
  std::cout << "verify: " << (ok ? "PASS" : "FAIL") << " (tolerance "
            << format_double(tol) << ")\n";
  return ok ? kOk : kInadmissible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytical design of nth-order lag-lead compensators"};
  app.require_subcommand(1);

  DesignArgs design_args;
  double design_tol = 0.0, design_rank_tol = 0.0;
  auto* design = app.add_subcommand(
      "design", "Solve a requirement spec file for a compensator");
  design->add_option("spec", design_args.spec_path, "requirement spec (JSON)")
      ->required();
  design->add_option("--out", design_args.out_path,
                     "write machine-readable result JSON");
  design->add_option("--solver", design_args.solver, "solver selection")
      ->check(CLI::IsMember({"cramer", "elimination", "auto"}));
  auto* dtol = design->add_option("--tol", design_tol,
                                  "verification tolerance (default 1e-6)");
  auto* drank = design->add_option("--rank-tol", design_rank_tol,
                                   "rank tolerance scale (default 1e-10)");
  design->add_flag("--gain-db", design_args.gain_db,
                   "interpret plain 'gain' fields as dB");
  design->add_flag("--check-numerator", design_args.check_numerator,
                   "also report numerator (minimum-phase) stability");

  std::vector<double> num, den;
  double factor_tol = 1e-9;
  auto* factor = app.add_subcommand(
      "factor", "Factor a compensator into first-order sections");
  factor->add_option("--num", num, "numerator coefficients b1..bn")
      ->required()
      ->expected(-1);
  factor->add_option("--den", den, "denominator coefficients a1..an")
      ->required()
      ->expected(-1);
  factor->add_option("--tol", factor_tol,
                     "real-root imaginary tolerance (default 1e-9)");

  std::vector<double> bnum, bden;
  double wmin = 0.01, wmax = 100.0;
  int points = 50;
  std::string bode_out;
  auto* bode =
      app.add_subcommand("bode", "Frequency sweep as CSV");
  bode->add_option("--num", bnum, "numerator coefficients b1..bn")
      ->required()
      ->expected(-1);
  bode->add_option("--den", bden, "denominator coefficients a1..an")
      ->required()
      ->expected(-1);
  bode->add_option("--wmin", wmin, "sweep start (rad/s, default 0.01)");
  bode->add_option("--wmax", wmax, "sweep end (rad/s, default 100)");
  bode->add_option("--points", points, "grid points (default 50)");
  bode->add_option("--out", bode_out, "write CSV to file instead of stdout");

  VerifyArgs verify_args;
  double verify_tol = 0.0;
  auto* verify = app.add_subcommand(
      "verify", "Check a compensator against requirement pairs");
  verify->add_option("spec", verify_args.spec_path,
                     "requirement spec (JSON); optional with --design");
  verify->add_option("--design", verify_args.design_path,
                     "design result JSON written by `design --out`");
  verify->add_option("--num", verify_args.num, "numerator coefficients")
      ->expected(-1);
  verify->add_option("--den", verify_args.den, "denominator coefficients")
      ->expected(-1);
  auto* vtol = verify->add_option("--tol", verify_tol,
                                  "pass/fail tolerance (default 1e-6)");
  verify->add_flag("--gain-db", verify_args.gain_db,
                   "interpret plain 'gain' fields as dB");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (design->parsed()) {
      if (dtol->count()) design_args.tol = design_tol;
      if (drank->count()) design_args.rank_tol = design_rank_tol;
      return run_design(design_args);
    }
    if (factor->parsed()) return run_factor(num, den, factor_tol);
    if (bode->parsed()) return run_bode(bnum, bden, wmin, wmax, points, bode_out);
    if (verify->parsed()) {
      if (vtol->count()) verify_args.tol = verify_tol;
      return run_verify(verify_args);
    }
  } catch (const NotFactorableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotFactorable;
  } catch (const SingularSystemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
