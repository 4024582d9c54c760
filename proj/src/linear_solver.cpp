#include "laglead/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "laglead/format.hpp"

namespace laglead {

const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::UNIQUE: return "UNIQUE";
    case Feasibility::UNDERDETERMINED_INFINITE:
      return "UNDERDETERMINED_INFINITE";
    case Feasibility::OVERDETERMINED_INFEASIBLE:
      return "OVERDETERMINED_INFEASIBLE";
    case Feasibility::RANK_DEFICIENT_CONSISTENT:
      return "RANK_DEFICIENT_CONSISTENT";
    case Feasibility::RANK_DEFICIENT_INCONSISTENT:
      return "RANK_DEFICIENT_INCONSISTENT";
  }
  return "?";
}

const char* to_string(SolveMethod m) {
  return m == SolveMethod::CRAMER ? "CRAMER" : "ELIMINATION";
}

FeasibilityReport classify_feasibility(const RequirementSystem& sys,
                                       const SolverOptions& opts) {
  const int R = sys.rows();
  const int C = sys.cols();
  // Work on the augmented matrix [A | rhs].
  std::vector<double> m(static_cast<size_t>(R) * (C + 1));
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) m[i * (C + 1) + j] = sys.at(i, j);
    m[i * (C + 1) + C] = sys.rhs[i];
  }
  auto at = [&](int i, int j) -> double& { return m[i * (C + 1) + j]; };

  // Equilibrate rows then coefficient columns before applying the pivot
  // tolerance: the raw entries span omega^0..omega^(2n), which would make an
  // absolute threshold scale-unfair. Rank and consistency are invariant under
  // these diagonal scalings. The rhs column keeps only the row scaling so
  // all-zero right-hand sides are not amplified into fake inconsistency.
  for (int i = 0; i < R; ++i) {
    double rowmax = 0.0;
    for (int j = 0; j < C; ++j) rowmax = std::max(rowmax, std::abs(at(i, j)));
    if (rowmax == 0.0) continue;
    for (int j = 0; j <= C; ++j) at(i, j) /= rowmax;
  }
  for (int j = 0; j < C; ++j) {
    double colmax = 0.0;
    for (int i = 0; i < R; ++i) colmax = std::max(colmax, std::abs(at(i, j)));
    if (colmax == 0.0) continue;
    for (int i = 0; i < R; ++i) at(i, j) /= colmax;
  }
  double scaled_max = 0.0;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j)
      scaled_max = std::max(scaled_max, std::abs(at(i, j)));
  const double eps = opts.rank_tolerance_scale * scaled_max;

  int rank = 0;
  double max_pivot = 0.0;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = rank;
    for (int i = rank + 1; i < R; ++i)
      if (std::abs(at(i, col)) > std::abs(at(piv, col))) piv = i;
    const double pval = std::abs(at(piv, col));
    if (pval <= eps) continue;
    if (piv != rank)
      for (int j = col; j <= C; ++j) std::swap(at(piv, j), at(rank, j));
    max_pivot = std::max(max_pivot, pval);
    min_pivot = std::min(min_pivot, pval);
    for (int i = rank + 1; i < R; ++i) {
      const double f = at(i, col) / at(rank, col);
      at(i, col) = 0.0;
      for (int j = col + 1; j <= C; ++j) at(i, j) -= f * at(rank, j);
    }
    ++rank;
  }

  bool consistent = true;
  for (int i = rank; i < R; ++i)
    if (std::abs(at(i, C)) > eps) consistent = false;

  FeasibilityReport rep;
  rep.r = sys.r;
  rep.n = sys.n;
  rep.rank = rank;
  rep.consistent = consistent;
  if (rank > 0) rep.condition_estimate = max_pivot / min_pivot;
  if (consistent) {
    if (sys.r == sys.n && rank == C)
      rep.classification = Feasibility::UNIQUE;
    else if (sys.r < sys.n && rank == R)
      rep.classification = Feasibility::UNDERDETERMINED_INFINITE;
    else
      rep.classification = Feasibility::RANK_DEFICIENT_CONSISTENT;
  } else {
    rep.classification = sys.r > sys.n
                             ? Feasibility::OVERDETERMINED_INFEASIBLE
                             : Feasibility::RANK_DEFICIENT_INCONSISTENT;
  }
  return rep;
}

namespace {

[[noreturn]] void throw_singular(const RequirementSystem& sys,
                                 const SolverOptions& opts,
                                 const std::string& what) {
  FeasibilityReport rep = classify_feasibility(sys, opts);
  throw SingularSystemError(what, to_string(rep.classification));
}

// Determinant by fraction-free (Bareiss) elimination with row pivoting.
// Returns 0 when some pivot column is negligible relative to the live
// submatrix.
double bareiss_det(std::vector<double> a, int n, double rel_tol) {
  if (n == 0) return 1.0;
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
  double sign = 1.0;
  double prev = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double colmax = std::abs(at(k, k));
    double submax = 0.0;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) submax = std::max(submax, std::abs(at(i, j)));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(at(i, k)) > colmax) { colmax = std::abs(at(i, k)); piv = i; }
    if (colmax <= rel_tol * submax || colmax == 0.0) return 0.0;
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(at(piv, j), at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

SolveResult pack_result(const RequirementSystem& sys,
                        const SolverOptions& opts,
                        const std::vector<double>& x, SolveMethod method) {
  const double residual = residual_inf_norm(sys, x);
  double rhs_norm = 0.0;
  for (double v : sys.rhs) rhs_norm = std::max(rhs_norm, std::abs(v));
  if (residual > 1e-9 * (1.0 + rhs_norm))
    throw_singular(sys, opts,
                   "solution rejected: residual " + format_double(residual) +
                       " exceeds acceptance threshold");

  const int n = sys.n;
  std::vector<double> b(x.begin(), x.begin() + n);
  std::vector<double> a(x.begin() + n, x.begin() + 2 * n);
  SolveResult result{
      Compensator(MonicPolynomial(b), MonicPolynomial(a)), residual, method,
      {}};
  for (int i = 0; i < n; ++i) {
    if (b[i] < 0.0)
      result.admissibility_warnings.push_back(
          "numerator coefficient b" + std::to_string(i + 1) + " = " +
          format_double(b[i]) + " is negative");
    if (a[i] < 0.0)
      result.admissibility_warnings.push_back(
          "denominator coefficient a" + std::to_string(i + 1) + " = " +
          format_double(a[i]) + " is negative");
  }
  return result;
}

}  // namespace

SolveResult solve_cramer(const RequirementSystem& sys,
                         const SolverOptions& opts) {
  if (sys.r != sys.n)
    throw InputError("Cramer solve needs r == n, got r = " +
                     std::to_string(sys.r) + ", n = " + std::to_string(sys.n));
  const int N = sys.cols();
  const double det = bareiss_det(sys.matrix, N, opts.rank_tolerance_scale);
  if (det == 0.0)
    throw_singular(sys, opts, "coefficient determinant is negligible");

  std::vector<double> x(N);
  for (int j = 0; j < N; ++j) {
    std::vector<double> replaced = sys.matrix;
    for (int i = 0; i < N; ++i) replaced[i * N + j] = sys.rhs[i];
    x[j] = bareiss_det(std::move(replaced), N, 0.0) / det;
  }
  return pack_result(sys, opts, x, SolveMethod::CRAMER);
}

SolveResult solve_elimination(const RequirementSystem& sys,
                              const SolverOptions& opts) {
  if (sys.r != sys.n)
    throw InputError("elimination solve needs r == n, got r = " +
                     std::to_string(sys.r) +
                     ", n = " + std::to_string(sys.n));
  const int N = sys.cols();
  std::vector<double> a = sys.matrix;
  auto at = [&](int i, int j) -> double& { return a[i * N + j]; };

  // Row and column equilibration: solve (Dr A Dc) y = Dr b, x = Dc y.
  std::vector<double> rs(N, 1.0), cs(N, 1.0);
  for (int i = 0; i < N; ++i) {
    double m = 0.0;
    for (int j = 0; j < N; ++j) m = std::max(m, std::abs(at(i, j)));
    if (m == 0.0) throw_singular(sys, opts, "zero row in coefficient matrix");
    rs[i] = 1.0 / m;
    for (int j = 0; j < N; ++j) at(i, j) *= rs[i];
  }
  for (int j = 0; j < N; ++j) {
    double m = 0.0;
    for (int i = 0; i < N; ++i) m = std::max(m, std::abs(at(i, j)));
    if (m == 0.0)
      throw_singular(sys, opts, "zero column in coefficient matrix");
    cs[j] = 1.0 / m;
    for (int i = 0; i < N; ++i) at(i, j) *= cs[j];
  }

  // LU with partial pivoting on the equilibrated matrix (entries are O(1), so
  // the pivot threshold scales directly with rank_tolerance_scale).
  std::vector<int> perm(N);
  for (int i = 0; i < N; ++i) perm[i] = i;
  for (int k = 0; k < N; ++k) {
    int piv = k;
    for (int i = k + 1; i < N; ++i)
      if (std::abs(at(i, k)) > std::abs(at(piv, k))) piv = i;
    if (std::abs(at(piv, k)) <= opts.rank_tolerance_scale)
      throw_singular(sys, opts, "pivot underflow during elimination");
    if (piv != k) {
      for (int j = 0; j < N; ++j) std::swap(at(piv, j), at(k, j));
      std::swap(perm[piv], perm[k]);
    }
    for (int i = k + 1; i < N; ++i) {
      at(i, k) /= at(k, k);
      for (int j = k + 1; j < N; ++j) at(i, j) -= at(i, k) * at(k, j);
    }
  }

  auto lu_solve = [&](const std::vector<double>& rhs_raw) {
    // rhs_raw is the unscaled right-hand side; apply Dr and the permutation.
    std::vector<double> y(N);
    for (int i = 0; i < N; ++i) y[i] = rhs_raw[perm[i]] * rs[perm[i]];
    for (int i = 1; i < N; ++i)
      for (int j = 0; j < i; ++j) y[i] -= at(i, j) * y[j];
    for (int i = N - 1; i >= 0; --i) {
      for (int j = i + 1; j < N; ++j) y[i] -= at(i, j) * y[j];
      y[i] /= at(i, i);
    }
    for (int j = 0; j < N; ++j) y[j] *= cs[j];
    return y;
  };

  std::vector<double> x = lu_solve(sys.rhs);

  // One refinement step with the residual accumulated in extended precision.
  std::vector<double> resid(N);
  for (int i = 0; i < N; ++i) {
    long double acc = sys.rhs[i];
    for (int j = 0; j < N; ++j)
      acc -= static_cast<long double>(sys.at(i, j)) * x[j];
    resid[i] = static_cast<double>(acc);
  }
  std::vector<double> delta = lu_solve(resid);
  for (int j = 0; j < N; ++j) x[j] += delta[j];

  return pack_result(sys, opts, x, SolveMethod::ELIMINATION);
}

SolveResult solve_auto(const RequirementSystem& sys,
                       const SolverOptions& opts) {
  return sys.n <= 3 ? solve_cramer(sys, opts) : solve_elimination(sys, opts);
}

}  // namespace laglead
