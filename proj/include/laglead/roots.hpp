#pragma once

#include <vector>

#include "laglead/model.hpp"

namespace laglead {

enum class RootMethod { LINEAR, QUADRATIC, CARDANO, FERRARI, ITERATIVE };

const char* to_string(RootMethod m);

struct RootSet {
  std::vector<Complex> roots;  ///< length == degree
  RootMethod method = RootMethod::ITERATIVE;
  double max_poly_residual = 0.0;  ///< max |p(root)| over all reported roots
};

/// Closed-form roots for degree 1..4: direct / cancellation-safe quadratic /
/// Cardano (trigonometric branch for three real roots) / Ferrari via the
/// resolvent cubic. Every root gets up to 3 Newton polish steps on the
/// original polynomial. Throws InputError for degree > 4.
RootSet solve_closed_form(const MonicPolynomial& poly);

/// Simultaneous Aberth-Ehrlich iteration from perturbed-circle initial
/// guesses of radius 1 + max|coeff|; converged when every update magnitude is
/// below 1e-13 * (1 + |root|) or after 200 sweeps, then Newton-polished.
/// Deterministic (fixed perturbation seed). Throws NoConvergenceError with the
/// best residual when the cap is hit.
RootSet solve_iterative(const MonicPolynomial& poly);

/// Closed form for degree <= 4, iterative otherwise.
RootSet find_roots(const MonicPolynomial& poly);

/// Real parts of roots whose |imaginary part| <= tol * (1 + |root|). Throws
/// ComplexRootsError listing every root beyond the bound.
std::vector<double> real_roots_only(const RootSet& rootset, double tol = 1e-9);

}  // namespace laglead
