#pragma once

#include <array>
#include <span>
#include <vector>

#include "laglead/model.hpp"

namespace laglead {

/// The 2r x 2n real linear system induced by r requirement pairs on an
/// order-n compensator. Column order is fixed: [b1..bn, a1..an]. Rows 2k and
/// 2k+1 (0-based) are the real and imaginary parts of requirement k's
/// identity N(jw) - g*e^(jp) * D(jw) = 0, with the known monic terms moved to
/// the right-hand side.
struct RequirementSystem {
  int n = 0;  ///< compensator order
  int r = 0;  ///< requirement count
  std::vector<double> matrix;  ///< row-major, 2r x 2n
  std::vector<double> rhs;     ///< length 2r

  int rows() const { return 2 * r; }
  int cols() const { return 2 * n; }
  double& at(int row, int col) { return matrix[row * cols() + col]; }
  double at(int row, int col) const { return matrix[row * cols() + col]; }
};

/// The two rows contributed by a single requirement, each laid out as
/// [b1..bn, a1..an, rhs] (length 2n+1). First element of the pair is the
/// real-part row, second the imaginary-part row. Performs only finiteness
/// checks, so degenerate inputs (e.g. zero gain) can be examined directly;
/// build_system applies the full invariants.
std::array<std::vector<double>, 2> requirement_rows(const RequirementPair& req,
                                                    int n);

/// Assembles the full 2r x 2n system. Throws InputError for n < 1, empty or
/// invalid requirements, or duplicate frequencies.
RequirementSystem build_system(std::span<const RequirementPair> reqs, int n);

/// Literal transcription of the even-n expansion with alternating-sign powers
/// (-1)^(m-q) * w^(2m-2q) and (-1)^(m-q) * w^(2m-2q+1). Kept as a cross-check
/// oracle for build_system; throws InputError for odd n.
RequirementSystem build_even_n_reference(std::span<const RequirementPair> reqs,
                                         int n);

/// Infinity norm of (matrix * x - rhs).
double residual_inf_norm(const RequirementSystem& sys,
                         std::span<const double> x);

}  // namespace laglead
