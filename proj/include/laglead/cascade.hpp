#pragma once

#include <string>
#include <vector>

#include "laglead/model.hpp"

namespace laglead {

enum class SectionKind { LEAD, LAG, UNITY };

const char* to_string(SectionKind k);

/// One first-order section (s + d)/(s + c).
struct CascadeSection {
  double d = 0.0;  ///< zero offset
  double c = 0.0;  ///< pole offset
  SectionKind kind = SectionKind::UNITY;
};

struct CascadeForm {
  std::vector<CascadeSection> sections;
  /// Non-empty when some section has a negative d (non-minimum-phase zero) or
  /// negative c (unstable pole); such sections are produced, not rejected.
  std::vector<std::string> warnings;
};

/// Factors a compensator into first-order sections: numerator roots give the
/// d values, denominator roots the c values, both sorted ascending and paired
/// by index. LEAD iff d < c - tie_tol, LAG iff d > c + tie_tol, UNITY within
/// tie_tol = 1e-9 * (1 + |c|). Throws NotFactorableError when either
/// polynomial has roots with |imaginary part| > root_tol * (1 + |root|).
CascadeForm factor_cascade(const Compensator& comp, double root_tol = 1e-9);

/// Multiplies the sections back out. Inverse of factor_cascade up to
/// root-pairing permutation. Throws InputError on an empty cascade.
Compensator expand_cascade(const CascadeForm& cascade);

}  // namespace laglead
