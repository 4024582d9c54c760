#include "laglead/cascade.hpp"

#include <algorithm>
#include <cmath>

#include "laglead/format.hpp"
#include "laglead/roots.hpp"

namespace laglead {

const char* to_string(SectionKind k) {
  switch (k) {
    case SectionKind::LEAD: return "LEAD";
    case SectionKind::LAG: return "LAG";
    case SectionKind::UNITY: return "UNITY";
  }
  return "?";
}

CascadeForm factor_cascade(const Compensator& comp, double root_tol) {
  std::vector<double> d, c;
  try {
    d = real_roots_only(find_roots(comp.numerator), root_tol);
  } catch (const ComplexRootsError& e) {
    throw NotFactorableError("numerator", e.offenders());
  }
  try {
    c = real_roots_only(find_roots(comp.denominator), root_tol);
  } catch (const ComplexRootsError& e) {
    throw NotFactorableError("denominator", e.offenders());
  }
  // Section values are the negated roots; ascending sort fixes the pairing.
  for (auto& v : d) v = -v;
  for (auto& v : c) v = -v;
  std::sort(d.begin(), d.end());
  std::sort(c.begin(), c.end());

  CascadeForm form;
  for (size_t i = 0; i < d.size(); ++i) {
    CascadeSection s;
    s.d = d[i];
    s.c = c[i];
    const double tie_tol = 1e-9 * (1.0 + std::abs(s.c));
    if (s.d < s.c - tie_tol)
      s.kind = SectionKind::LEAD;
    else if (s.d > s.c + tie_tol)
      s.kind = SectionKind::LAG;
    else
      s.kind = SectionKind::UNITY;
    if (s.d < 0.0)
      form.warnings.push_back("section " + std::to_string(i + 1) + ": d = " +
                              format_double(s.d) +
                              " is negative (non-minimum-phase zero)");
    if (s.c < 0.0)
      form.warnings.push_back("section " + std::to_string(i + 1) + ": c = " +
                              format_double(s.c) +
                              " is negative (unstable pole)");
    form.sections.push_back(s);
  }
  return form;
}

Compensator expand_cascade(const CascadeForm& cascade) {
  if (cascade.sections.empty())
    throw InputError("cascade needs at least one section");
  std::vector<double> d, c;
  for (const auto& s : cascade.sections) {
    d.push_back(s.d);
    c.push_back(s.c);
  }
  return Compensator(MonicPolynomial::from_linear_constants(d),
                     MonicPolynomial::from_linear_constants(c));
}

}  // namespace laglead
