#include "laglead/stability.hpp"

#include <algorithm>
#include <cmath>

namespace laglead {

const char* to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::STABLE: return "STABLE";
    case StabilityVerdict::UNSTABLE: return "UNSTABLE";
    case StabilityVerdict::MARGINAL: return "MARGINAL";
  }
  return "?";
}

namespace {

struct ArrayResult {
  std::vector<std::vector<double>> table;
  int sign_changes = 0;
  bool epsilon_used = false;
  bool auxiliary_used = false;
};

// Builds the Routh array for coefficients c = [1, a1, ..., an]. epsilon_sign
// selects which sign limit a lone first-column zero is replaced with.
ArrayResult build_array(const std::vector<double>& c, double epsilon_sign) {
  const int n = static_cast<int>(c.size()) - 1;
  const int cols = (n + 2) / 2;
  double max_coeff = 0.0;
  for (double v : c) max_coeff = std::max(max_coeff, std::abs(v));
  const double epsilon = epsilon_sign * 1e-8 * max_coeff;

  ArrayResult res;
  auto& rows = res.table;
  rows.assign(n + 1, std::vector<double>(cols, 0.0));
  for (int j = 0; j < cols; ++j) {
    if (2 * j <= n) rows[0][j] = c[2 * j];
    if (2 * j + 1 <= n) rows[1][j] = c[2 * j + 1];
  }

  // Replaces an all-zero row with the derivative of the auxiliary polynomial
  // formed from the row above, or a lone leading zero with epsilon.
  auto fix_row = [&](int i) {
    auto& row = rows[i];
    const auto& above = rows[i - 1];
    double row_max = 0.0;
    for (double v : row) row_max = std::max(row_max, std::abs(v));
    const double ztol = 1e-12 * max_coeff;
    if (row_max <= ztol) {
      // Row above holds the auxiliary polynomial in powers
      // s^(n-i+1), s^(n-i-1), ...
      const int power_above = n - (i - 1);
      for (int j = 0; j < cols; ++j) {
        const int e = power_above - 2 * j;
        row[j] = e >= 1 ? e * above[j] : 0.0;
      }
      res.auxiliary_used = true;
    } else if (std::abs(row[0]) <= ztol) {
      row[0] = epsilon;
      res.epsilon_used = true;
    }
  };

  for (int i = 2; i <= n; ++i) {
    fix_row(i - 1);
    const auto& r1 = rows[i - 1];
    const auto& r2 = rows[i - 2];
    for (int j = 0; j < cols; ++j) {
      const double r2next = j + 1 < cols ? r2[j + 1] : 0.0;
      const double r1next = j + 1 < cols ? r1[j + 1] : 0.0;
      rows[i][j] = (r1[0] * r2next - r2[0] * r1next) / r1[0];
    }
  }
  if (n >= 1) fix_row(n);

  int prev_sign = 0;
  for (int i = 0; i <= n; ++i) {
    const double v = rows[i][0];
    if (v == 0.0) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (prev_sign != 0 && s != prev_sign) ++res.sign_changes;
    prev_sign = s;
  }
  return res;
}

}  // namespace

RouthReport routh_hurwitz(const MonicPolynomial& poly) {
  std::vector<double> c;
  c.reserve(poly.degree() + 1);
  c.push_back(1.0);
  for (double v : poly.coeffs()) {
    if (!std::isfinite(v)) throw InputError("non-finite coefficient");
    c.push_back(v);
  }

  ArrayResult plus = build_array(c, +1.0);
  RouthReport rep;
  rep.table = std::move(plus.table);
  rep.sign_changes = plus.sign_changes;
  rep.epsilon_used = plus.epsilon_used;
  rep.auxiliary_used = plus.auxiliary_used;

  if (rep.auxiliary_used) {
    rep.verdict = rep.sign_changes > 0 ? StabilityVerdict::UNSTABLE
                                       : StabilityVerdict::MARGINAL;
  } else if (rep.epsilon_used) {
    // A lone zero signals either right-half-plane roots (both sign limits
    // agree) or imaginary-axis roots (the limits differ).
    ArrayResult minus = build_array(c, -1.0);
    const int agreed = std::min(plus.sign_changes, minus.sign_changes);
    rep.verdict = agreed > 0 ? StabilityVerdict::UNSTABLE
                             : StabilityVerdict::MARGINAL;
  } else {
    rep.verdict = rep.sign_changes > 0 ? StabilityVerdict::UNSTABLE
                                       : StabilityVerdict::STABLE;
  }
  return rep;
}

PositivityReport coefficient_positivity(const MonicPolynomial& poly) {
  PositivityReport rep;
  const auto& c = poly.coeffs();
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[i] < 0.0) rep.violating_indices.push_back(i);
  rep.ok = rep.violating_indices.empty();
  return rep;
}

}  // namespace laglead
