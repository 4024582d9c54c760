#include "laglead/roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace laglead {

const char* to_string(RootMethod m) {
  switch (m) {
    case RootMethod::LINEAR: return "LINEAR";
    case RootMethod::QUADRATIC: return "QUADRATIC";
    case RootMethod::CARDANO: return "CARDANO";
    case RootMethod::FERRARI: return "FERRARI";
    case RootMethod::ITERATIVE: return "ITERATIVE";
  }
  return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;

double max_residual(const MonicPolynomial& p, const std::vector<Complex>& roots) {
  double worst = 0.0;
  for (const auto& r : roots) worst = std::max(worst, std::abs(p.eval(r)));
  return worst;
}

// Rounding floor of Horner evaluation at z: eps times the same recurrence on
// absolute values. |p(z)| at or below this floor is numerically zero, which
// is the best a multiple root can reach.
double eval_floor(const MonicPolynomial& p, Complex z) {
  const double az = std::abs(z);
  double acc = 1.0;
  for (double c : p.coeffs()) acc = acc * az + std::abs(c);
  return acc * std::numeric_limits<double>::epsilon() *
         (2.0 * p.degree() + 2.0);
}

void newton_polish(const MonicPolynomial& p, Complex& z, int steps = 3) {
  double best = std::abs(p.eval(z));
  for (int s = 0; s < steps && best > 0.0; ++s) {
    auto [v, d] = p.eval_with_derivative(z);
    if (d == Complex(0.0, 0.0)) break;
    const Complex zn = z - v / d;
    const double r = std::abs(p.eval(zn));
    if (r < best) {
      z = zn;
      best = r;
    } else {
      break;
    }
  }
}

void polish_all(const MonicPolynomial& p, std::vector<Complex>& roots) {
  for (auto& z : roots) newton_polish(p, z);
}

// Roots of s^2 + b s + c; the cancellation-safe form computes the larger root
// first and recovers the other from the product.
std::array<Complex, 2> quadratic_roots(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sq, b));
    if (q == 0.0) return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
    return {Complex(q, 0.0), Complex(c / q, 0.0)};
  }
  const double re = -0.5 * b;
  const double im = 0.5 * std::sqrt(-disc);
  return {Complex(re, im), Complex(re, -im)};
}

// Roots of s^3 + a s^2 + b s + c.
std::array<Complex, 3> cubic_roots(double a, double b, double c) {
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  std::array<Complex, 3> t;
  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  if (p == 0.0 && q == 0.0) {
    t = {Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)};
  } else if (disc > 0.0) {
    // Three real roots: the trigonometric form avoids the complex cube-root
    // branch ambiguity.
    const double rho = 2.0 * std::sqrt(-p / 3.0);
    const double arg =
        std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
    const double phi = std::acos(arg);
    for (int k = 0; k < 3; ++k)
      t[k] = Complex(rho * std::cos((phi - 2.0 * kPi * k) / 3.0), 0.0);
  } else {
    const double sq =
        std::sqrt(std::max(0.0, q * q / 4.0 + p * p * p / 27.0));
    const double s1 = -q / 2.0 + sq;
    const double s2 = -q / 2.0 - sq;
    const double u = std::cbrt(std::abs(s1) >= std::abs(s2) ? s1 : s2);
    const double v = u == 0.0 ? 0.0 : -p / (3.0 * u);
    t[0] = Complex(u + v, 0.0);
    const double im = 0.5 * std::sqrt(3.0) * std::abs(u - v);
    t[1] = Complex(-0.5 * (u + v), im);
    t[2] = Complex(-0.5 * (u + v), -im);
  }
  for (auto& z : t) z -= shift;
  return t;
}

// Roots of s^4 + a s^3 + b s^2 + c s + d, Ferrari via the resolvent cubic.
std::array<Complex, 4> quartic_roots(double a, double b, double c, double d) {
  const double shift = a / 4.0;
  const double p = b - 3.0 * a * a / 8.0;
  const double q = c - a * b / 2.0 + a * a * a / 8.0;
  const double r =
      d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;

  std::array<Complex, 4> y;
  if (std::abs(q) <= 1e-14 * (1.0 + std::abs(p) + std::abs(r))) {
    // Biquadratic: quadratic in y^2.
    const auto z = quadratic_roots(p, r);
    const Complex y0 = std::sqrt(z[0]);
    const Complex y1 = std::sqrt(z[1]);
    y = {y0, -y0, y1, -y1};
  } else {
    // Resolvent cubic in U = u^2 where (y^2 + u y + v)(y^2 - u y + w) splits
    // the quartic: U^3 + 2p U^2 + (p^2 - 4r) U - q^2 = 0. The product of its
    // roots is q^2 > 0, so a positive real root exists; the largest gives the
    // best-conditioned split.
    const auto res = cubic_roots(2.0 * p, p * p - 4.0 * r, -q * q);
    double biggest = 0.0;
    for (const auto& z : res) {
      if (std::abs(z.imag()) <= 1e-8 * (1.0 + std::abs(z)) &&
          z.real() > biggest)
        biggest = z.real();
    }
    const double U = std::max(biggest, 1e-300);
    const double u = std::sqrt(U);
    const double v = 0.5 * (p + U - q / u);
    const double w = 0.5 * (p + U + q / u);
    const auto y01 = quadratic_roots(u, v);
    const auto y23 = quadratic_roots(-u, w);
    y = {y01[0], y01[1], y23[0], y23[1]};
  }
  for (auto& z : y) z -= shift;
  return y;
}

}  // namespace

RootSet solve_closed_form(const MonicPolynomial& poly) {
  const auto& c = poly.coeffs();
  RootSet rs;
  switch (poly.degree()) {
    case 1:
      rs.roots = {Complex(-c[0], 0.0)};
      rs.method = RootMethod::LINEAR;
      break;
    case 2: {
      const auto r = quadratic_roots(c[0], c[1]);
      rs.roots = {r[0], r[1]};
      rs.method = RootMethod::QUADRATIC;
      break;
    }
    case 3: {
      const auto r = cubic_roots(c[0], c[1], c[2]);
      rs.roots = {r[0], r[1], r[2]};
      rs.method = RootMethod::CARDANO;
      break;
    }
    case 4: {
      const auto r = quartic_roots(c[0], c[1], c[2], c[3]);
      rs.roots = {r[0], r[1], r[2], r[3]};
      rs.method = RootMethod::FERRARI;
      break;
    }
    default:
      throw InputError("no closed form for degree " +
                       std::to_string(poly.degree()) + " (degree must be <= 4)");
  }
  polish_all(poly, rs.roots);
  rs.max_poly_residual = max_residual(poly, rs.roots);
  return rs;
}

RootSet solve_iterative(const MonicPolynomial& poly) {
  const int n = poly.degree();
  const double radius = 1.0 + poly.max_abs_coeff();

  std::vector<Complex> z(n);
  std::mt19937_64 rng(0x6c61676c65616421ULL);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * kPi * (k + 0.25 + 0.5 * jitter(rng)) / n + 0.3;
    z[k] = Complex(radius * std::cos(theta), radius * std::sin(theta));
  }

  constexpr int kMaxSweeps = 200;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      auto [v, d] = poly.eval_with_derivative(z[i]);
      if (std::abs(v) <= eval_floor(poly, z[i])) continue;
      if (d == Complex(0.0, 0.0)) {
        z[i] += Complex(1e-6 * (1.0 + std::abs(z[i])), 0.0);
        converged = false;
        continue;
      }
      const Complex newton = v / d;
      Complex repulsion(0.0, 0.0);
      for (int j = 0; j < n; ++j) {
        if (j == i || z[i] == z[j]) continue;
        repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex denom = 1.0 - newton * repulsion;
      const Complex w = denom == Complex(0.0, 0.0) ? newton : newton / denom;
      z[i] -= w;
      if (std::abs(w) >= 1e-13 * (1.0 + std::abs(z[i]))) converged = false;
    }
  }
  if (!converged)
    throw NoConvergenceError("root iteration hit the 200-sweep cap",
                             max_residual(poly, z));
  polish_all(poly, z);

  RootSet rs;
  rs.roots = std::move(z);
  rs.method = RootMethod::ITERATIVE;
  rs.max_poly_residual = max_residual(poly, rs.roots);
  return rs;
}

RootSet find_roots(const MonicPolynomial& poly) {
  return poly.degree() <= 4 ? solve_closed_form(poly) : solve_iterative(poly);
}

std::vector<double> real_roots_only(const RootSet& rootset, double tol) {
  std::vector<Complex> offenders;
  for (const auto& r : rootset.roots)
    if (std::abs(r.imag()) > tol * (1.0 + std::abs(r)))
      offenders.push_back(r);
  if (!offenders.empty()) throw ComplexRootsError(std::move(offenders));
  std::vector<double> out;
  out.reserve(rootset.roots.size());
  for (const auto& r : rootset.roots) out.push_back(r.real());
  return out;
}

}  // namespace laglead
