#include "laglead/system_builder.hpp"

#include <cmath>

#include "laglead/format.hpp"

namespace laglead {

std::array<std::vector<double>, 2> requirement_rows(const RequirementPair& req,
                                                    int n) {
  if (n < 1) throw InputError("compensator order must be >= 1");
  if (!std::isfinite(req.omega) || !std::isfinite(req.gain) ||
      !std::isfinite(req.phase))
    throw InputError("requirement values must be finite");

  // powers[p] = (j*omega)^p, built by iterated multiplication so that even
  // powers carry exact zero imaginary parts (and vice versa).
  std::vector<Complex> powers(n + 1);
  powers[0] = Complex(1.0, 0.0);
  const Complex jw(0.0, req.omega);
  for (int p = 1; p <= n; ++p) powers[p] = powers[p - 1] * jw;

  const Complex target(req.gain * std::cos(req.phase),
                       req.gain * std::sin(req.phase));

  std::vector<double> row_re(2 * n + 1, 0.0);
  std::vector<double> row_im(2 * n + 1, 0.0);
  for (int i = 1; i <= n; ++i) {
    const Complex bc = powers[n - i];            // coefficient of b_i
    const Complex ac = -target * powers[n - i];  // coefficient of a_i
    row_re[i - 1] = bc.real();
    row_im[i - 1] = bc.imag();
    row_re[n + i - 1] = ac.real();
    row_im[n + i - 1] = ac.imag();
  }
  // Known monic terms from both sides move to the right-hand side.
  const Complex rhs = (target - 1.0) * powers[n];
  row_re[2 * n] = rhs.real();
  row_im[2 * n] = rhs.imag();
  return {std::move(row_re), std::move(row_im)};
}

namespace {

RequirementSystem assemble(std::span<const RequirementPair> reqs, int n,
                           bool even_reference) {
  if (n < 1) throw InputError("compensator order must be >= 1");
  if (reqs.empty()) throw InputError("need at least one requirement");
  validate_requirements(reqs);

  RequirementSystem sys;
  sys.n = n;
  sys.r = static_cast<int>(reqs.size());
  sys.matrix.assign(static_cast<size_t>(sys.rows()) * sys.cols(), 0.0);
  sys.rhs.assign(sys.rows(), 0.0);

  for (int k = 0; k < sys.r; ++k) {
    std::array<std::vector<double>, 2> pair;
    if (even_reference) {
      // Literal even-n transcription. With n = 2m, the coefficient of b_{2q}
      // in the real row is (-1)^(m-q) w^(2m-2q), of a_{2q} is -g cos(p) times
      // that power, of a_{2q-1} is +g sin(p) (-1)^(m-q) w^(2m-2q+1); the
      // imaginary row swaps the roles with b_{2q-1}, -g sin(p), -g cos(p).
      const int m = n / 2;
      const double w = reqs[k].omega;
      const double gc = reqs[k].gain * std::cos(reqs[k].phase);
      const double gs = reqs[k].gain * std::sin(reqs[k].phase);
      std::vector<double> re(2 * n + 1, 0.0), im(2 * n + 1, 0.0);
      auto sgn = [](int e) { return (e % 2 == 0) ? 1.0 : -1.0; };
      for (int q = 1; q <= m; ++q) {
        const double even_pow = sgn(m - q) * std::pow(w, 2 * m - 2 * q);
        const double odd_pow = sgn(m - q) * std::pow(w, 2 * m - 2 * q + 1);
        const int b_even = 2 * q - 1;           // column of b_{2q}
        const int b_odd = 2 * q - 2;            // column of b_{2q-1}
        const int a_even = n + 2 * q - 1;       // column of a_{2q}
        const int a_odd = n + 2 * q - 2;        // column of a_{2q-1}
        re[b_even] = even_pow;
        re[a_even] = -gc * even_pow;
        re[a_odd] = gs * odd_pow;
        im[b_odd] = odd_pow;
        im[a_even] = -gs * even_pow;
        im[a_odd] = -gc * odd_pow;
      }
      const double lead = sgn(m) * std::pow(w, 2 * m);
      re[2 * n] = -lead + gc * lead;
      im[2 * n] = gs * lead;
      pair = {std::move(re), std::move(im)};
    } else {
      pair = requirement_rows(reqs[k], n);
    }
    for (int half = 0; half < 2; ++half) {
      const int row = 2 * k + half;
      for (int col = 0; col < 2 * n; ++col)
        sys.at(row, col) = pair[half][col];
      sys.rhs[row] = pair[half][2 * n];
    }
  }
  return sys;
}

}  // namespace

RequirementSystem build_system(std::span<const RequirementPair> reqs, int n) {
  return assemble(reqs, n, false);
}

RequirementSystem build_even_n_reference(std::span<const RequirementPair> reqs,
                                         int n) {
  if (n < 1 || n % 2 != 0)
    throw InputError("even-order reference builder requires even n, got " +
                     std::to_string(n));
  return assemble(reqs, n, true);
}

double residual_inf_norm(const RequirementSystem& sys,
                         std::span<const double> x) {
  if (static_cast<int>(x.size()) != sys.cols())
    throw InputError("solution length " + std::to_string(x.size()) +
                     " != column count " + std::to_string(sys.cols()));
  double worst = 0.0;
  for (int row = 0; row < sys.rows(); ++row) {
    // Extended-precision accumulation keeps the measurement itself from
    // dominating the residual on wide-dynamic-range systems.
    long double acc = 0.0L;
    for (int col = 0; col < sys.cols(); ++col)
      acc += static_cast<long double>(sys.at(row, col)) * x[col];
    worst = std::max(
        worst, std::abs(static_cast<double>(acc - sys.rhs[row])));
  }
  return worst;
}

}  // namespace laglead
