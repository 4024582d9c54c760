#include "laglead/errors.hpp"

#include "laglead/format.hpp"

namespace laglead {

namespace {
std::string list_roots(const std::vector<std::complex<double>>& roots) {
  std::string s;
  for (const auto& root : roots) {
    if (!s.empty()) s += ", ";
    s += format_double(root.real());
    s += (root.imag() < 0 ? "-" : "+") +
         format_double(std::abs(root.imag())) + "j";
  }
  return s;
}
}  // namespace

PoleAtFrequencyError::PoleAtFrequencyError(double omega)
    : Error("denominator vanishes at omega = " + format_double(omega)),
      omega_(omega) {}

SingularSystemError::SingularSystemError(const std::string& message,
                                         std::string classification)
    : Error(message + " [classification: " + classification + "]"),
      classification_(std::move(classification)) {}

NoConvergenceError::NoConvergenceError(const std::string& message,
                                       double best_residual)
    : Error(message + " (best residual " + format_double(best_residual) + ")"),
      best_residual_(best_residual) {}

ComplexRootsError::ComplexRootsError(
    std::vector<std::complex<double>> offenders)
    : Error("roots are not all real: " + list_roots(offenders)),
      offenders_(std::move(offenders)) {}

NotFactorableError::NotFactorableError(
    std::string which, std::vector<std::complex<double>> offenders)
    : Error("not factorable into first-order sections: " + which +
            " roots are not all real: " + list_roots(offenders)),
      which_(std::move(which)),
      offenders_(std::move(offenders)) {}

}  // namespace laglead
