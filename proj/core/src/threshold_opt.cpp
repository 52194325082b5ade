#include "ulad/threshold_opt.hpp"

#include <cmath>
#include <stdexcept>

#include "ulad/errors.hpp"

namespace ulad {

namespace {
// Below this the quadratic degenerates and the linear branch -mu/beta applies.
constexpr double kAlphaZeroTol = 1e-9;
}  // namespace

double total_error_rate(double gamma, std::size_t n, const UladAnalytic& moments) {
  return pf_ulad(gamma, n) + 1.0 - pd_ulad(gamma, n, moments, PdMode::Approx);
}

ThresholdOpt opt_coefficients(std::size_t n, const UladAnalytic& moments) {
  if (n < 1) throw std::invalid_argument("opt_coefficients: n must be >= 1");
  if (!(moments.var_lnz_approx > 0.0))
    throw numeric_error("opt_coefficients: nonpositive approximate variance");

  const double dn = static_cast<double>(n);
  const double mean = moments.mean_lnz;
  const double omega_sq = moments.var_lnz_approx;

  ThresholdOpt to;
  to.n = n;
  to.moments = moments;
  to.omega = std::sqrt(omega_sq);
  to.alpha = omega_sq - 1.0;
  to.beta = 2.0 * dn * (1.0 + mean);
  to.mu = -dn * dn *
          (1.0 + mean * mean + 2.0 * mean + (omega_sq / dn) * std::log(omega_sq));
  to.delta = to.beta * to.beta - 4.0 * to.alpha * to.mu;
  return to;
}

double gamma_unconstrained(const ThresholdOpt& coeffs) {
  double gamma;
  if (std::abs(coeffs.alpha) < kAlphaZeroTol) {
    gamma = -coeffs.mu / coeffs.beta;
  } else {
    if (coeffs.delta < 0.0)
      throw numeric_error(
          "gamma_unconstrained: negative discriminant (inconsistent moments)");
    gamma = (-coeffs.beta + std::sqrt(coeffs.delta)) / (2.0 * coeffs.alpha);
  }

  // The root must actually be a local minimum of the total error rate.
  const double eps = 1e-3 * std::max(1.0, std::abs(gamma));
  const double center = total_error_rate(gamma, coeffs.n, coeffs.moments);
  const double left = total_error_rate(gamma - eps, coeffs.n, coeffs.moments);
  const double right = total_error_rate(gamma + eps, coeffs.n, coeffs.moments);
  if (left + 1e-12 < center || right + 1e-12 < center)
    throw numeric_error("gamma_unconstrained: stationary point is not a minimum");
  return gamma;
}

ThresholdOpt gamma_star(ThresholdOpt coeffs, double zeta_pf) {
  if (!(zeta_pf > 0.0) || !(zeta_pf < 1.0))
    throw std::invalid_argument("gamma_star: zeta_pf must lie in (0, 1)");

  coeffs.zeta_pf = zeta_pf;
  coeffs.gamma_min = gamma_unconstrained(coeffs);
  coeffs.pf_at_gamma_min = pf_ulad(coeffs.gamma_min, coeffs.n);
  coeffs.gamma_star = coeffs.pf_at_gamma_min <= zeta_pf
                          ? coeffs.gamma_min
                          : threshold_from_pf(zeta_pf, coeffs.n);
  return coeffs;
}

}  // namespace ulad
