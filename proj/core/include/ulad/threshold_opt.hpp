#ifndef ULAD_THRESHOLD_OPT_HPP
#define ULAD_THRESHOLD_OPT_HPP

#include <cstddef>

#include "ulad/analytic.hpp"

namespace ulad {

/// Coefficients and solution of the total-error-rate minimization. The
/// stationarity condition of P_error = Pf + (1 - Pd~) in the threshold gamma
/// is the quadratic alpha*gamma^2 + beta*gamma + mu = 0 with
///   omega = sqrt(var_lnz_approx), alpha = omega^2 - 1,
///   beta  = 2n(1 + E[ln z|H1]),
///   mu    = -n^2 (1 + E^2 + 2E + (omega^2/n) ln omega^2).
struct ThresholdOpt {
  std::size_t n = 0;
  UladAnalytic moments;

  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double delta = 0.0;  // beta^2 - 4*alpha*mu
  double omega = 0.0;

  // Filled by gamma_star().
  double gamma_min = 0.0;
  double gamma_star = 0.0;
  double pf_at_gamma_min = 0.0;
  double zeta_pf = 0.0;
};

/// Total error rate Pf + (1 - Pd) at a given threshold. Uses the approximate
/// Pd variance throughout: the quadratic above was derived from it, so mixing
/// in the exact variance would break the stationarity identity.
double total_error_rate(double gamma, std::size_t n, const UladAnalytic& moments);

/// Compute alpha/beta/mu/delta/omega for the given sample count and moments.
ThresholdOpt opt_coefficients(std::size_t n, const UladAnalytic& moments);

/// Unconstrained minimizer: (-beta + sqrt(delta)) / (2 alpha), falling back to
/// -mu/beta when |alpha| < 1e-9. Verified a posteriori to be a local minimum
/// of total_error_rate; throws numeric_error otherwise or when delta < 0.
double gamma_unconstrained(const ThresholdOpt& coeffs);

/// Complete the optimization under the false-alarm constraint
/// Pf(gamma) <= zeta_pf: the unconstrained minimizer if it satisfies the
/// constraint, otherwise threshold_from_pf(zeta_pf, n).
ThresholdOpt gamma_star(ThresholdOpt coeffs, double zeta_pf);

}  // namespace ulad

#endif
