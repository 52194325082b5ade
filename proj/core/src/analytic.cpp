#include "ulad/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ulad/errors.hpp"

namespace ulad {

double q_function(double x) {
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double q_inverse(double p) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::domain_error("q_inverse: p must lie in (0, 1)");
  if (p == 0.5) return 0.0;

  const bool flip = p > 0.5;
  const double pt = flip ? 1.0 - p : p;  // now pt in (0, 0.5]

  // Bracket [lo, hi] with Q(lo) >= pt > Q(hi); Q underflows by x ~ 39 so the
  // expansion always terminates.
  double lo = 0.0;
  double hi = 1.0;
  while (q_function(hi) >= pt) hi *= 2.0;

  constexpr double inv_sqrt_2pi = 0.3989422804014326779;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = q_function(x) - pt;
    if (f > 0.0) lo = x; else hi = x;
    if (std::abs(f) <= 1e-13 * pt) break;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;

    const double density = inv_sqrt_2pi * std::exp(-0.5 * x * x);
    double next = x + f / density;  // Q'(x) = -density
    if (!(next > lo) || !(next < hi) || !std::isfinite(next))
      next = 0.5 * (lo + hi);
    x = next;
  }
  return flip ? -x : x;
}

H0Moments h0_moments() noexcept { return H0Moments{}; }

UladAnalytic h1_moments(double rho, const NoiseParams& noise, std::size_t k_max) {
  noise.validate();
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw std::domain_error("h1_moments: rho must be finite and > 0");
  if (k_max < 1)
    throw std::invalid_argument("h1_moments: k_max must be >= 1");

  // C = 1 - q computed via expm1 so q + C == 1 exactly even for tiny rho.
  const double c = -std::expm1(-std::sqrt(2.0 * rho / noise.variance_w));
  const double q = 1.0 - c;
  const double ln_c = std::log(c);
  const double ln_q = std::log1p(-c);

  UladAnalytic m;
  m.q = q;
  m.c = c;
  m.k_max = k_max;

  // E[ln z | H1], arranged with 1 - C = q so nothing cancels as rho -> 0.
  m.mean_lnz = 0.5 * (c * ln_c + q * ln_q) + (c - c * ln_c - 1.0) / (2.0 * q) -
               0.5 * q;

  // Dilogarithm partial sum: sum_{i=1..k_max} C^i / i^2.
  double series = 0.0;
  double c_pow = 1.0;
  for (std::size_t i = 1; i <= k_max; ++i) {
    c_pow *= c;
    series += c_pow / (static_cast<double>(i) * static_cast<double>(i));
  }

  const double shared = -c * c * ln_c * ln_c / (2.0 * q) + q * ln_c * ln_q +
                        (c / q) * ln_c;
  m.e2_lnz = shared + q * series + 1.0 + q;
  m.e2_lnz_approx = shared + 2.0;  // series replaced by its bound C/(1-C)

  m.var_lnz = m.e2_lnz - m.mean_lnz * m.mean_lnz;
  m.var_lnz_approx = m.e2_lnz_approx - m.mean_lnz * m.mean_lnz;
  if (!(m.var_lnz > 0.0) || !(m.var_lnz_approx > 0.0))
    throw numeric_error("h1_moments: nonpositive variance of ln z");
  return m;
}

double pf_ulad(double gamma, std::size_t n) {
  if (n < 1) throw std::invalid_argument("pf_ulad: n must be >= 1");
  return q_function(gamma / std::sqrt(static_cast<double>(n)));
}

double threshold_from_pf(double pf, std::size_t n) {
  if (n < 1) throw std::invalid_argument("threshold_from_pf: n must be >= 1");
  if (!(pf > 0.0) || !(pf < 1.0))
    throw std::domain_error("threshold_from_pf: pf must lie in (0, 1)");
  return q_inverse(pf) * std::sqrt(static_cast<double>(n));
}

double pd_ulad(double gamma, std::size_t n, const UladAnalytic& moments,
               PdMode mode) {
  if (n < 1) throw std::invalid_argument("pd_ulad: n must be >= 1");
  const double variance =
      mode == PdMode::Exact ? moments.var_lnz : moments.var_lnz_approx;
  if (!(variance > 0.0))
    throw numeric_error("pd_ulad: nonpositive variance (inconsistent moments)");
  const double dn = static_cast<double>(n);
  return q_function((gamma - dn - dn * moments.mean_lnz) /
                    std::sqrt(dn * variance));
}

}  // namespace ulad
