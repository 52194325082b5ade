#ifndef ULAD_ANALYTIC_HPP
#define ULAD_ANALYTIC_HPP

#include <cstddef>

#include "ulad/signal_gen.hpp"

namespace ulad {

/// Standard normal upper-tail probability Q(x).
double q_function(double x);

/// Inverse of q_function, by safeguarded Newton with bisection fallback.
/// Domain (0,1); round-trips with q_function to better than 1e-10.
double q_inverse(double p);

/// Moments of ln z under H0, where z is uniform on (0,1): exactly (-1, 2, 1).
struct H0Moments {
  double mean = -1.0;
  double second_moment = 2.0;
  double variance = 1.0;
};

H0Moments h0_moments() noexcept;

/// Moments of ln z under H1 and the derived quantities used by the Pd closed
/// forms. q = exp(-sqrt(2*rho/variance)), C = 1 - q. The exact second moment
/// carries a dilogarithm partial sum truncated at k_max terms; the approximate
/// variant replaces the series with its geometric upper bound C/(1-C).
struct UladAnalytic {
  double q = 1.0;
  double c = 0.0;
  double mean_lnz = -1.0;
  double e2_lnz = 2.0;
  double var_lnz = 1.0;
  double e2_lnz_approx = 2.0;
  double var_lnz_approx = 1.0;
  std::size_t k_max = 0;
};

/// Closed-form H1 moments of ln z. Requires rho > 0; use h0_moments() for the
/// signal-free case.
UladAnalytic h1_moments(double rho, const NoiseParams& noise,
                        std::size_t k_max = 1000);

/// False-alarm probability of the ULAD detector: Q(gamma / sqrt(n)).
double pf_ulad(double gamma, std::size_t n);

/// Detection threshold realizing a target false-alarm rate:
/// Qinv(pf) * sqrt(n).
double threshold_from_pf(double pf, std::size_t n);

enum class PdMode { Exact, Approx };

/// Detection probability Q((gamma - n - n*E[ln z|H1]) / sqrt(n*D)), with D the
/// exact or approximate variance depending on mode.
double pd_ulad(double gamma, std::size_t n, const UladAnalytic& moments,
               PdMode mode);

}  // namespace ulad

#endif
