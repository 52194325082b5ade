#ifndef ULAD_GOF_HPP
#define ULAD_GOF_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ulad/signal_gen.hpp"

namespace ulad {

/// Smallest z kept after the probability transform; keeps ln(z) finite when a
/// sample is exactly zero (possible in file-fed data).
inline constexpr double kZFloor = 1e-300;

/// Absolute values x_i = |Y_i| together with their probability transforms
/// z_i = F0(x_i). Order matches the input block; nothing is sorted here.
struct ZBlock {
  std::vector<double> z;  // each in [kZFloor, 1]
  std::vector<double> x;  // each >= 0
  NoiseParams noise;

  std::size_t n() const noexcept { return z.size(); }
};

/// Elementwise |Y_i|, order preserved (first-order-moment pre-processing).
std::vector<double> flom_abs(const SampleBlock& block);

/// F0(x) = 1 - exp(-sqrt(2/variance) * x): CDF of |W| for Laplacian W.
double theoretical_cdf(double x, const NoiseParams& noise);

/// Fraction of x_i <= query (right-continuous step function).
double empirical_cdf(std::span<const double> x_values, double query);

/// z_i = F0(|Y_i|), clamped below by kZFloor.
ZBlock z_transform(const SampleBlock& block, const NoiseParams& noise);

}  // namespace ulad

#endif
