#include "ulad/gof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ulad {

std::vector<double> flom_abs(const SampleBlock& block) {
  if (block.samples.empty())
    throw std::invalid_argument("flom_abs: block must be nonempty");
  std::vector<double> out(block.samples.size());
  std::transform(block.samples.begin(), block.samples.end(), out.begin(),
                 [](double y) { return std::abs(y); });
  return out;
}

double theoretical_cdf(double x, const NoiseParams& noise) {
  noise.validate();
  if (!(x >= 0.0))
    throw std::domain_error("theoretical_cdf: x must be >= 0");
  // 1 - exp(-t) evaluated as -expm1(-t) for accuracy near zero.
  return -std::expm1(-std::sqrt(2.0 / noise.variance_w) * x);
}

double empirical_cdf(std::span<const double> x_values, double query) {
  if (x_values.empty())
    throw std::invalid_argument("empirical_cdf: empty sample");
  std::size_t count = 0;
  for (double x : x_values)
    if (x <= query) ++count;
  return static_cast<double>(count) / static_cast<double>(x_values.size());
}

ZBlock z_transform(const SampleBlock& block, const NoiseParams& noise) {
  ZBlock zb;
  zb.noise = noise;
  zb.x = flom_abs(block);
  zb.z.resize(zb.x.size());
  for (std::size_t i = 0; i < zb.x.size(); ++i)
    zb.z[i] = std::max(theoretical_cdf(zb.x[i], noise), kZFloor);
  return zb;
}

}  // namespace ulad
