#include "ulad/signal_gen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ulad {

void NoiseParams::validate() const {
  if (!(variance_w > 0.0) || !std::isfinite(variance_w))
    throw std::invalid_argument("NoiseParams: variance_w must be finite and > 0");
}

void SignalSpec::validate() const {
  if (!(snr_linear >= 0.0) || !std::isfinite(snr_linear))
    throw std::invalid_argument("SignalSpec: snr_linear must be finite and >= 0");
  if (kind == SignalKind::SineSingleCarrier) {
    if (!(sine_normalized_freq > 0.0) || !(sine_normalized_freq < 0.5))
      throw std::invalid_argument(
          "SignalSpec: sine_normalized_freq must lie in (0, 0.5)");
  }
}

namespace {

// Box-Muller, fixed consumption of two uniforms per variate.
double standard_normal(Xoshiro256pp& rng) {
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform_open();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::vector<double> draw_laplacian(const NoiseParams& params, std::size_t n,
                                   Xoshiro256pp& rng) {
  params.validate();
  if (n == 0) throw std::invalid_argument("draw_laplacian: n must be >= 1");

  const double scale = std::sqrt(params.variance_w / 2.0);
  std::vector<double> out(n);
  for (auto& w : out) {
    const double d = rng.uniform_open() - 0.5;  // in (-1/2, 1/2)
    w = -std::copysign(scale, d) * std::log(1.0 - 2.0 * std::abs(d));
  }
  return out;
}

std::vector<double> draw_signal(const SignalSpec& spec, std::size_t n,
                                Xoshiro256pp& rng) {
  spec.validate();
  if (n == 0) throw std::invalid_argument("draw_signal: n must be >= 1");

  std::vector<double> out(n);
  switch (spec.kind) {
    case SignalKind::Bpsk:
      for (auto& s : out) s = (rng.next() >> 63) ? 1.0 : -1.0;
      break;
    case SignalKind::GaussianIid:
      for (auto& s : out) s = standard_normal(rng);
      break;
    case SignalKind::SineSingleCarrier: {
      const double phase = spec.sine_phase
                               ? *spec.sine_phase
                               : rng.uniform_open() * 2.0 * std::numbers::pi;
      const double step = 2.0 * std::numbers::pi * spec.sine_normalized_freq;
      for (std::size_t i = 0; i < n; ++i)
        out[i] = std::numbers::sqrt2 *
                 std::sin(step * static_cast<double>(i + 1) + phase);
      break;
    }
  }
  return out;
}

SampleBlock make_block(const NoiseParams& noise, const SignalSpec& signal,
                       Hypothesis truth, std::size_t n, Xoshiro256pp& rng) {
  if (truth == Hypothesis::H0)
    return SampleBlock{draw_laplacian(noise, n, rng), Hypothesis::H0};

  signal.validate();
  auto samples = draw_laplacian(noise, n, rng);
  const auto s = draw_signal(signal, n, rng);
  const double amplitude = std::sqrt(signal.snr_linear);
  for (std::size_t i = 0; i < n; ++i) samples[i] += amplitude * s[i];
  return SampleBlock{std::move(samples), Hypothesis::H1};
}

}  // namespace ulad
