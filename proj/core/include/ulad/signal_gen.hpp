#ifndef ULAD_SIGNAL_GEN_HPP
#define ULAD_SIGNAL_GEN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ulad/rng.hpp"

namespace ulad {

/// Laplacian (double-exponential) noise, mean zero, variance variance_w.
struct NoiseParams {
  double variance_w = 1.0;

  void validate() const;  // throws std::invalid_argument unless finite and > 0
};

enum class SignalKind { Bpsk, GaussianIid, SineSingleCarrier };

/// Primary-user signal description. All kinds have unit average power, so
/// snr_linear is both the amplitude-squared scale and (for unit noise
/// variance) the per-sample SNR.
struct SignalSpec {
  SignalKind kind = SignalKind::Bpsk;
  double snr_linear = 0.0;
  double sine_normalized_freq = 0.05;    // cycles per sample, must be in (0, 0.5)
  std::optional<double> sine_phase;      // fixed phase; nullopt = uniform per block

  void validate() const;
};

enum class Hypothesis { H0, H1 };

struct SampleBlock {
  std::vector<double> samples;
  Hypothesis truth = Hypothesis::H0;

  std::size_t n() const noexcept { return samples.size(); }
};

/// i.i.d. Laplacian noise via inverse CDF: W = -sign(U-1/2) * b * ln(1-2|U-1/2|)
/// with scale b = sqrt(variance/2). One uniform per sample, reproducible.
std::vector<double> draw_laplacian(const NoiseParams& params, std::size_t n,
                                   Xoshiro256pp& rng);

/// Unit-power signal sequence: BPSK +-1, standard normal, or
/// sqrt(2)*sin(2*pi*f*i + phase).
std::vector<double> draw_signal(const SignalSpec& spec, std::size_t n,
                                Xoshiro256pp& rng);

/// H0: pure noise. H1: sqrt(snr_linear)*S_i + W_i elementwise. Under H0 the
/// generator consumes exactly the same random stream as draw_laplacian, so an
/// H0 block equals the bare noise draw for the same generator state.
SampleBlock make_block(const NoiseParams& noise, const SignalSpec& signal,
                       Hypothesis truth, std::size_t n, Xoshiro256pp& rng);

}  // namespace ulad

#endif
