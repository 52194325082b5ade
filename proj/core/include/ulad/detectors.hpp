#ifndef ULAD_DETECTORS_HPP
#define ULAD_DETECTORS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ulad/gof.hpp"
#include "ulad/signal_gen.hpp"

namespace ulad {

enum class DetectorTag { Ulad, Ks, Cm, Ad, Ed, Avc, Pom };

struct DetectorKind {
  DetectorTag tag = DetectorTag::Ulad;
  double pom_exponent = 1.5;  // only meaningful for Pom, must be in (0, 2)

  void validate() const;
  std::string_view name() const noexcept;
};

/// Parse "ulad", "ks", "cm", "ad", "ed", "avc" or "pom". Throws
/// std::invalid_argument on anything else.
DetectorKind detector_from_name(std::string_view name, double pom_exponent = 1.5);

struct DetectorStatistic {
  double value = 0.0;
  DetectorKind kind;
  std::size_t n = 0;
};

struct Decision {
  Hypothesis verdict = Hypothesis::H0;
  DetectorStatistic statistic;
  double threshold = 0.0;
};

/// B_n = n + sum(ln z_i). One pass, no sorting.
DetectorStatistic ulad_statistic(const ZBlock& zb);

/// Kolmogorov-Smirnov: sup |F_n - F0|, computed over the sorted z as
/// max(i/n - z_(i), z_(i) - (i-1)/n).
DetectorStatistic ks_statistic(const ZBlock& zb);

/// Cramer-von Mises: sum (z_(i) - (2i-1)/(2n))^2 + 1/(12n).
DetectorStatistic cm_statistic(const ZBlock& zb);

/// Anderson-Darling: -(1/n) sum (2i-1)(ln z_(i) + ln(1 - z_(n+1-i))) - n.
/// z is clamped to at most 1 - 1e-15 inside the ln(1 - .) terms.
DetectorStatistic ad_statistic(const ZBlock& zb);

/// sum |Y_i|^p. p = 2 is the energy detector, p = 1 absolute-value
/// cumulation, anything else a p-th-order-moment detector.
DetectorStatistic moment_statistic(const SampleBlock& block, double p);

/// Evaluate whichever statistic `kind` names on a raw block.
DetectorStatistic compute_statistic(const DetectorKind& kind,
                                    const SampleBlock& block,
                                    const NoiseParams& noise);

/// H1 iff value >= threshold (threshold boundary is inclusive).
Decision decide(const DetectorStatistic& stat, double threshold);

namespace instrument {

/// Thread-local operation counters bumped by the statistic implementations.
/// Tests use these to pin down the advertised complexity (ULAD: one pass and
/// no sort; AD/CM: exactly one sort).
struct Counters {
  std::uint64_t sorts = 0;
  std::uint64_t element_visits = 0;
};

Counters& counters() noexcept;
void reset() noexcept;

}  // namespace instrument

}  // namespace ulad

#endif
