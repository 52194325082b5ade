#include "ulad/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ulad {

namespace instrument {

Counters& counters() noexcept {
  thread_local Counters c;
  return c;
}

void reset() noexcept { counters() = Counters{}; }

}  // namespace instrument

namespace {

constexpr double kOneMinusZCeil = 1.0 - 1e-15;

void require_nonempty(const ZBlock& zb) {
  if (zb.z.empty()) throw std::invalid_argument("detector: empty ZBlock");
}

std::vector<double> sorted_z(const ZBlock& zb) {
  std::vector<double> zs(zb.z);
  std::sort(zs.begin(), zs.end());
  ++instrument::counters().sorts;
  return zs;
}

}  // namespace

void DetectorKind::validate() const {
  if (tag == DetectorTag::Pom) {
    if (!(pom_exponent > 0.0) || !(pom_exponent < 2.0))
      throw std::invalid_argument("DetectorKind: POM exponent must lie in (0, 2)");
  }
}

std::string_view DetectorKind::name() const noexcept {
  switch (tag) {
    case DetectorTag::Ulad: return "ulad";
    case DetectorTag::Ks: return "ks";
    case DetectorTag::Cm: return "cm";
    case DetectorTag::Ad: return "ad";
    case DetectorTag::Ed: return "ed";
    case DetectorTag::Avc: return "avc";
    case DetectorTag::Pom: return "pom";
  }
  return "?";
}

DetectorKind detector_from_name(std::string_view name, double pom_exponent) {
  DetectorKind kind;
  kind.pom_exponent = pom_exponent;
  if (name == "ulad") kind.tag = DetectorTag::Ulad;
  else if (name == "ks") kind.tag = DetectorTag::Ks;
  else if (name == "cm") kind.tag = DetectorTag::Cm;
  else if (name == "ad") kind.tag = DetectorTag::Ad;
  else if (name == "ed") kind.tag = DetectorTag::Ed;
  else if (name == "avc") kind.tag = DetectorTag::Avc;
  else if (name == "pom") kind.tag = DetectorTag::Pom;
  else throw std::invalid_argument("unknown detector: " + std::string(name));
  kind.validate();
  return kind;
}

DetectorStatistic ulad_statistic(const ZBlock& zb) {
  require_nonempty(zb);
  const std::size_t n = zb.n();
  double sum_ln = 0.0;
  for (double z : zb.z) sum_ln += std::log(z);
  instrument::counters().element_visits += n;
  return {static_cast<double>(n) + sum_ln, DetectorKind{DetectorTag::Ulad}, n};
}

DetectorStatistic ks_statistic(const ZBlock& zb) {
  require_nonempty(zb);
  const std::size_t n = zb.n();
  const auto zs = sorted_z(zb);
  const double dn = static_cast<double>(n);
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double hi = static_cast<double>(i + 1) / dn - zs[i];
    const double lo = zs[i] - static_cast<double>(i) / dn;
    sup = std::max(sup, std::max(hi, lo));
  }
  instrument::counters().element_visits += n;
  return {sup, DetectorKind{DetectorTag::Ks}, n};
}

DetectorStatistic cm_statistic(const ZBlock& zb) {
  require_nonempty(zb);
  const std::size_t n = zb.n();
  const auto zs = sorted_z(zb);
  const double dn = static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = zs[i] - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * dn);
    sum += d * d;
  }
  instrument::counters().element_visits += n;
  return {sum + 1.0 / (12.0 * dn), DetectorKind{DetectorTag::Cm}, n};
}

DetectorStatistic ad_statistic(const ZBlock& zb) {
  require_nonempty(zb);
  const std::size_t n = zb.n();
  const auto zs = sorted_z(zb);
  const double dn = static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double weight = 2.0 * static_cast<double>(i) + 1.0;
    const double z_mirror = std::min(zs[n - 1 - i], kOneMinusZCeil);
    acc += weight * (std::log(zs[i]) + std::log1p(-z_mirror));
  }
  instrument::counters().element_visits += n;
  return {-acc / dn - dn, DetectorKind{DetectorTag::Ad}, n};
}

DetectorStatistic moment_statistic(const SampleBlock& block, double p) {
  if (block.samples.empty())
    throw std::invalid_argument("moment_statistic: block must be nonempty");
  if (!(p > 0.0) || !std::isfinite(p))
    throw std::invalid_argument("moment_statistic: p must be finite and > 0");

  const std::size_t n = block.n();
  double sum = 0.0;
  if (p == 2.0) {
    for (double y : block.samples) sum += y * y;
  } else if (p == 1.0) {
    for (double y : block.samples) sum += std::abs(y);
  } else if (p == 1.5) {
    for (double y : block.samples) {
      const double a = std::abs(y);
      sum += a * std::sqrt(a);
    }
  } else if (p == 0.5) {
    for (double y : block.samples) sum += std::sqrt(std::abs(y));
  } else {
    for (double y : block.samples) sum += std::pow(std::abs(y), p);
  }
  instrument::counters().element_visits += n;

  DetectorKind kind;
  if (p == 2.0) kind.tag = DetectorTag::Ed;
  else if (p == 1.0) kind.tag = DetectorTag::Avc;
  else { kind.tag = DetectorTag::Pom; kind.pom_exponent = p; }
  return {sum, kind, n};
}

DetectorStatistic compute_statistic(const DetectorKind& kind,
                                    const SampleBlock& block,
                                    const NoiseParams& noise) {
  kind.validate();
  switch (kind.tag) {
    case DetectorTag::Ulad: return ulad_statistic(z_transform(block, noise));
    case DetectorTag::Ks: return ks_statistic(z_transform(block, noise));
    case DetectorTag::Cm: return cm_statistic(z_transform(block, noise));
    case DetectorTag::Ad: return ad_statistic(z_transform(block, noise));
    case DetectorTag::Ed: return moment_statistic(block, 2.0);
    case DetectorTag::Avc: return moment_statistic(block, 1.0);
    case DetectorTag::Pom: return moment_statistic(block, kind.pom_exponent);
  }
  throw std::invalid_argument("compute_statistic: bad detector tag");
}

Decision decide(const DetectorStatistic& stat, double threshold) {
  if (std::isnan(threshold))
    throw std::invalid_argument("decide: threshold must not be NaN");
  Decision d;
  d.statistic = stat;
  d.threshold = threshold;
  d.verdict = stat.value >= threshold ? Hypothesis::H1 : Hypothesis::H0;
  return d;
}

}  // namespace ulad
