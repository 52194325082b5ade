#ifndef ULAD_MC_HPP
#define ULAD_MC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ulad/detectors.hpp"
#include "ulad/signal_gen.hpp"

namespace ulad {

/// Disjoint RNG stream identifiers. Calibration never shares random numbers
/// with evaluation, so calibrated thresholds are not optimistically biased.
enum class McStream : std::uint64_t {
  EvalH0 = 1,
  EvalH1 = 2,
  Calibration = 3,
};

struct ExperimentPlan {
  NoiseParams noise;
  SignalSpec signal;
  std::size_t n = 1000;
  std::size_t trials = 100000;
  DetectorKind detector;
  std::optional<double> target_pf;
  std::optional<double> gamma_override;
  std::uint64_t seed = 1;
  std::size_t calib_trials = 100000;
  std::size_t k_max = 1000;
  std::size_t workers = 0;  // 0 = hardware concurrency; never affects results

  void validate() const;
};

struct McEstimate {
  double p_hat = 0.0;
  std::size_t trials = 0;
  double std_err = 0.0;  // sqrt(p_hat (1 - p_hat) / trials)
  std::uint64_t seed = 0;
};

/// One detector statistic per trial, trial t drawn from the counter-based
/// stream (plan.seed, stream, t). Output is identical for any worker count.
std::vector<double> statistic_batch(const ExperimentPlan& plan, Hypothesis truth,
                                    std::size_t count, McStream stream);

/// Fraction of plan.trials independent blocks whose statistic is >= threshold.
McEstimate estimate_rate(const ExperimentPlan& plan, Hypothesis truth,
                         double threshold);

struct CalibrationResult {
  double threshold = 0.0;
  /// Set when target_pf * calib_trials < 50: too few exceedances above the
  /// chosen order statistic to pin the quantile down reliably.
  bool low_precision = false;
};

/// Empirical (1 - target_pf) quantile of the H0 statistic: the order statistic
/// at rank ceil((1 - target_pf) * calib_trials).
CalibrationResult calibrate_threshold(const ExperimentPlan& plan, double target_pf,
                                      std::size_t calib_trials);

struct RocPoint {
  double pf = 0.0;  // target false-alarm rate for this grid point
  double pd = 0.0;
  double threshold = 0.0;
  double pd_std_err = 0.0;
};

/// For each target Pf: detection threshold (closed-form for ULAD, H0-quantile
/// calibration otherwise) and the Monte Carlo detection probability.
std::vector<RocPoint> roc_sweep(const ExperimentPlan& plan,
                                std::span<const double> pf_grid);

struct ErrorPoint {
  double gamma = 0.0;
  double p_error = 0.0;  // empirical Pf + (1 - Pd)
};

/// Empirical total error rate over a threshold grid, from plan.trials H0 and
/// plan.trials H1 blocks (the same blocks are scored against every gamma).
std::vector<ErrorPoint> total_error_sweep(const ExperimentPlan& plan,
                                          std::span<const double> gamma_grid);

/// Resolve the detection threshold for a plan: exactly one of target_pf /
/// gamma_override must be set. target_pf uses the ULAD closed form or, for
/// baseline detectors, empirical calibration with plan.calib_trials blocks.
double resolve_threshold(const ExperimentPlan& plan);

}  // namespace ulad

#endif
