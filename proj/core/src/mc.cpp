#include "ulad/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ulad/analytic.hpp"

namespace ulad {

namespace {

// Chunk boundaries are part of the determinism contract: every worker count
// sees the same per-trial RNG streams and writes to disjoint slots.
constexpr std::size_t kChunkSize = 1024;

std::size_t effective_workers(const ExperimentPlan& plan) {
  if (plan.workers > 0) return plan.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

template <typename Fn>
void run_trials(std::size_t count, std::size_t workers, Fn&& fn) {
  if (workers <= 1 || count <= kChunkSize) {
    for (std::size_t t = 0; t < count; ++t) fn(t);
    return;
  }

  const std::size_t n_chunks = (count + kChunkSize - 1) / kChunkSize;
  std::atomic<std::size_t> next_chunk{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t chunk = next_chunk.fetch_add(1);
        if (chunk >= n_chunks) return;
        const std::size_t lo = chunk * kChunkSize;
        const std::size_t hi = std::min(count, lo + kChunkSize);
        for (std::size_t t = lo; t < hi; ++t) fn(t);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

McStream stream_for(Hypothesis truth) {
  return truth == Hypothesis::H0 ? McStream::EvalH0 : McStream::EvalH1;
}

}  // namespace

void ExperimentPlan::validate() const {
  noise.validate();
  signal.validate();
  detector.validate();
  if (n < 1) throw std::invalid_argument("ExperimentPlan: n must be >= 1");
  if (trials < 1) throw std::invalid_argument("ExperimentPlan: trials must be >= 1");
}

std::vector<double> statistic_batch(const ExperimentPlan& plan, Hypothesis truth,
                                    std::size_t count, McStream stream) {
  plan.validate();
  std::vector<double> out(count);
  run_trials(count, effective_workers(plan), [&](std::size_t t) {
    auto rng = Xoshiro256pp::for_stream(plan.seed,
                                        static_cast<std::uint64_t>(stream), t);
    const SampleBlock block = make_block(plan.noise, plan.signal, truth, plan.n, rng);
    out[t] = compute_statistic(plan.detector, block, plan.noise).value;
  });
  return out;
}

McEstimate estimate_rate(const ExperimentPlan& plan, Hypothesis truth,
                         double threshold) {
  if (std::isnan(threshold))
    throw std::invalid_argument("estimate_rate: threshold must not be NaN");
  const auto stats = statistic_batch(plan, truth, plan.trials, stream_for(truth));
  std::size_t hits = 0;
  for (double s : stats)
    if (s >= threshold) ++hits;

  McEstimate est;
  est.trials = plan.trials;
  est.seed = plan.seed;
  est.p_hat = static_cast<double>(hits) / static_cast<double>(plan.trials);
  est.std_err =
      std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(plan.trials));
  return est;
}

CalibrationResult calibrate_threshold(const ExperimentPlan& plan, double target_pf,
                                      std::size_t calib_trials) {
  if (!(target_pf > 0.0) || !(target_pf < 1.0))
    throw std::invalid_argument("calibrate_threshold: target_pf must lie in (0, 1)");
  if (calib_trials < 1 ||
      static_cast<double>(calib_trials) * target_pf < 1.0)
    throw std::invalid_argument(
        "calibrate_threshold: calib_trials must be at least 1/target_pf");

  CalibrationResult result;
  result.low_precision = target_pf * static_cast<double>(calib_trials) < 50.0;

  auto stats = statistic_batch(plan, Hypothesis::H0, calib_trials,
                               McStream::Calibration);
  // Order statistic at rank ceil((1 - pf) * N): conservative, never exceeds
  // the target false-alarm rate by more than one slot.
  auto rank = static_cast<std::size_t>(
      std::ceil((1.0 - target_pf) * static_cast<double>(calib_trials)));
  rank = std::clamp<std::size_t>(rank, 1, calib_trials);
  std::nth_element(stats.begin(), stats.begin() + (rank - 1), stats.end());
  result.threshold = stats[rank - 1];
  return result;
}

std::vector<RocPoint> roc_sweep(const ExperimentPlan& plan,
                                std::span<const double> pf_grid) {
  if (pf_grid.empty())
    throw std::invalid_argument("roc_sweep: empty pf grid");
  for (double pf : pf_grid)
    if (!(pf > 0.0) || !(pf < 1.0))
      throw std::invalid_argument("roc_sweep: pf grid values must lie in (0, 1)");

  const bool analytic_threshold = plan.detector.tag == DetectorTag::Ulad;
  std::vector<double> calib;
  if (!analytic_threshold) {
    calib = statistic_batch(plan, Hypothesis::H0, plan.calib_trials,
                            McStream::Calibration);
    std::sort(calib.begin(), calib.end());
  }

  auto h1 = statistic_batch(plan, Hypothesis::H1, plan.trials, McStream::EvalH1);
  std::sort(h1.begin(), h1.end());
  const double dtrials = static_cast<double>(plan.trials);

  std::vector<RocPoint> points;
  points.reserve(pf_grid.size());
  for (double pf : pf_grid) {
    RocPoint pt;
    pt.pf = pf;
    if (analytic_threshold) {
      pt.threshold = threshold_from_pf(pf, plan.n);
    } else {
      auto rank = static_cast<std::size_t>(
          std::ceil((1.0 - pf) * static_cast<double>(calib.size())));
      rank = std::clamp<std::size_t>(rank, 1, calib.size());
      pt.threshold = calib[rank - 1];
    }
    const auto it = std::lower_bound(h1.begin(), h1.end(), pt.threshold);
    pt.pd = static_cast<double>(h1.end() - it) / dtrials;
    pt.pd_std_err = std::sqrt(pt.pd * (1.0 - pt.pd) / dtrials);
    points.push_back(pt);
  }
  return points;
}

std::vector<ErrorPoint> total_error_sweep(const ExperimentPlan& plan,
                                          std::span<const double> gamma_grid) {
  if (gamma_grid.empty())
    throw std::invalid_argument("total_error_sweep: empty gamma grid");

  auto h0 = statistic_batch(plan, Hypothesis::H0, plan.trials, McStream::EvalH0);
  auto h1 = statistic_batch(plan, Hypothesis::H1, plan.trials, McStream::EvalH1);
  std::sort(h0.begin(), h0.end());
  std::sort(h1.begin(), h1.end());
  const double dtrials = static_cast<double>(plan.trials);

  std::vector<ErrorPoint> points;
  points.reserve(gamma_grid.size());
  for (double gamma : gamma_grid) {
    const auto above_h0 =
        h0.end() - std::lower_bound(h0.begin(), h0.end(), gamma);
    const auto above_h1 =
        h1.end() - std::lower_bound(h1.begin(), h1.end(), gamma);
    const double pf = static_cast<double>(above_h0) / dtrials;
    const double pd = static_cast<double>(above_h1) / dtrials;
    points.push_back({gamma, pf + (1.0 - pd)});
  }
  return points;
}

double resolve_threshold(const ExperimentPlan& plan) {
  if (plan.target_pf.has_value() == plan.gamma_override.has_value())
    throw std::invalid_argument(
        "resolve_threshold: exactly one of target_pf / gamma_override required");
  if (plan.gamma_override) return *plan.gamma_override;
  if (plan.detector.tag == DetectorTag::Ulad)
    return threshold_from_pf(*plan.target_pf, plan.n);
  return calibrate_threshold(plan, *plan.target_pf, plan.calib_trials).threshold;
}

}  // namespace ulad
