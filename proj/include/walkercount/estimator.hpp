#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkercount/defaults.hpp"
#include "walkercount/renewal.hpp"
#include "walkercount/walker_sim.hpp"

namespace walkercount {

/// One quiet-interval sample: s is the first occupied time after a gap of at
/// least `threshold` unoccupied steps; `hits` are the occupied offsets in 1..n_max.
struct QuietSample {
  Time s = 0;
  Time gap = 0;
  Time threshold = 0;
  bool complete = false;  // s + n_max <= horizon
  std::vector<std::int64_t> hits;
};

struct QuietIntervalSampler {
  int cap = 0;
  std::int64_t n_max = 0;
  std::vector<QuietSample> samples;

  /// 2^min(i, cap) for 1-based sample index i (cap 0: 2^i). Saturates for
  /// exponents past 62, which no finite stream can meet.
  static Time threshold(std::int64_t i, int cap);
};

struct EstimatedProfile {
  ReturnProbabilityProfile profile;
  /// sample_counts[n] = number of samples behind p_hat(n); index 0 unused.
  std::vector<std::int64_t> sample_counts;
  QuietIntervalSampler sampler;

  std::int64_t samples_used() const { return sample_counts.size() > 1 ? sample_counts[1] : 0; }
};

struct ScaleStatistic {
  std::int64_t n = 0;
  Time median = 0;
  std::int64_t occupied = 0;  // |{1 <= t <= median : t occupied}|
  double y_tilde = 0.0;
  double e_single = 0.0;
  double ratio = 0.0;
  /// e_single needed p beyond the estimated range and used the renewal extension.
  bool extended = false;

  friend bool operator==(const ScaleStatistic&, const ScaleStatistic&) = default;
};

struct DroppedScale {
  std::int64_t n = 0;
  std::string reason;  // "tail_censored", "horizon_exceeded", "no_expected_visits"
  std::optional<Time> median;

  friend bool operator==(const DroppedScale&, const DroppedScale&) = default;
};

struct EstimateDiagnostics {
  bool no_evidence = false;
  std::int64_t samples = 0;
  std::vector<std::int64_t> sample_counts;
  std::size_t clamped_steps = 0;
  double clamped_mass = 0.0;
  double censored_tail = 0.0;
  std::vector<DroppedScale> dropped;

  friend bool operator==(const EstimateDiagnostics&, const EstimateDiagnostics&) = default;
};

struct KEstimate {
  double raw = 0.0;
  std::int64_t k_hat = 0;
  int scales_used = 0;
  std::vector<ScaleStatistic> scales;
  EstimateDiagnostics diagnostics;

  friend bool operator==(const KEstimate&, const KEstimate&) = default;
};

/// Quiet-interval sampler over the stream. Throws InsufficientData when fewer
/// than `min_samples` complete windows are found.
EstimatedProfile estimate_profile(const OccupancyStream& stream, std::int64_t n_max, int cap,
                                  std::int64_t min_samples = 1);

/// Throws HorizonExceeded if median > horizon, InsufficientData if the profile
/// expects no visits up to the median.
ScaleStatistic scale_statistic(const OccupancyStream& stream, Time median, std::int64_t n,
                               const ReturnProbabilityProfile& profile);

KEstimate estimate_k(const OccupancyStream& stream, const EstimatorConfig& cfg = {});

/// Nearest integer, halves rounding up, never below 0.
std::int64_t round_half_up(double raw);

}  // namespace walkercount
