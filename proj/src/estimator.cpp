#include "walkercount/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "walkercount/errors.hpp"

namespace walkercount {

void EstimatorConfig::validate() const {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (cap < 0) throw std::invalid_argument("cap must be >= 0");
  if (scales < 1 || scales > 62) throw std::invalid_argument("scales must be in [1, 62]");
  if (min_samples < 1) throw std::invalid_argument("min_samples must be >= 1");
  if (min_scales < 1) throw std::invalid_argument("min_scales must be >= 1");
}

Time QuietIntervalSampler::threshold(std::int64_t i, int cap) {
  const std::int64_t e = cap == 0 ? i : std::min<std::int64_t>(i, cap);
  if (e > 62) return std::numeric_limits<Time>::max();
  return Time{1} << e;
}

EstimatedProfile estimate_profile(const OccupancyStream& stream, std::int64_t n_max, int cap,
                                  std::int64_t min_samples) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (cap < 0) throw std::invalid_argument("cap must be >= 0");
  if (stream.empty()) throw InsufficientData("empty occupancy stream");

  const auto& times = stream.occupied_times;
  EstimatedProfile out;
  out.sampler.cap = cap;
  out.sampler.n_max = n_max;
  std::vector<std::int64_t> hits(static_cast<std::size_t>(n_max) + 1, 0);
  std::int64_t complete = 0;

  Time prev = 0;  // time 0 is occupied by construction
  Time search_after = 0;
  std::int64_t index = 1;
  for (std::size_t q = 0; q < times.size(); ++q) {
    const Time t = times[q];
    const Time gap = t - prev - 1;
    prev = t;
    if (t <= search_after) continue;
    const Time threshold = QuietIntervalSampler::threshold(index, cap);
    if (gap < threshold) continue;

    QuietSample sample;
    sample.s = t;
    sample.gap = gap;
    sample.threshold = threshold;
    sample.complete = t + n_max <= stream.horizon;
    for (std::size_t r = q + 1; r < times.size() && times[r] <= t + n_max; ++r)
      sample.hits.push_back(times[r] - t);
    if (sample.complete) {
      ++complete;
      for (auto offset : sample.hits) ++hits[static_cast<std::size_t>(offset)];
    }
    out.sampler.samples.push_back(std::move(sample));
    ++index;
    search_after = t + n_max;
  }

  if (complete < min_samples)
    throw InsufficientData("quiet-interval sampler found " + std::to_string(complete) +
                           " complete windows, need " + std::to_string(min_samples));

  std::vector<double> p(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n)
    p[static_cast<std::size_t>(n - 1)] =
        static_cast<double>(hits[static_cast<std::size_t>(n)]) / static_cast<double>(complete);
  out.profile = ReturnProbabilityProfile(p);
  out.sample_counts.assign(static_cast<std::size_t>(n_max) + 1, complete);
  out.sample_counts[0] = 0;
  return out;
}

ScaleStatistic scale_statistic(const OccupancyStream& stream, Time median, std::int64_t n,
                               const ReturnProbabilityProfile& profile) {
  if (n < 1) throw std::invalid_argument("scale must be >= 1");
  if (median < 1) throw std::invalid_argument("median must be >= 1");
  if (median > stream.horizon)
    throw HorizonExceeded("M_" + std::to_string(n) + " = " + std::to_string(median) +
                          " exceeds horizon " + std::to_string(stream.horizon));

  ScaleStatistic st;
  st.n = n;
  st.median = median;
  const auto& times = stream.occupied_times;
  st.occupied = std::upper_bound(times.begin(), times.end(), median) - times.begin();
  st.y_tilde = static_cast<double>(st.occupied) / static_cast<double>(n);

  double visits = 0.0;
  if (median <= profile.n_max()) {
    visits = expected_visits(profile, median);
  } else {
    // Beyond the estimated range: close p by the forward renewal recursion of
    // the inverted law. Mass the law censors is not redistributed.
    st.extended = true;
    visits = expected_visits(forward_profile(renewal_invert(profile), median), median);
  }
  st.e_single = visits / static_cast<double>(n);
  if (!(st.e_single > 0.0))
    throw InsufficientData("profile predicts no single-walker visits up to M_" +
                           std::to_string(n));
  st.ratio = st.y_tilde / st.e_single;
  return st;
}

std::int64_t round_half_up(double raw) {
  return std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(raw + 0.5)));
}

KEstimate estimate_k(const OccupancyStream& stream, const EstimatorConfig& cfg) {
  cfg.validate();
  stream.validate();

  KEstimate est;
  if (stream.empty()) {
    est.diagnostics.no_evidence = true;
    return est;
  }

  const EstimatedProfile profile =
      estimate_profile(stream, cfg.n_max, cfg.cap, cfg.min_samples);
  const InterReturnLaw law = renewal_invert(profile.profile);
  auto& diag = est.diagnostics;
  diag.samples = profile.samples_used();
  diag.sample_counts = profile.sample_counts;
  diag.clamped_steps = law.clamped_steps;
  diag.clamped_mass = law.clamped_mass;
  diag.censored_tail = law.censored_tail;

  // S_n is only known on the range the sampler covered.
  const auto ladder = sn_ladder(law, cfg.scales, cfg.n_max);
  double sum = 0.0;
  for (int e = 1; e <= cfg.scales; ++e) {
    const std::int64_t n = std::int64_t{1} << e;
    Time m = 0;
    try {
      m = median(ladder[static_cast<std::size_t>(e)]);
    } catch (const TailCensored&) {
      diag.dropped.push_back({n, "tail_censored", std::nullopt});
      continue;
    }
    try {
      est.scales.push_back(scale_statistic(stream, m, n, profile.profile));
      sum += est.scales.back().ratio;
    } catch (const HorizonExceeded&) {
      diag.dropped.push_back({n, "horizon_exceeded", m});
    } catch (const InsufficientData&) {
      diag.dropped.push_back({n, "no_expected_visits", m});
    }
  }

  est.scales_used = static_cast<int>(est.scales.size());
  if (est.scales_used < cfg.min_scales)
    throw TooFewScales(std::to_string(est.scales_used) + " usable scales, need " +
                       std::to_string(cfg.min_scales));
  est.raw = sum / static_cast<double>(est.scales_used);
  est.k_hat = round_half_up(est.raw);
  return est;
}

}  // namespace walkercount
