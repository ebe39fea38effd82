#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "walkercount/graph.hpp"
#include "walkercount/renewal.hpp"
#include "walkercount/walker_sim.hpp"

namespace walkercount::oracles {

// Seed namespaces for oracle Monte Carlo; see namespaced_seed().
inline constexpr std::uint64_t kHazardNamespace = 0x4841;
inline constexpr std::uint64_t kSqrtNamespace = 0x5351;
inline constexpr std::uint64_t kMedianNamespace = 0x4d45;
inline constexpr std::uint64_t kDoubleReturnNamespace = 0x4452;

/// SRW on Z: p(2m) = C(2m, m) 4^-m, p(odd) = 0.
ReturnProbabilityProfile exact_z_profile(std::int64_t n_max);

/// SRW on Z: f(2m) = C(2m, m) 4^-m / (2m - 1), f(odd) = 0.
InterReturnLaw exact_z_first_return(std::int64_t n_max);

/// P(S_n <= t) on Z from the closed-form law of the number of returns:
/// P(N(2m) = r) = 2^(r - 2m) C(2m - r, m).
double z_return_count_cdf(std::int64_t n, std::int64_t t);

/// Median of the n-th return time on Z, strict convention, from the closed form.
std::int64_t exact_z_median(std::int64_t n);

/// |{s <= t : s in return_times(i) and return_times(j)}|.
std::int64_t double_return_count(const WalkerTraces& traces, int i, int j, Time t);

struct HazardProfile {
  std::int64_t seeds = 0;
  /// Indexed by t; entry 0 unused. hazard[t] = events[t] / at_risk[t].
  std::vector<double> hazard;
  std::vector<std::int64_t> at_risk;
  std::vector<std::int64_t> events;
  std::vector<bool> defined;  // false when nobody was still at risk at t
};

/// Conditional first-return frequencies over `seeds` independent walkers.
HazardProfile hazard_profile(const GraphModel& model, std::int64_t seeds, Time t_max,
                             std::uint64_t base_seed = 0);

/// max over defined t >= 2 of hazard(t) t / log t.
double hazard_bound_constant(const HazardProfile& h);

/// max over t of p(t) sqrt(t) for a profile (exact or estimated).
double sqrt_bound(const ReturnProbabilityProfile& profile);

/// Monte Carlo p_hat(t) from `seeds` single walkers, then sqrt_bound of it.
double sqrt_bound_check(const GraphModel& model, Time t_max, std::int64_t seeds,
                        std::uint64_t base_seed = 0);

/// Empirical p_hat(t), t = 1..t_max, from `seeds` independent single walkers.
ReturnProbabilityProfile monte_carlo_profile(const GraphModel& model, Time t_max,
                                             std::int64_t seeds, std::uint64_t ns,
                                             std::uint64_t base_seed);

struct EmpiricalMedian {
  std::int64_t median = 0;
  /// The walk-length cap the run finished with (walkers not done by then only
  /// count as "> cap").
  Time cap = 0;
  std::int64_t censored = 0;
};

/// Empirical median of the n-th return time over `seeds` walkers, strict
/// convention. Walkers run until their n-th return or a cap that doubles until
/// the median is determined; throws StepBudgetExceeded once the cap would pass
/// `step_budget`.
EmpiricalMedian empirical_median_sn(const GraphModel& model, std::int64_t n, std::int64_t seeds,
                                    std::uint64_t base_seed = 0,
                                    Time step_budget = 1'000'000'000);

struct DoubleReturnPoint {
  Time t = 0;
  double mean_double = 0.0;  // mean |{s <= t : both walkers at o}|
  double mean_single = 0.0;  // mean |{s <= t : walker 0 at o}|
  double ratio = 0.0;        // mean_double / mean_single^(2/3)
};

/// Two walkers over `seeds` runs, evaluated on the given increasing time grid.
std::vector<DoubleReturnPoint> double_return_curve(const GraphModel& model,
                                                   const std::vector<Time>& grid,
                                                   std::int64_t seeds,
                                                   std::uint64_t base_seed = 0);

/// Frozen regression constants. One record per line, `<model> <check> <value>`;
/// blank lines and lines starting with '#' are ignored.
std::map<std::string, double> load_constants(const std::string& path);

/// Key used by load_constants: "<model>/<check>".
std::string constant_key(const std::string& model, const std::string& check);

}  // namespace walkercount::oracles
