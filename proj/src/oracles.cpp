#include "walkercount/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "walkercount/errors.hpp"
#include "walkercount/parallel.hpp"

namespace walkercount::oracles {

ReturnProbabilityProfile exact_z_profile(std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<double> p(static_cast<std::size_t>(n_max), 0.0);
  long double even = 1.0L;
  for (std::int64_t t = 2; t <= n_max; t += 2) {
    even *= static_cast<long double>(t - 1) / static_cast<long double>(t);
    p[static_cast<std::size_t>(t - 1)] = static_cast<double>(even);
  }
  return ReturnProbabilityProfile(p);
}

InterReturnLaw exact_z_first_return(std::int64_t n_max) {
  const auto p = exact_z_profile(n_max);
  std::vector<double> f(static_cast<std::size_t>(n_max), 0.0);
  for (std::int64_t t = 2; t <= n_max; t += 2)
    f[static_cast<std::size_t>(t - 1)] = p(t) / static_cast<double>(t - 1);
  return InterReturnLaw::from_pmf(f);
}

double z_return_count_cdf(std::int64_t n, std::int64_t t) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const std::int64_t m = t / 2;
  if (n > m) return 0.0;
  const long double ln2 = std::log(2.0L);
  const auto md = static_cast<long double>(m);
  long double sum = 0.0L;
  for (std::int64_t r = n; r <= m; ++r) {
    const auto rd = static_cast<long double>(r);
    const long double log_term = (rd - 2 * md) * ln2 + std::lgamma(2 * md - rd + 1) -
                                 std::lgamma(md + 1) - std::lgamma(md - rd + 1);
    const long double term = std::exp(log_term);
    sum += term;
    // Terms decrease geometrically in r once they start falling.
    if (term < 1e-20L * sum) break;
  }
  return static_cast<double>(std::min(sum, 1.0L));
}

std::int64_t exact_z_median(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::int64_t hi = n;
  while (z_return_count_cdf(n, 2 * hi) <= 0.5) hi *= 2;
  std::int64_t lo = n;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (z_return_count_cdf(n, 2 * mid) > 0.5)
      hi = mid;
    else
      lo = mid + 1;
  }
  return 2 * lo;
}

std::int64_t double_return_count(const WalkerTraces& traces, int i, int j, Time t) {
  if (i < 0 || j < 0 || i >= traces.k() || j >= traces.k())
    throw std::out_of_range("walker index out of range");
  if (i == j) throw std::invalid_argument("double_return_count needs two distinct walkers");
  const auto& a = traces.return_times[static_cast<std::size_t>(i)];
  const auto& b = traces.return_times[static_cast<std::size_t>(j)];
  std::int64_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end() && *ia <= t && *ib <= t) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

namespace {

// First return time of one walker, or t_max + 1 if none by t_max.
Time first_return(const GraphModel& model, Time t_max, std::uint64_t seed) {
  Rng rng(seed);
  const Vertex origin = model.origin();
  Vertex v = origin;
  NeighborList list;
  for (Time t = 1; t <= t_max; ++t) {
    model.neighbors(v, list);
    v = list[rng.below(list.size())];
    if (v == origin) return t;
  }
  return t_max + 1;
}

// Time of the n-th return, or 0 if it does not happen by cap.
Time nth_return(const GraphModel& model, std::int64_t n, Time cap, std::uint64_t seed) {
  Rng rng(seed);
  const Vertex origin = model.origin();
  Vertex v = origin;
  NeighborList list;
  std::int64_t seen = 0;
  for (Time t = 1; t <= cap; ++t) {
    model.neighbors(v, list);
    v = list[rng.below(list.size())];
    if (v == origin && ++seen == n) return t;
  }
  return 0;
}

constexpr std::size_t kChunk = 4096;

}  // namespace

HazardProfile hazard_profile(const GraphModel& model, std::int64_t seeds, Time t_max,
                             std::uint64_t base_seed) {
  if (seeds < 1) throw std::invalid_argument("seeds must be >= 1");
  if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  const auto n_seeds = static_cast<std::size_t>(seeds);
  const std::size_t chunks = (n_seeds + kChunk - 1) / kChunk;
  const auto histograms = parallel_map(chunks, [&](std::size_t c) {
    std::vector<std::int64_t> hist(static_cast<std::size_t>(t_max) + 2, 0);
    for (std::size_t s = c * kChunk; s < std::min(n_seeds, (c + 1) * kChunk); ++s)
      ++hist[static_cast<std::size_t>(
          first_return(model, t_max, namespaced_seed(kHazardNamespace, base_seed + s)))];
    return hist;
  });

  HazardProfile h;
  h.seeds = seeds;
  const auto size = static_cast<std::size_t>(t_max) + 1;
  h.hazard.assign(size, 0.0);
  h.at_risk.assign(size, 0);
  h.events.assign(size, 0);
  h.defined.assign(size, false);
  for (const auto& hist : histograms)
    for (std::size_t t = 1; t < size; ++t) h.events[t] += hist[t];
  std::int64_t remaining = seeds;
  for (std::size_t t = 1; t < size; ++t) {
    h.at_risk[t] = remaining;
    if (remaining > 0) {
      h.defined[t] = true;
      h.hazard[t] = static_cast<double>(h.events[t]) / static_cast<double>(remaining);
    }
    remaining -= h.events[t];
  }
  return h;
}

double hazard_bound_constant(const HazardProfile& h) {
  double worst = 0.0;
  for (std::size_t t = 2; t < h.hazard.size(); ++t) {
    if (!h.defined[t]) continue;
    const double td = static_cast<double>(t);
    worst = std::max(worst, h.hazard[t] * td / std::log(td));
  }
  return worst;
}

double sqrt_bound(const ReturnProbabilityProfile& profile) {
  double worst = 0.0;
  for (std::int64_t t = 1; t <= profile.n_max(); ++t)
    worst = std::max(worst, profile(t) * std::sqrt(static_cast<double>(t)));
  return worst;
}

ReturnProbabilityProfile monte_carlo_profile(const GraphModel& model, Time t_max,
                                             std::int64_t seeds, std::uint64_t ns,
                                             std::uint64_t base_seed) {
  if (seeds < 1) throw std::invalid_argument("seeds must be >= 1");
  const auto n_seeds = static_cast<std::size_t>(seeds);
  const std::size_t chunk = 256;
  const std::size_t chunks = (n_seeds + chunk - 1) / chunk;
  const auto counts = parallel_map(chunks, [&](std::size_t c) {
    std::vector<std::int64_t> hits(static_cast<std::size_t>(t_max) + 1, 0);
    for (std::size_t s = c * chunk; s < std::min(n_seeds, (c + 1) * chunk); ++s)
      for (Time t : simulate_walker(model, t_max, namespaced_seed(ns, base_seed + s)))
        ++hits[static_cast<std::size_t>(t)];
    return hits;
  });
  std::vector<double> p(static_cast<std::size_t>(t_max), 0.0);
  for (const auto& hits : counts)
    for (Time t = 1; t <= t_max; ++t)
      p[static_cast<std::size_t>(t - 1)] += static_cast<double>(hits[static_cast<std::size_t>(t)]);
  for (auto& v : p) v /= static_cast<double>(seeds);
  return ReturnProbabilityProfile(p);
}

double sqrt_bound_check(const GraphModel& model, Time t_max, std::int64_t seeds,
                        std::uint64_t base_seed) {
  return sqrt_bound(monte_carlo_profile(model, t_max, seeds, kSqrtNamespace, base_seed));
}

EmpiricalMedian empirical_median_sn(const GraphModel& model, std::int64_t n, std::int64_t seeds,
                                    std::uint64_t base_seed, Time step_budget) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (seeds < 1) throw std::invalid_argument("seeds must be >= 1");
  const auto n_seeds = static_cast<std::size_t>(seeds);
  const std::size_t needed = n_seeds / 2 + 1;  // strict: more than half at or below
  Time cap = std::min<Time>(1024, step_budget);
  for (;;) {
    const std::size_t chunks = (n_seeds + kChunk - 1) / kChunk;
    const auto parts = parallel_map(chunks, [&](std::size_t c) {
      std::vector<Time> out;
      for (std::size_t s = c * kChunk; s < std::min(n_seeds, (c + 1) * kChunk); ++s)
        out.push_back(nth_return(model, n, cap, namespaced_seed(kMedianNamespace, base_seed + s)));
      return out;
    });
    std::vector<Time> done;
    done.reserve(n_seeds);
    for (const auto& part : parts)
      for (Time t : part)
        if (t > 0) done.push_back(t);
    if (done.size() >= needed) {
      std::nth_element(done.begin(), done.begin() + static_cast<std::ptrdiff_t>(needed - 1),
                       done.end());
      return {done[needed - 1], cap, static_cast<std::int64_t>(n_seeds - done.size())};
    }
    if (cap >= step_budget)
      throw StepBudgetExceeded("median of S_" + std::to_string(n) + " not determined within " +
                               std::to_string(step_budget) + " steps per walker");
    cap = std::min(cap * 2, step_budget);
  }
}

std::vector<DoubleReturnPoint> double_return_curve(const GraphModel& model,
                                                   const std::vector<Time>& grid,
                                                   std::int64_t seeds, std::uint64_t base_seed) {
  if (grid.empty()) return {};
  if (!std::is_sorted(grid.begin(), grid.end()) || grid.front() < 1)
    throw std::invalid_argument("time grid must be increasing and >= 1");
  const Time horizon = grid.back();
  struct Counts {
    std::vector<std::int64_t> doubles, singles;
  };
  const auto per_seed = parallel_map(static_cast<std::size_t>(seeds), [&](std::size_t s) {
    const auto sim =
        simulate(model, 2, horizon, namespaced_seed(kDoubleReturnNamespace, base_seed + s));
    Counts c;
    for (Time t : grid) {
      c.doubles.push_back(double_return_count(sim.traces, 0, 1, t));
      const auto& r = sim.traces.return_times[0];
      c.singles.push_back(std::upper_bound(r.begin(), r.end(), t) - r.begin());
    }
    return c;
  });
  std::vector<DoubleReturnPoint> curve;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    DoubleReturnPoint pt;
    pt.t = grid[g];
    for (const auto& c : per_seed) {
      pt.mean_double += static_cast<double>(c.doubles[g]);
      pt.mean_single += static_cast<double>(c.singles[g]);
    }
    pt.mean_double /= static_cast<double>(seeds);
    pt.mean_single /= static_cast<double>(seeds);
    pt.ratio = pt.mean_single > 0 ? pt.mean_double / std::pow(pt.mean_single, 2.0 / 3.0) : 0.0;
    curve.push_back(pt);
  }
  return curve;
}

std::string constant_key(const std::string& model, const std::string& check) {
  return model + "/" + check;
}

std::map<std::string, double> load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open constants file " + path);
  std::map<std::string, double> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string model, check;
    double value = 0.0;
    if (!(fields >> model >> check >> value))
      throw ParseError(number, "expected '<model> <check> <value>' in " + path);
    out[constant_key(model, check)] = value;
  }
  return out;
}

}  // namespace walkercount::oracles
