#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "walkercount/graph.hpp"

namespace walkercount {

using Time = std::int64_t;

/// The observable: times t >= 1 at which at least one walker sits at the origin.
/// Time 0, when every walker is there, is never part of the stream.
struct OccupancyStream {
  std::vector<Time> occupied_times;
  Time horizon = 0;

  bool empty() const { return occupied_times.empty(); }
  /// Throws std::invalid_argument unless times are strictly increasing in [1, horizon].
  void validate() const;

  friend bool operator==(const OccupancyStream&, const OccupancyStream&) = default;
};

/// Per-walker ground truth. Only oracles and tests look at this.
struct WalkerTraces {
  std::vector<std::vector<Time>> return_times;
  Time horizon = 0;

  int k() const { return static_cast<int>(return_times.size()); }

  friend bool operator==(const WalkerTraces&, const WalkerTraces&) = default;
};

struct SimConfig {
  std::string model = "z1";
  int k = 1;
  Time horizon = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct Simulation {
  OccupancyStream stream;
  WalkerTraces traces;
};

/// Return times in [1, horizon] of one walker started at the origin.
std::vector<Time> simulate_walker(const GraphModel& model, Time horizon, std::uint64_t seed);

/// Walker j draws from child_seed(seed, j), so its trace does not depend on k.
Simulation simulate(const GraphModel& model, int k, Time horizon, std::uint64_t seed);
Simulation simulate(const SimConfig& cfg);

/// Sorted set-union of all per-walker return times.
OccupancyStream merge_traces(const WalkerTraces& traces);

/// Fraction of the given runs (one per seed) in which walker j is at the origin at time n.
double empirical_p(std::span<const WalkerTraces> runs, int walker, Time n);

}  // namespace walkercount
