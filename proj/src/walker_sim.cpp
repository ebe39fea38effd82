#include "walkercount/walker_sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace walkercount {

void OccupancyStream::validate() const {
  if (horizon < 0) throw std::invalid_argument("negative horizon");
  Time prev = 0;
  for (Time t : occupied_times) {
    if (t <= prev) throw std::invalid_argument("occupied times must be strictly increasing and >= 1");
    if (t > horizon) throw std::invalid_argument("occupied time beyond horizon");
    prev = t;
  }
}

void SimConfig::validate() const {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  find_model(model);
}

std::vector<Time> simulate_walker(const GraphModel& model, Time horizon, std::uint64_t seed) {
  Rng rng(seed);
  const Vertex origin = model.origin();
  Vertex v = origin;
  NeighborList list;
  std::vector<Time> returns;
  for (Time t = 1; t <= horizon; ++t) {
    model.neighbors(v, list);
    v = list[rng.below(list.size())];
    if (v == origin) returns.push_back(t);
  }
  return returns;
}

OccupancyStream merge_traces(const WalkerTraces& traces) {
  OccupancyStream out;
  out.horizon = traces.horizon;
  for (const auto& r : traces.return_times) {
    std::vector<Time> merged;
    merged.reserve(out.occupied_times.size() + r.size());
    std::set_union(out.occupied_times.begin(), out.occupied_times.end(), r.begin(), r.end(),
                   std::back_inserter(merged));
    out.occupied_times = std::move(merged);
  }
  return out;
}

Simulation simulate(const GraphModel& model, int k, Time horizon, std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  Simulation sim;
  sim.traces.horizon = horizon;
  sim.traces.return_times.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    sim.traces.return_times.push_back(
        simulate_walker(model, horizon, child_seed(seed, static_cast<std::uint64_t>(j))));
  sim.stream = merge_traces(sim.traces);
  return sim;
}

Simulation simulate(const SimConfig& cfg) {
  cfg.validate();
  return simulate(*find_model(cfg.model), cfg.k, cfg.horizon, cfg.seed);
}

double empirical_p(std::span<const WalkerTraces> runs, int walker, Time n) {
  if (runs.empty()) throw std::invalid_argument("empirical_p needs at least one run");
  std::size_t hits = 0;
  for (const auto& run : runs) {
    if (walker < 0 || walker >= run.k()) throw std::out_of_range("walker index out of range");
    const auto& r = run.return_times[static_cast<std::size_t>(walker)];
    if (std::binary_search(r.begin(), r.end(), n)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(runs.size());
}

}  // namespace walkercount
