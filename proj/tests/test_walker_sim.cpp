#include <doctest.h>

#include <algorithm>
#include <set>

#include "walkercount/walker_sim.hpp"

using namespace walkercount;

TEST_SUITE("walker_sim") {
  TEST_CASE("no walkers, no occupancy") {
    const auto sim = simulate(SimConfig{"z1", 0, 5000, 3});
    CHECK(sim.stream.empty());
    CHECK(sim.stream.horizon == 5000);
    CHECK(sim.traces.k() == 0);
  }

  TEST_CASE("single walker on Z never occupies the origin at odd times") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto sim = simulate(SimConfig{"z1", 1, 20000, seed});
      CHECK_FALSE(sim.stream.empty());
      for (Time t : sim.stream.occupied_times) REQUIRE(t % 2 == 0);
      CHECK(sim.stream.occupied_times.front() >= 1);
    }
  }

  TEST_CASE("two walkers give the merge of the two child streams") {
    const std::uint64_t seed = 7;
    const auto both = simulate(SimConfig{"z1", 2, 10000, seed});
    const auto w0 = simulate_walker(LineGraph{}, 10000, child_seed(seed, 0));
    const auto w1 = simulate_walker(LineGraph{}, 10000, child_seed(seed, 1));
    std::vector<Time> merged;
    std::set_union(w0.begin(), w0.end(), w1.begin(), w1.end(), std::back_inserter(merged));
    CHECK(both.stream.occupied_times == merged);
    CHECK(both.traces.return_times[0] == w0);
    CHECK(both.traces.return_times[1] == w1);
  }

  TEST_CASE("stream equals the set union of traces for random configs") {
    Rng rng(2024);
    const std::vector<std::string> models{"z1", "z2", "comb"};
    for (int i = 0; i < 20; ++i) {
      SimConfig cfg{models[rng.below(3)], static_cast<int>(rng.below(5)),
                    static_cast<Time>(1 + rng.below(20000)), rng.next()};
      const auto sim = simulate(cfg);
      std::set<Time> all;
      for (const auto& r : sim.traces.return_times) {
        CHECK(std::is_sorted(r.begin(), r.end()));
        all.insert(r.begin(), r.end());
      }
      CHECK(std::vector<Time>(all.begin(), all.end()) == sim.stream.occupied_times);
      CHECK_NOTHROW(sim.stream.validate());
    }
  }

  TEST_CASE("walker traces do not depend on k") {
    const auto one = simulate(SimConfig{"z2", 1, 50000, 17});
    const auto three = simulate(SimConfig{"z2", 3, 50000, 17});
    CHECK(one.traces.return_times[0] == three.traces.return_times[0]);

    const auto k1 = simulate(SimConfig{"z1", 1, 50000, 5});
    const auto k2 = simulate(SimConfig{"z1", 2, 50000, 5});
    CHECK(std::includes(k2.stream.occupied_times.begin(), k2.stream.occupied_times.end(),
                        k1.stream.occupied_times.begin(), k1.stream.occupied_times.end()));
  }

  TEST_CASE("config validation") {
    CHECK_THROWS_AS(SimConfig("z1", -1, 10, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SimConfig("z1", 1, 0, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SimConfig("cave", 1, 10, 0).validate(), std::invalid_argument);
    OccupancyStream bad{{3, 2}, 10};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    OccupancyStream late{{3, 12}, 10};
    CHECK_THROWS_AS(late.validate(), std::invalid_argument);
  }

  TEST_CASE("empirical return probabilities on Z") {
    // Exact values: p(2) = 2/4 (paths +- and -+), p(4) = C(4,2)/16 = 3/8.
    std::vector<WalkerTraces> runs;
    runs.reserve(100000);
    for (std::uint64_t s = 0; s < 100000; ++s)
      runs.push_back(simulate(LineGraph{}, 1, 4, s).traces);
    CHECK(std::abs(empirical_p(runs, 0, 2) - 0.5) <= 0.01);
    CHECK(std::abs(empirical_p(runs, 0, 4) - 0.375) <= 0.01);
    CHECK(empirical_p(runs, 0, 1) == 0.0);
    CHECK_THROWS_AS(empirical_p(runs, 1, 2), std::out_of_range);
  }
}
