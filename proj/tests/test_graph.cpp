#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "walkercount/graph.hpp"

using namespace walkercount;

namespace {

std::map<Vertex, int> step_frequencies(const GraphModel& g, const Vertex& v, int draws,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::map<Vertex, int> counts;
  for (int i = 0; i < draws; ++i) ++counts[step(g, v, rng)];
  return counts;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("builtin models include Z, Z^2 and the comb") {
    std::set<std::string> names;
    for (const auto& m : builtin_models()) names.emplace(m->name());
    CHECK(names == std::set<std::string>{"z1", "z2", "comb"});
    CHECK(find_model("Z")->name() == "z1");
    CHECK(find_model("z2")->name() == "z2");
    CHECK_THROWS_AS(find_model("torus"), std::invalid_argument);
  }

  TEST_CASE("neighbor enumeration") {
    const auto z = find_model("z1");
    CHECK(z->neighbors(Vertex{5}) == std::vector<Vertex>{Vertex{4}, Vertex{6}});

    const auto comb = find_model("comb");
    CHECK(comb->neighbors(Vertex{3, 2}) == std::vector<Vertex>{Vertex{3, 1}, Vertex{3, 3}});
    CHECK(comb->neighbors(Vertex{3, 0}) ==
          std::vector<Vertex>{Vertex{2, 0}, Vertex{3, 1}, Vertex{4, 0}});

    const auto z2 = find_model("z2");
    const auto n = z2->neighbors(Vertex{0, 0});
    CHECK(n.size() == 4);
    CHECK(std::is_sorted(n.begin(), n.end()));
    for (const auto& m : builtin_models()) {
      const auto list = m->neighbors(Vertex{7, 3});
      CHECK(std::is_sorted(list.begin(), list.end()));
      CHECK(list == m->neighbors(Vertex{7, 3}));
    }
  }

  TEST_CASE("SRW step is uniform over neighbors") {
    const int draws = 100000;
    const auto z = step_frequencies(LineGraph{}, Vertex{0}, draws, 1);
    REQUIRE(z.size() == 2);
    for (const auto& [v, c] : z) CHECK(std::abs(c / double(draws) - 0.5) <= 0.01);

    const auto z2 = step_frequencies(SquareLattice{}, Vertex{0, 0}, draws, 2);
    REQUIRE(z2.size() == 4);
    for (const auto& [v, c] : z2) CHECK(std::abs(c / double(draws) - 0.25) <= 0.01);

    const auto spine = step_frequencies(CombGraph{}, Vertex{5, 0}, draws, 3);
    CHECK(spine.size() == 3);
    CHECK(spine.count(Vertex{4, 0}) == 1);
    CHECK(spine.count(Vertex{6, 0}) == 1);
    CHECK(spine.count(Vertex{5, 1}) == 1);
    for (const auto& [v, c] : spine) CHECK(std::abs(c / double(draws) - 1.0 / 3) <= 0.01);

    const auto tooth = step_frequencies(CombGraph{}, Vertex{5, 4}, draws, 4);
    CHECK(tooth.size() == 2);
    CHECK(tooth.count(Vertex{5, 3}) == 1);
    CHECK(tooth.count(Vertex{5, 5}) == 1);
  }

  TEST_CASE("step is deterministic given the rng state") {
    Rng a(99), b(99);
    Vertex va, vb;
    for (int i = 0; i < 1000; ++i) {
      va = step(SquareLattice{}, va, a);
      vb = step(SquareLattice{}, vb, b);
      REQUIRE(va == vb);
    }
  }

  TEST_CASE("adjacency is symmetric along a long walk") {
    for (const auto& m : builtin_models()) {
      Rng rng(7);
      Vertex v = m->origin();
      bool origin_has_neighbor = false;
      for (int i = 0; i < 10000; ++i) {
        for (const auto& w : m->neighbors(v)) {
          const auto back = m->neighbors(w);
          REQUIRE(std::find(back.begin(), back.end(), v) != back.end());
          if (w == m->origin()) origin_has_neighbor = true;
        }
        CHECK_FALSE(m->neighbors(v).empty());
        v = step(*m, v, rng);
      }
      CHECK(origin_has_neighbor);
    }
  }

  TEST_CASE("bipartite lattices revisit the origin only at even times") {
    for (const std::string name : {"z1", "z2"}) {
      const auto m = find_model(name);
      Rng rng(11);
      Vertex v = m->origin();
      for (int t = 1; t <= 1000; ++t) {
        v = step(*m, v, rng);
        if (v == m->origin()) CHECK(t % 2 == 0);
      }
    }
  }

  TEST_CASE("vertex equality and hashing are structural") {
    VertexHash h;
    CHECK(Vertex{3, 4} == Vertex{3, 4});
    CHECK(h(Vertex{3, 4}) == h(Vertex{3, 4}));
    CHECK(Vertex{3, 4} != Vertex{4, 3});
    CHECK(to_string(Vertex{-1, 2}) == "(-1,2)");
  }

  TEST_CASE("bounded sampling is exact for small bounds") {
    Rng rng(5);
    std::array<int, 3> counts{};
    for (int i = 0; i < 30000; ++i) ++counts[rng.below(3)];
    for (int c : counts) CHECK(std::abs(c - 10000) < 400);
    CHECK(child_seed(1, 0) != child_seed(1, 1));
    CHECK(child_seed(1, 0) == child_seed(1, 0));
    CHECK(namespaced_seed(1, 5) != child_seed(5, 0));
  }
}
