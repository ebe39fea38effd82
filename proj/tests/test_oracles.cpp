#include <doctest.h>

#include <cmath>

#include "walkercount/errors.hpp"
#include "walkercount/oracles.hpp"

using namespace walkercount;

namespace {

// Origin 0 and one neighbor; every return takes exactly two steps.
class TwoVertexGraph final : public GraphModel {
 public:
  std::string_view name() const override { return "k2"; }
  void neighbors(const Vertex& v, NeighborList& out) const override {
    out.clear();
    out.push(Vertex{v.x() == 0 ? 1 : 0});
  }
};

std::map<std::string, double> constants() {
  return oracles::load_constants(WALKERCOUNT_FIXTURE_DIR "/oracle_constants.txt");
}

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("exact Z profile matches the binomial closed form") {
    const auto p = oracles::exact_z_profile(60);
    for (std::int64_t t = 1; t <= 60; ++t) {
      if (t % 2) {
        CHECK(p(t) == 0.0);
        continue;
      }
      const std::int64_t m = t / 2;
      std::uint64_t c = 1;  // C(2m, m), exact below 2^64 for m <= 30
      for (std::int64_t i = 1; i <= m; ++i) c = c * static_cast<std::uint64_t>(m + i) / static_cast<std::uint64_t>(i);
      const double closed = static_cast<double>(static_cast<long double>(c) / std::ldexp(1.0L, static_cast<int>(2 * m)));
      CHECK(std::abs(p(t) - closed) <= 1e-15);
    }
  }

  TEST_CASE("exact Z first-return law agrees with renewal inversion") {
    const auto p = oracles::exact_z_profile(4000);
    const auto inverted = renewal_invert(p);
    const auto closed = oracles::exact_z_first_return(4000);
    for (std::int64_t t = 1; t <= 4000; ++t) CHECK(std::abs(inverted(t) - closed(t)) <= 1e-12);
    CHECK(roundtrip_check(p, closed) <= 1e-12);
  }

  TEST_CASE("closed-form Z medians agree with renewal medians") {
    const std::int64_t t_max = 16384;
    const auto ladder = sn_ladder(oracles::exact_z_first_return(t_max), 6, t_max);
    for (int e = 0; e <= 6; ++e) {
      const std::int64_t n = std::int64_t{1} << e;
      CHECK(median(ladder[static_cast<std::size_t>(e)]) == oracles::exact_z_median(n));
    }
    CHECK(oracles::exact_z_median(1) == 4);
    CHECK(oracles::z_return_count_cdf(1, 2) == doctest::Approx(0.5));
    CHECK(oracles::z_return_count_cdf(1, 4) == doctest::Approx(0.625));
  }

  TEST_CASE("empirical p agrees with the exact profile") {
    std::vector<WalkerTraces> runs;
    runs.reserve(100000);
    for (std::uint64_t s = 0; s < 100000; ++s) runs.push_back(simulate(LineGraph{}, 1, 20, s).traces);
    const auto exact = oracles::exact_z_profile(20);
    for (std::int64_t n = 1; n <= 20; ++n) {
      const double p = exact(n);
      const double se = std::sqrt(p * (1 - p) / 100000.0);
      CHECK(std::abs(empirical_p(runs, 0, n) - p) <= 3 * se + 1e-12);
    }
  }

  TEST_CASE("double return counts") {
    WalkerTraces disjoint{{{2, 6}, {4, 8}}, 10};
    CHECK(oracles::double_return_count(disjoint, 0, 1, 10) == 0);
    WalkerTraces same{{{2, 4}, {2, 4}}, 10};
    CHECK(oracles::double_return_count(same, 0, 1, 4) == 2);
    CHECK(oracles::double_return_count(same, 0, 1, 3) == 1);
    CHECK_THROWS_AS(oracles::double_return_count(same, 0, 2, 4), std::out_of_range);
    CHECK_THROWS_AS(oracles::double_return_count(same, 1, 1, 4), std::invalid_argument);
  }

  TEST_CASE("double returns stay below the frozen constants") {
    const auto c = constants();
    // z1 is frozen on the dyadic grid of the acceptance run.
    for (const std::string name : {"z2", "comb"}) {
      const auto m = find_model(name);
      const auto curve = oracles::double_return_curve(*m, {10, 100, 1000, 10000, 100000}, 200);
      for (const auto& pt : curve) {
        CHECK(pt.ratio <= c.at(oracles::constant_key(std::string(m->name()), "double_return")));
        CHECK(pt.ratio <= 3.0);
      }
    }
  }

  TEST_CASE("hazard profile on Z") {
    const auto h = oracles::hazard_profile(LineGraph{}, 20000, 2000);
    CHECK(std::abs(h.hazard[2] - 0.5) <= 0.02);
    for (std::size_t t = 1; t < h.hazard.size(); t += 2) CHECK(h.hazard[t] == 0.0);
    CHECK(h.at_risk[1] == 20000);
    CHECK(h.defined[2]);
    // Exact Z hazard is 1/t at even t.
    CHECK(std::abs(h.hazard[4] - 0.25) <= 0.02);
  }

  TEST_CASE("sqrt(t) return bound") {
    const auto c = constants();
    const auto exact = oracles::exact_z_profile(10000);
    const double z_max = oracles::sqrt_bound(exact);
    CHECK(z_max <= 0.8);
    CHECK(z_max <= c.at("z1/sqrt_t_return"));
    // Stirling: p(2m) ~ 1/sqrt(pi m), so p(t) sqrt(t) -> sqrt(2/pi).
    CHECK(std::abs(exact(10000) * std::sqrt(10000.0) - std::sqrt(2.0 / M_PI)) <= 1e-4);
    CHECK(std::abs(exact(10000) * std::sqrt(5000.0) - 1.0 / std::sqrt(M_PI)) <= 1e-4);

    for (const std::string name : {"z2", "comb"}) {
      const double measured = oracles::sqrt_bound_check(*find_model(name), 10000, 10000);
      MESSAGE(name << ": max p(t) sqrt(t) = " << measured);
      CHECK(measured <= c.at(oracles::constant_key(name, "sqrt_t_return")));
    }
    const auto short_run = oracles::monte_carlo_profile(CombGraph{}, 4, 1000, oracles::kSqrtNamespace, 0);
    CHECK(short_run(1) == 0.0);
  }

  TEST_CASE("empirical medians of S_n") {
    CHECK(oracles::empirical_median_sn(LineGraph{}, 1, 100000).median == 4);
    for (std::int64_t n : {1, 3, 8}) CHECK(oracles::empirical_median_sn(TwoVertexGraph{}, n, 10000).median == 2 * n);
    CHECK_THROWS_AS(oracles::empirical_median_sn(LineGraph{}, 64, 100, 0, 512), StepBudgetExceeded);
  }

  TEST_CASE("oracle runs are deterministic") {
    CHECK(oracles::empirical_median_sn(LineGraph{}, 4, 5000, 3).median ==
          oracles::empirical_median_sn(LineGraph{}, 4, 5000, 3).median);
    const auto a = oracles::hazard_profile(CombGraph{}, 5000, 500, 1);
    const auto b = oracles::hazard_profile(CombGraph{}, 5000, 500, 1);
    CHECK(a.events == b.events);
  }

  TEST_CASE("constants file") {
    const auto c = constants();
    CHECK(c.count("z1/hazard_t_over_log_t") == 1);
    CHECK(c.at("z1/double_return") <= 3.0);
    CHECK_THROWS_AS(oracles::load_constants("/nonexistent"), IoError);
  }
}
