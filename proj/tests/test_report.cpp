#include <doctest.h>

#include <sstream>

#include "walkercount/errors.hpp"
#include "walkercount/experiment.hpp"
#include "walkercount/report.hpp"

using namespace walkercount;

namespace {

ExperimentReport sample_report(std::uint64_t seed) {
  const auto file = make_stream_file(SimConfig{"z1", 2, 3'000'000, seed}, false);
  EstimatorConfig cfg;
  cfg.min_samples = 5;
  return run_estimate(file, cfg);
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("json lines round-trip") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
      auto report = sample_report(seed);
      const auto text = report_to_jsonl(report);
      const auto back = parse_report_jsonl(text);
      CHECK(back == report);
      CHECK(report_to_jsonl(back) == text);

      report.wall_seconds = 0.125;
      CHECK(parse_report_jsonl(report_to_jsonl(report)) == report);
    }
  }

  TEST_CASE("error reports round-trip") {
    StreamFile file;
    file.meta = {"z1", 100, 1, 1, std::nullopt};
    file.stream = {{4, 10}, 100};
    const auto report = run_estimate(file, EstimatorConfig{});
    REQUIRE(report.error.has_value());
    CHECK(report.error->kind == "insufficient_data");
    CHECK(exit_code_for(report) == kExitInsufficientData);
    CHECK(parse_report_jsonl(report_to_jsonl(report)) == report);
  }

  TEST_CASE("config echo") {
    const auto report = sample_report(5);
    CHECK(report.config.model == "z1");
    CHECK(report.config.k_true == 2);
    CHECK(report.config.seed == 5u);
    CHECK(report.config.horizon == 3'000'000);
    CHECK(report.config.estimator.n_max == 1024);
    CHECK(report.config.estimator.cap == 10);
    CHECK(report.config.estimator.scales == 10);
  }

  TEST_CASE("csv projection has one row per scale") {
    const auto report = sample_report(6);
    std::ostringstream out;
    write_report_csv(out, report);
    const auto text = out.str();
    const auto rows = std::count(text.begin(), text.end(), '\n');
    CHECK(rows == 1 + static_cast<long>(report.estimate.scales.size()));
    CHECK(text.rfind("model,k_true,horizon", 0) == 0);
  }

  TEST_CASE("malformed reports") {
    CHECK_THROWS_AS(parse_report_jsonl("{\"record\":\"estimate\"}\n"), ParseError);
    CHECK_THROWS_AS(parse_report_jsonl("not json\n"), ParseError);
    CHECK_THROWS_AS(parse_report_jsonl(""), ParseError);
  }
}
