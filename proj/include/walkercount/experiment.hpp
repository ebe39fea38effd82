#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "walkercount/defaults.hpp"
#include "walkercount/report.hpp"
#include "walkercount/stream_io.hpp"
#include "walkercount/walker_sim.hpp"

namespace walkercount {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitParseError = 3,
  kExitInsufficientData = 4,
  kExitTooFewScales = 5,
};

enum class ReportFormat { kJson, kCsv };

/// Directory named by this variable is the default destination for outputs
/// whose path was not given explicitly.
inline constexpr const char* kOutDirEnv = "WALKERCOUNT_OUT_DIR";

std::string default_output_path(const std::string& file_name);

/// Stream file for a simulation; `blind` leaves the true k out of the header.
StreamFile make_stream_file(const SimConfig& cfg, bool blind);

/// Runs the blind estimator on a parsed file. Estimator failures are recorded in
/// the report rather than thrown.
ExperimentReport run_estimate(const StreamFile& file, const EstimatorConfig& cfg,
                              bool timing = false);

/// Exit code that corresponds to a report's error (kExitOk when none).
int exit_code_for(const ExperimentReport& report);

void write_report(std::ostream& out, const ExperimentReport& report, ReportFormat format);

struct SimulateOptions {
  SimConfig sim;
  bool blind = false;
  std::string out;  // empty: default_output_path(...)
};

struct EstimateOptions {
  std::string in;
  EstimatorConfig estimator;
  std::string out;  // empty: only stdout, unless WALKERCOUNT_OUT_DIR is set
  ReportFormat format = ReportFormat::kJson;
  bool timing = false;
};

struct SweepOptions {
  std::string graph = "z1";
  std::vector<int> walkers{1};
  std::vector<Time> horizons{1'000'000};
  std::int64_t seeds = 1;
  std::uint64_t seed_base = 0;
  EstimatorConfig estimator;
  std::string out;
  ReportFormat format = ReportFormat::kJson;
  unsigned threads = 0;
};

struct SweepCell {
  int k = 0;
  Time horizon = 0;
  std::uint64_t seed = 0;
  ExperimentReport report;

  bool correct() const {
    return !report.error && report.estimate.k_hat == k;
  }
};

struct SweepGroup {
  int k = 0;
  Time horizon = 0;
  std::int64_t cells = 0;
  double accuracy = 0.0;
  /// Median over seeds of |raw - k|; failed cells count as +infinity.
  double median_abs_error = 0.0;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // order: k, then horizon, then seed
  std::vector<SweepGroup> groups;
  double accuracy = 0.0;
};

SweepResult run_sweep(const SweepOptions& opts);
void write_sweep(std::ostream& out, const SweepResult& result, ReportFormat format);

// CLI entry points; `out` receives what the user should see on stdout.
int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace walkercount
