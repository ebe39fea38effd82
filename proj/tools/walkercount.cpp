// walkercount: simulate occupancy streams, estimate walker counts, run sweeps.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "walkercount/experiment.hpp"

using namespace walkercount;

namespace {

void add_estimator_flags(CLI::App& cmd, EstimatorConfig& cfg) {
  cmd.add_option("--scales", cfg.scales, "Scale ladder length N (scales 2^1..2^N)")
      ->check(CLI::Range(1, 62));
  cmd.add_option("--n-max", cfg.n_max, "Window length recorded after each quiet interval")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--cap", cfg.cap, "Quiet-gap threshold exponent cap (0 = uncapped)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--min-samples", cfg.min_samples, "Minimum quiet-interval samples")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--min-scales", cfg.min_scales, "Minimum usable scales")
      ->check(CLI::PositiveNumber);
}

const std::map<std::string, ReportFormat> kFormats{{"json", ReportFormat::kJson},
                                                   {"csv", ReportFormat::kCsv}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count random walkers from the times the origin is occupied"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Simulate walkers and write an occupancy stream");
  simulate->add_option("--graph", sim.sim.model, "Graph model")
      ->check(CLI::IsMember({"z1", "z2", "comb"}));
  simulate->add_option("--walkers", sim.sim.k, "Number of walkers")->check(CLI::NonNegativeNumber);
  simulate->add_option("--horizon", sim.sim.horizon, "Number of time steps")->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.sim.seed, "Random seed");
  simulate->add_option("--out", sim.out, "Output stream file");
  simulate->add_flag("--blind", sim.blind, "Omit the true walker count from the metadata");

  EstimateOptions est;
  auto* estimate = app.add_subcommand("estimate", "Estimate the number of walkers from a stream");
  estimate->add_option("--in", est.in, "Input stream file")->required();
  add_estimator_flags(*estimate, est.estimator);
  estimate->add_option("--out", est.out, "Report file");
  estimate->add_option("--format", est.format, "Report format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  estimate->add_flag("--timing", est.timing, "Record wall time in the report");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Simulate and estimate over a grid");
  sweep_cmd->add_option("--graph", sweep.graph, "Graph model")
      ->check(CLI::IsMember({"z1", "z2", "comb"}));
  sweep_cmd->add_option("--walkers", sweep.walkers, "Walker counts")->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--horizons", sweep.horizons, "Horizons")->delimiter(',')
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seeds", sweep.seeds, "Seeds per cell")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed-base", sweep.seed_base, "First seed");
  add_estimator_flags(*sweep_cmd, sweep.estimator);
  sweep_cmd->add_option("--out", sweep.out, "Sweep report file");
  sweep_cmd->add_option("--format", sweep.format, "Report format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*simulate) return cmd_simulate(sim, std::cout, std::cerr);
  if (*estimate) return cmd_estimate(est, std::cout, std::cerr);
  return cmd_sweep(sweep, std::cout, std::cerr);
}
