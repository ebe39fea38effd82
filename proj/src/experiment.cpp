#include "walkercount/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "walkercount/errors.hpp"
#include "walkercount/parallel.hpp"

namespace walkercount {

std::string default_output_path(const std::string& file_name) {
  const char* dir = std::getenv(kOutDirEnv);
  if (dir == nullptr || *dir == '\0') return file_name;
  std::string path(dir);
  if (path.back() != '/') path += '/';
  return path + file_name;
}

StreamFile make_stream_file(const SimConfig& cfg, bool blind) {
  const auto sim = simulate(cfg);
  StreamFile file;
  file.meta.model = cfg.model;
  file.meta.horizon = cfg.horizon;
  file.meta.seed = cfg.seed;
  if (!blind) file.meta.true_k = cfg.k;
  file.meta.count = static_cast<std::int64_t>(sim.stream.occupied_times.size());
  file.stream = sim.stream;
  return file;
}

ExperimentReport run_estimate(const StreamFile& file, const EstimatorConfig& cfg, bool timing) {
  ExperimentReport report;
  report.config = echo_config(file.meta, cfg);
  const auto start = std::chrono::steady_clock::now();
  try {
    // Only the occupancy stream crosses into the estimator.
    report.estimate = estimate_k(file.stream, cfg);
  } catch (const TooFewScales& e) {
    report.error = ReportError{"too_few_scales", e.what()};
  } catch (const InsufficientData& e) {
    report.error = ReportError{"insufficient_data", e.what()};
  }
  if (timing)
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int exit_code_for(const ExperimentReport& report) {
  if (!report.error) return kExitOk;
  if (report.error->kind == "too_few_scales") return kExitTooFewScales;
  if (report.error->kind == "insufficient_data") return kExitInsufficientData;
  return kExitFailure;
}

void write_report(std::ostream& out, const ExperimentReport& report, ReportFormat format) {
  if (format == ReportFormat::kCsv)
    write_report_csv(out, report);
  else
    write_report_jsonl(out, report);
}

namespace {

std::string input_stem(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name.resize(dot);
  return name;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  f << content;
  return static_cast<bool>(f);
}

}  // namespace

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    opts.sim.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto file = make_stream_file(opts.sim, opts.blind);
  const std::string path =
      opts.out.empty()
          ? default_output_path("stream-" + opts.sim.model + "-k" + std::to_string(opts.sim.k) +
                                "-h" + std::to_string(opts.sim.horizon) + "-s" +
                                std::to_string(opts.sim.seed) + ".txt")
          : opts.out;
  if (!write_file(path, format_stream(file), err)) return kExitFailure;
  out << path << '\n';
  return kExitOk;
}

int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    opts.estimator.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  StreamFile file;
  try {
    file = read_stream(opts.in);
  } catch (const ParseError& e) {
    err << "error: " << opts.in << ": " << e.what() << '\n';
    return kExitParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  const auto report = run_estimate(file, opts.estimator, opts.timing);
  std::string path = opts.out;
  if (path.empty() && std::getenv(kOutDirEnv) != nullptr)
    path = default_output_path(input_stem(opts.in) + (opts.format == ReportFormat::kCsv
                                                          ? ".report.csv"
                                                          : ".report.jsonl"));
  if (!path.empty()) {
    std::ostringstream body;
    write_report(body, report, opts.format);
    if (!write_file(path, body.str(), err)) return kExitFailure;
  }
  if (report.error) {
    err << "error: " << report.error->kind << ": " << report.error->message << '\n';
    return exit_code_for(report);
  }
  if (report.estimate.diagnostics.no_evidence) err << "note: no evidence of any walker\n";
  out << report.estimate.k_hat << '\n';
  return kExitOk;
}

SweepResult run_sweep(const SweepOptions& opts) {
  opts.estimator.validate();
  if (opts.seeds < 1) throw std::invalid_argument("sweep needs at least one seed");
  struct Spec {
    int k;
    Time horizon;
    std::uint64_t seed;
  };
  std::vector<Spec> specs;
  for (int k : opts.walkers)
    for (Time h : opts.horizons)
      for (std::int64_t s = 0; s < opts.seeds; ++s)
        specs.push_back({k, h, opts.seed_base + static_cast<std::uint64_t>(s)});
  for (const auto& s : specs) SimConfig{opts.graph, s.k, s.horizon, s.seed}.validate();

  SweepResult result;
  result.cells = parallel_map(
      specs.size(),
      [&](std::size_t i) {
        const auto& s = specs[i];
        // Same path as simulate-to-file followed by estimate-from-file.
        const auto text = format_stream(make_stream_file({opts.graph, s.k, s.horizon, s.seed}, false));
        return SweepCell{s.k, s.horizon, s.seed, run_estimate(parse_stream_text(text), opts.estimator)};
      },
      opts.threads);

  std::int64_t correct = 0;
  for (const auto& c : result.cells) correct += c.correct() ? 1 : 0;
  result.accuracy = result.cells.empty()
                        ? 0.0
                        : static_cast<double>(correct) / static_cast<double>(result.cells.size());

  for (int k : opts.walkers) {
    for (Time h : opts.horizons) {
      SweepGroup g;
      g.k = k;
      g.horizon = h;
      std::vector<double> errors;
      std::int64_t hits = 0;
      for (const auto& c : result.cells) {
        if (c.k != k || c.horizon != h) continue;
        ++g.cells;
        hits += c.correct() ? 1 : 0;
        errors.push_back(c.report.error ? std::numeric_limits<double>::infinity()
                                        : std::abs(c.report.estimate.raw - k));
      }
      g.accuracy = g.cells ? static_cast<double>(hits) / static_cast<double>(g.cells) : 0.0;
      std::sort(errors.begin(), errors.end());
      if (!errors.empty()) {
        const std::size_t mid = errors.size() / 2;
        g.median_abs_error = errors.size() % 2 ? errors[mid] : 0.5 * (errors[mid - 1] + errors[mid]);
      }
      result.groups.push_back(g);
    }
  }
  return result;
}

void write_sweep(std::ostream& out, const SweepResult& result, ReportFormat format) {
  const auto group_of = [&](const SweepCell& c) -> const SweepGroup& {
    return *std::find_if(result.groups.begin(), result.groups.end(), [&](const SweepGroup& g) {
      return g.k == c.k && g.horizon == c.horizon;
    });
  };
  const auto num = [](double v) {
    return std::isfinite(v) ? nlohmann::json(v).dump() : std::string("null");
  };
  if (format == ReportFormat::kCsv) {
    out << "model,k_true,horizon,seed,k_hat,raw,scales_used,error,correct,group_accuracy\n";
    for (const auto& c : result.cells) {
      const auto& r = c.report;
      out << r.config.model << ',' << c.k << ',' << c.horizon << ',' << c.seed << ',';
      if (r.error)
        out << ",,," << r.error->kind;
      else
        out << r.estimate.k_hat << ',' << num(r.estimate.raw) << ',' << r.estimate.scales_used << ',';
      out << ',' << (c.correct() ? 1 : 0) << ',' << num(group_of(c).accuracy) << '\n';
    }
    return;
  }
  for (const auto& c : result.cells) write_report_jsonl(out, c.report);
  nlohmann::ordered_json summary;
  summary["record"] = "summary";
  summary["cells"] = result.cells.size();
  summary["accuracy"] = result.accuracy;
  auto groups = nlohmann::ordered_json::array();
  for (const auto& g : result.groups) {
    nlohmann::ordered_json j;
    j["k"] = g.k;
    j["horizon"] = g.horizon;
    j["cells"] = g.cells;
    j["accuracy"] = g.accuracy;
    j["median_abs_error"] =
        std::isfinite(g.median_abs_error) ? nlohmann::ordered_json(g.median_abs_error) : nullptr;
    groups.push_back(std::move(j));
  }
  summary["groups"] = std::move(groups);
  out << summary.dump() << '\n';
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  SweepResult result;
  try {
    result = run_sweep(opts);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const std::string path =
      opts.out.empty()
          ? default_output_path(opts.format == ReportFormat::kCsv ? "sweep.csv" : "sweep.jsonl")
          : opts.out;
  std::ostringstream body;
  write_sweep(body, result, opts.format);
  if (!write_file(path, body.str(), err)) return kExitFailure;
  for (const auto& g : result.groups)
    out << "k=" << g.k << " horizon=" << g.horizon << " accuracy=" << g.accuracy << '\n';
  out << "accuracy=" << result.accuracy << '\n';
  return kExitOk;
}

}  // namespace walkercount
