#include "walkercount/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "walkercount/errors.hpp"

namespace walkercount {

using Json = nlohmann::ordered_json;

ConfigEcho echo_config(const StreamMetadata& meta, const EstimatorConfig& cfg) {
  ConfigEcho echo;
  echo.model = meta.model;
  echo.k_true = meta.true_k;
  echo.horizon = meta.horizon;
  echo.seed = meta.seed;
  echo.estimator = cfg;
  return echo;
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Json config_record(const ConfigEcho& c) {
  Json j;
  j["record"] = "config";
  j["model"] = c.model;
  j["k_true"] = optional_json(c.k_true);
  j["horizon"] = c.horizon;
  j["seed"] = optional_json(c.seed);
  j["n_max"] = c.estimator.n_max;
  j["cap"] = c.estimator.cap;
  j["scales"] = c.estimator.scales;
  j["min_samples"] = c.estimator.min_samples;
  j["min_scales"] = c.estimator.min_scales;
  return j;
}

ConfigEcho config_from(const Json& j) {
  ConfigEcho c;
  c.model = j.at("model").get<std::string>();
  c.k_true = optional_from<int>(j, "k_true");
  c.horizon = j.at("horizon").get<Time>();
  c.seed = optional_from<std::uint64_t>(j, "seed");
  c.estimator.n_max = j.at("n_max").get<std::int64_t>();
  c.estimator.cap = j.at("cap").get<int>();
  c.estimator.scales = j.at("scales").get<int>();
  c.estimator.min_samples = j.at("min_samples").get<std::int64_t>();
  c.estimator.min_scales = j.at("min_scales").get<int>();
  return c;
}

Json scale_record(const ScaleStatistic& s) {
  Json j;
  j["record"] = "scale";
  j["n"] = s.n;
  j["median"] = s.median;
  j["occupied"] = s.occupied;
  j["y_tilde"] = s.y_tilde;
  j["e_single"] = s.e_single;
  j["ratio"] = s.ratio;
  j["extended"] = s.extended;
  return j;
}

ScaleStatistic scale_from(const Json& j) {
  ScaleStatistic s;
  s.n = j.at("n").get<std::int64_t>();
  s.median = j.at("median").get<Time>();
  s.occupied = j.at("occupied").get<std::int64_t>();
  s.y_tilde = j.at("y_tilde").get<double>();
  s.e_single = j.at("e_single").get<double>();
  s.ratio = j.at("ratio").get<double>();
  s.extended = j.at("extended").get<bool>();
  return s;
}

Json diagnostics_record(const EstimateDiagnostics& d, const std::optional<double>& wall) {
  Json j;
  j["record"] = "diagnostics";
  j["no_evidence"] = d.no_evidence;
  j["samples"] = d.samples;
  j["sample_counts"] = d.sample_counts;
  j["clamped_steps"] = d.clamped_steps;
  j["clamped_mass"] = d.clamped_mass;
  j["censored_tail"] = d.censored_tail;
  Json dropped = Json::array();
  for (const auto& x : d.dropped)
    dropped.push_back({{"n", x.n}, {"reason", x.reason}, {"median", optional_json(x.median)}});
  j["dropped"] = std::move(dropped);
  if (wall) j["wall_seconds"] = *wall;
  return j;
}

void diagnostics_from(const Json& j, EstimateDiagnostics& d, std::optional<double>& wall) {
  d.no_evidence = j.at("no_evidence").get<bool>();
  d.samples = j.at("samples").get<std::int64_t>();
  d.sample_counts = j.at("sample_counts").get<std::vector<std::int64_t>>();
  d.clamped_steps = j.at("clamped_steps").get<std::size_t>();
  d.clamped_mass = j.at("clamped_mass").get<double>();
  d.censored_tail = j.at("censored_tail").get<double>();
  d.dropped.clear();
  for (const auto& x : j.at("dropped"))
    d.dropped.push_back({x.at("n").get<std::int64_t>(), x.at("reason").get<std::string>(),
                         optional_from<Time>(x, "median")});
  wall = optional_from<double>(j, "wall_seconds");
}

}  // namespace

void write_report_jsonl(std::ostream& out, const ExperimentReport& report) {
  out << config_record(report.config).dump() << '\n';
  if (report.error) {
    Json j;
    j["record"] = "error";
    j["kind"] = report.error->kind;
    j["message"] = report.error->message;
    if (report.wall_seconds) j["wall_seconds"] = *report.wall_seconds;
    out << j.dump() << '\n';
    return;
  }
  const auto& e = report.estimate;
  Json est;
  est["record"] = "estimate";
  est["k_hat"] = e.k_hat;
  est["raw"] = e.raw;
  est["scales_used"] = e.scales_used;
  out << est.dump() << '\n';
  for (const auto& s : e.scales) out << scale_record(s).dump() << '\n';
  out << diagnostics_record(e.diagnostics, report.wall_seconds).dump() << '\n';
}

std::string report_to_jsonl(const ExperimentReport& report) {
  std::ostringstream out;
  write_report_jsonl(out, report);
  return out.str();
}

ExperimentReport parse_report_jsonl(std::istream& in) {
  ExperimentReport report;
  bool have_config = false;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      const auto kind = j.at("record").get<std::string>();
      if (!have_config && kind != "config") throw ParseError(number, "report must start with a config record");
      if (kind == "config") {
        if (have_config) throw ParseError(number, "second config record");
        report.config = config_from(j);
        have_config = true;
      } else if (kind == "error") {
        report.error = ReportError{j.at("kind").get<std::string>(), j.at("message").get<std::string>()};
        report.wall_seconds = optional_from<double>(j, "wall_seconds");
      } else if (kind == "estimate") {
        report.estimate.k_hat = j.at("k_hat").get<std::int64_t>();
        report.estimate.raw = j.at("raw").get<double>();
        report.estimate.scales_used = j.at("scales_used").get<int>();
      } else if (kind == "scale") {
        report.estimate.scales.push_back(scale_from(j));
      } else if (kind == "diagnostics") {
        diagnostics_from(j, report.estimate.diagnostics, report.wall_seconds);
      } else {
        throw ParseError(number, "unknown record kind '" + kind + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(number, e.what());
    }
  }
  if (!have_config) throw ParseError(number, "report has no config record");
  return report;
}

ExperimentReport parse_report_jsonl(const std::string& text) {
  std::istringstream in(text);
  return parse_report_jsonl(in);
}

void write_report_csv(std::ostream& out, const ExperimentReport& report) {
  const auto& c = report.config;
  out << "model,k_true,horizon,seed,n_max,cap,scales,min_samples,min_scales,k_hat,raw,"
         "n,median,occupied,y_tilde,e_single,ratio\n";
  std::ostringstream prefix;
  prefix << c.model << ',' << (c.k_true ? std::to_string(*c.k_true) : "") << ',' << c.horizon
         << ',' << (c.seed ? std::to_string(*c.seed) : "") << ',' << c.estimator.n_max << ','
         << c.estimator.cap << ',' << c.estimator.scales << ',' << c.estimator.min_samples << ','
         << c.estimator.min_scales << ',';
  if (report.error) return;
  const auto& e = report.estimate;
  const auto num = [](double v) { return Json(v).dump(); };
  for (const auto& s : e.scales)
    out << prefix.str() << e.k_hat << ',' << num(e.raw) << ',' << s.n << ',' << s.median << ','
        << s.occupied << ',' << num(s.y_tilde) << ',' << num(s.e_single) << ',' << num(s.ratio)
        << '\n';
}

}  // namespace walkercount
