#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "walkercount/defaults.hpp"
#include "walkercount/estimator.hpp"
#include "walkercount/stream_io.hpp"

namespace walkercount {

/// Everything needed to rerun an estimate bit-exactly.
struct ConfigEcho {
  std::string model;
  std::optional<int> k_true;
  Time horizon = 0;
  std::optional<std::uint64_t> seed;
  EstimatorConfig estimator;

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct ReportError {
  std::string kind;  // "insufficient_data", "too_few_scales", ...
  std::string message;

  friend bool operator==(const ReportError&, const ReportError&) = default;
};

struct ExperimentReport {
  ConfigEcho config;
  /// Exactly one of estimate / error is meaningful.
  KEstimate estimate;
  std::optional<ReportError> error;
  /// Only recorded on request; reports are otherwise byte-reproducible.
  std::optional<double> wall_seconds;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

ConfigEcho echo_config(const StreamMetadata& meta, const EstimatorConfig& cfg);

/// Line-oriented JSON: a config record, then either an error record or an
/// estimate record, one scale record per usable scale and a diagnostics record.
void write_report_jsonl(std::ostream& out, const ExperimentReport& report);
std::string report_to_jsonl(const ExperimentReport& report);

/// Inverse of write_report_jsonl. Throws ParseError.
ExperimentReport parse_report_jsonl(std::istream& in);
ExperimentReport parse_report_jsonl(const std::string& text);

/// Per-scale table with the config echo repeated on each row.
void write_report_csv(std::ostream& out, const ExperimentReport& report);

}  // namespace walkercount
