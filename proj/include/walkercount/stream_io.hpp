#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "walkercount/walker_sim.hpp"

namespace walkercount {

/// Header record of a stream file. Only `horizon` ever reaches the estimator;
/// the rest is bookkeeping that blind files may omit.
struct StreamMetadata {
  std::string model;
  Time horizon = 0;
  std::optional<std::uint64_t> seed;
  std::optional<int> true_k;
  std::optional<std::int64_t> count;  // number of data lines; checked on read

  friend bool operator==(const StreamMetadata&, const StreamMetadata&) = default;
};

struct StreamFile {
  StreamMetadata meta;
  OccupancyStream stream;
};

// On-disk format:
//
//   #occupancy model=z1 horizon=10000 seed=7 k=2 count=3
//   2
//   4
//   10
//
// Header keys other than horizon are optional; `k` is absent in blind files.

void write_stream(std::ostream& out, const StreamFile& file);
std::string format_stream(const StreamFile& file);

/// Throws ParseError naming the offending line.
StreamFile parse_stream(std::istream& in);
StreamFile parse_stream_text(const std::string& text);
StreamFile read_stream(const std::string& path);

/// Same file without ground truth.
StreamFile strip_truth(StreamFile file);

}  // namespace walkercount
