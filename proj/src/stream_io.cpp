#include "walkercount/stream_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "walkercount/errors.hpp"

namespace walkercount {

namespace {

constexpr std::string_view kTag = "#occupancy";

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view what) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw ParseError(line, "invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

StreamMetadata parse_header(std::string_view line) {
  if (line.substr(0, kTag.size()) != kTag)
    throw ParseError(1, "missing '#occupancy' metadata header");
  StreamMetadata meta;
  bool have_horizon = false;
  std::istringstream fields{std::string(line.substr(kTag.size()))};
  std::string token;
  while (fields >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(1, "malformed metadata field '" + token + "'");
    const std::string_view key(token.data(), eq);
    const std::string_view value(token.data() + eq + 1, token.size() - eq - 1);
    if (key == "model") {
      meta.model = std::string(value);
    } else if (key == "horizon") {
      meta.horizon = parse_number<Time>(value, 1, "horizon");
      have_horizon = true;
    } else if (key == "seed") {
      meta.seed = parse_number<std::uint64_t>(value, 1, "seed");
    } else if (key == "k") {
      meta.true_k = parse_number<int>(value, 1, "k");
    } else if (key == "count") {
      meta.count = parse_number<std::int64_t>(value, 1, "count");
    } else {
      throw ParseError(1, "unknown metadata field '" + std::string(key) + "'");
    }
  }
  if (!have_horizon) throw ParseError(1, "metadata lacks horizon");
  if (meta.horizon < 1) throw ParseError(1, "horizon must be >= 1");
  return meta;
}

}  // namespace

void write_stream(std::ostream& out, const StreamFile& file) {
  const auto& m = file.meta;
  out << kTag;
  if (!m.model.empty()) out << " model=" << m.model;
  out << " horizon=" << file.stream.horizon;
  if (m.seed) out << " seed=" << *m.seed;
  if (m.true_k) out << " k=" << *m.true_k;
  out << " count=" << file.stream.occupied_times.size() << '\n';
  for (Time t : file.stream.occupied_times) out << t << '\n';
}

std::string format_stream(const StreamFile& file) {
  std::ostringstream out;
  write_stream(out, file);
  return out.str();
}

StreamFile parse_stream(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty file");
  StreamFile file;
  file.meta = parse_header(trim(line));
  file.stream.horizon = file.meta.horizon;

  std::size_t number = 1;
  Time prev = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto text = trim(line);
    if (text.empty()) throw ParseError(number, "blank line");
    const Time t = parse_number<Time>(text, number, "occupied time");
    if (t < 1) throw ParseError(number, "occupied time " + std::to_string(t) + " is < 1");
    if (t <= prev)
      throw ParseError(number, "occupied time " + std::to_string(t) +
                                   " does not increase (previous " + std::to_string(prev) + ")");
    if (t > file.meta.horizon)
      throw ParseError(number, "occupied time " + std::to_string(t) + " exceeds horizon " +
                                   std::to_string(file.meta.horizon));
    file.stream.occupied_times.push_back(t);
    prev = t;
  }
  if (file.meta.count &&
      *file.meta.count != static_cast<std::int64_t>(file.stream.occupied_times.size()))
    throw ParseError(number, "header announces " + std::to_string(*file.meta.count) +
                                 " times, file holds " +
                                 std::to_string(file.stream.occupied_times.size()) +
                                 " (truncated?)");
  return file;
}

StreamFile parse_stream_text(const std::string& text) {
  std::istringstream in(text);
  return parse_stream(in);
}

StreamFile read_stream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_stream(in);
}

StreamFile strip_truth(StreamFile file) {
  file.meta.true_k.reset();
  return file;
}

}  // namespace walkercount
