#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "walkercount/rng.hpp"

namespace walkercount {

/// A vertex of an implicitly represented graph. Models fix their own encoding:
/// Z uses x only, Z^2 uses (x, y), the comb uses (x, height) with height 0 on
/// the spine. Unused coordinates stay 0 so equality stays structural.
struct Vertex {
  std::array<std::int64_t, 2> coords{};

  constexpr Vertex() = default;
  constexpr explicit Vertex(std::int64_t x, std::int64_t y = 0) : coords{x, y} {}

  constexpr std::int64_t x() const { return coords[0]; }
  constexpr std::int64_t y() const { return coords[1]; }

  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept {
    return static_cast<std::size_t>(
        mix64(static_cast<std::uint64_t>(v.coords[0]) * 0x9E3779B97F4A7C15ULL ^
              static_cast<std::uint64_t>(v.coords[1])));
  }
};

/// Fixed-capacity neighbor buffer; stepping never allocates.
class NeighborList {
 public:
  static constexpr std::size_t kCapacity = 8;

  void clear() { size_ = 0; }
  void push(const Vertex& v) { items_[size_++] = v; }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const Vertex& operator[](std::size_t i) const { return items_[i]; }
  const Vertex* begin() const { return items_.data(); }
  const Vertex* end() const { return items_.data() + size_; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::array<Vertex, kCapacity> items_{};
  std::size_t size_ = 0;
};

/// A locally finite rooted graph, immutable after construction and safe to share
/// between threads. Neighbor lists are in lexicographic order.
class GraphModel {
 public:
  virtual ~GraphModel() = default;

  virtual std::string_view name() const = 0;
  virtual Vertex origin() const { return Vertex{}; }
  virtual void neighbors(const Vertex& v, NeighborList& out) const = 0;

  std::vector<Vertex> neighbors(const Vertex& v) const {
    NeighborList list;
    neighbors(v, list);
    return list.to_vector();
  }
};

using ModelPtr = std::shared_ptr<const GraphModel>;

/// One simple-random-walk move: a uniformly chosen neighbor of `v`.
inline Vertex step(const GraphModel& model, const Vertex& v, Rng& rng) {
  NeighborList list;
  model.neighbors(v, list);
  return list[rng.below(list.size())];
}

/// The integer line.
class LineGraph final : public GraphModel {
 public:
  std::string_view name() const override { return "z1"; }
  void neighbors(const Vertex& v, NeighborList& out) const override;
};

/// The square lattice.
class SquareLattice final : public GraphModel {
 public:
  std::string_view name() const override { return "z2"; }
  void neighbors(const Vertex& v, NeighborList& out) const override;
};

/// Comb: the integer line as spine with a half-infinite tooth (x, 1), (x, 2), ...
/// hanging off every spine vertex (x, 0).
class CombGraph final : public GraphModel {
 public:
  std::string_view name() const override { return "comb"; }
  void neighbors(const Vertex& v, NeighborList& out) const override;
};

/// Z, Z^2 and the comb; all recurrent.
std::vector<ModelPtr> builtin_models();

/// Looks up a built-in model by CLI name ("z1", "z2", "comb"); "Z" and "Z2" are
/// accepted as aliases. Throws std::invalid_argument for anything else.
ModelPtr find_model(std::string_view name);

}  // namespace walkercount
