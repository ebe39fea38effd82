#pragma once

#include <cstdint>
#include <random>

namespace walkercount {

// splitmix64 finalizer; used to derive child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for stream number `index` under `seed`. Fixed for all time: walker traces
/// and reports are reproducible from (seed, index) alone.
constexpr std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

/// Oracle Monte Carlo runs draw from a separate namespace so they never share
/// randomness with experiment streams built from the same integer seed.
constexpr std::uint64_t namespaced_seed(std::uint64_t ns, std::uint64_t seed) noexcept {
  return child_seed(mix64(ns ^ 0xA0761D6478BD642FULL), seed);
}

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with
  /// rejection, so the result is exactly uniform and identical on every platform.
  std::uint64_t below(std::uint64_t bound) {
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace walkercount
