#pragma once

#include <cstdint>

namespace walkercount {

// Estimator defaults. Every report echoes the parameters it ran with.
struct EstimatorConfig {
  /// Offsets 1..n_max recorded after each quiet interval; also the truncation
  /// point for S_n distributions.
  std::int64_t n_max = 1024;
  /// Quiet-gap threshold for sample i is 2^min(i, cap); 0 means uncapped.
  int cap = 10;
  /// Scale ladder n = 2^1 .. 2^scales.
  int scales = 10;
  std::int64_t min_samples = 30;
  int min_scales = 3;

  void validate() const;

  friend bool operator==(const EstimatorConfig&, const EstimatorConfig&) = default;
};

}  // namespace walkercount
