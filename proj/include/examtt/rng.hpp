#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace examtt {

/// Derives an independent stream seed from a master seed, a textual label
/// and a counter. Used everywhere a run spawns sub-streams (benchmark cells,
/// per-offspring pipelines), so results do not depend on scheduling order.
uint64_t derive_seed(uint64_t master, std::string_view label, uint64_t index);

// mt19937_64 plus hand-rolled bounded draws. std::uniform_int_distribution
// is implementation-defined, which would tie reproducibility to a particular
// standard library; the draws below are pinned.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  /// Unbiased draw from [0, n); n must be positive.
  size_t uniform_index(size_t n);

  /// Unbiased draw from [lo, hi], both ends included.
  int uniform_int(int lo, int hi);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// True with probability p.
  bool coin(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace examtt
