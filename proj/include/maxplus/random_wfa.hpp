#pragma once

#include <cstdint>

#include "maxplus/wfa.hpp"

namespace maxplus {

/// Small deterministic generator (splitmix64). Used instead of the
/// standard distributions so that seeded output is identical across
/// platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform value in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// True with probability permille/1000.
  bool chance_permille(std::uint32_t permille);

 private:
  std::uint64_t state_;
};

struct RandomWfaSpec {
  std::size_t states = 3;
  std::size_t symbols = 2;      // alphabet a, b, c, ...
  std::int64_t min_entry = 0;
  std::int64_t max_entry = 10;
  std::uint32_t bottom_permille = 0;  // probability of a -inf entry, per mille
};

/// Seed-determined automaton with uniform integer entries. With
/// bottom_permille = 0 every entry is finite, so the result is rational.
Wfa random_wfa(std::uint64_t seed, const RandomWfaSpec& spec);

}  // namespace maxplus
