#include "maxplus/random_wfa.hpp"

#include <stdexcept>

namespace maxplus {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("SplitMix64::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t u;
  do {
    u = next();
  } while (u >= limit);
  return lo + static_cast<std::int64_t>(u % span);
}

bool SplitMix64::chance_permille(std::uint32_t permille) {
  if (permille == 0) return false;
  if (permille >= 1000) return true;
  return uniform(0, 999) < static_cast<std::int64_t>(permille);
}

namespace {

std::string symbol_name(std::size_t i) {
  std::string name(1, static_cast<char>('a' + i % 26));
  if (i >= 26) name += std::to_string(i / 26);
  return name;
}

}  // namespace

Wfa random_wfa(std::uint64_t seed, const RandomWfaSpec& spec) {
  if (spec.states == 0 || spec.symbols == 0) {
    throw std::invalid_argument("random_wfa: states and symbols must be positive");
  }
  SplitMix64 rng(seed);
  const auto draw = [&]() -> Scalar {
    if (rng.chance_permille(spec.bottom_permille)) return Scalar::bottom();
    return Scalar(static_cast<long>(rng.uniform(spec.min_entry, spec.max_entry)));
  };

  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < spec.symbols; ++i) symbols.push_back(symbol_name(i));
  Alphabet alphabet(std::move(symbols));

  const std::size_t d = spec.states;
  std::vector<Scalar> init(d), fin(d);
  for (std::size_t i = 0; i < d; ++i) init[i] = draw();
  for (std::size_t i = 0; i < d; ++i) fin[i] = draw();
  std::vector<Matrix> transitions;
  transitions.reserve(alphabet.size());
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m(i, j) = draw();
    }
    transitions.push_back(std::move(m));
  }
  return Wfa(std::move(alphabet), Vector(std::move(init)), Vector(std::move(fin)),
             std::move(transitions));
}

}  // namespace maxplus
