#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "maxplus/examples.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/random_wfa.hpp"
#include "maxplus/scalar.hpp"
#include "maxplus/wfa.hpp"
#include "maxplus/word.hpp"

namespace maxplus::test {

inline const Scalar kBot = Scalar::bottom();

inline Vector vec(std::initializer_list<Scalar> entries) {
  return Vector(std::vector<Scalar>(entries));
}

inline Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<Vector> rv;
  for (const auto& r : rows) rv.push_back(vec(r));
  return Matrix::from_rows(rv);
}

inline Word w(std::string_view text, const Alphabet& alphabet) {
  return Word::parse(text, alphabet);
}

/// Words over {a, b} (single-character symbols).
inline Word ab_word(std::string_view text) {
  static const Alphabet kAb({"a", "b"});
  return Word::parse(text, kAb);
}

/// Words over {a, b, c}.
inline Word abc_word(std::string_view text) {
  static const Alphabet kAbc({"a", "b", "c"});
  return Word::parse(text, kAbc);
}

/// Random scalar with entries in [lo, hi]; bottom with the given
/// per-mille probability.
inline Scalar random_scalar(SplitMix64& rng, long lo, long hi, std::uint32_t bottom_permille) {
  if (rng.chance_permille(bottom_permille)) return Scalar::bottom();
  return Scalar(static_cast<long>(rng.uniform(lo, hi)));
}

inline Vector random_vector(SplitMix64& rng, std::size_t n, long lo, long hi,
                            std::uint32_t bottom_permille) {
  std::vector<Scalar> e(n);
  for (auto& s : e) s = random_scalar(rng, lo, hi, bottom_permille);
  return Vector(std::move(e));
}

inline Matrix random_matrix(SplitMix64& rng, std::size_t n, std::size_t m, long lo, long hi,
                            std::uint32_t bottom_permille) {
  Matrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, j) = random_scalar(rng, lo, hi, bottom_permille);
  }
  return out;
}

}  // namespace maxplus::test
