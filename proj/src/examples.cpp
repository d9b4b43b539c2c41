#include "maxplus/examples.hpp"

namespace maxplus::examples {

namespace {

Matrix from_longs(std::size_t n, const std::vector<std::vector<long>>& rows) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(rows[i][j]);
  }
  return m;
}

}  // namespace

Wfa closure_demo_target() {
  Alphabet alphabet({"a", "b"});
  Vector initial({Scalar(6), Scalar(11), Scalar(1)});
  Vector final({Scalar(7), Scalar(0), Scalar(6)});
  Matrix a = from_longs(3, {{2, 3, 1}, {2, 0, 9}, {3, 0, 8}});
  Matrix b = from_longs(3, {{9, 6, 2}, {10, 3, 2}, {8, 5, 4}});
  return Wfa(std::move(alphabet), std::move(initial), std::move(final), {a, b});
}

Wfa divergent_target() {
  Alphabet alphabet({"a", "b", "c"});
  const Scalar bot = Scalar::bottom();
  Vector initial({Scalar(0), Scalar(0), Scalar(0)});
  Vector final({Scalar(0), bot, bot});

  Matrix a(3, 3);
  a(0, 0) = Scalar(0);
  a(1, 1) = Scalar(1);
  a(2, 2) = Scalar(2);
  Matrix b(3, 3);
  b(1, 0) = Scalar(0);
  Matrix c(3, 3);
  c(2, 0) = Scalar(0);
  return Wfa(std::move(alphabet), std::move(initial), std::move(final), {a, b, c});
}

}  // namespace maxplus::examples
