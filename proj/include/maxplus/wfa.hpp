#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxplus/linalg.hpp"
#include "maxplus/word.hpp"

namespace maxplus {

/// A weighted finite automaton over the max-plus semiring: an initial
/// row vector, a final column vector, and one transition matrix per
/// symbol, all of one dimension d (the number of states). Entry
/// A_sigma(i,j) is the weight of the sigma-transition from state i to
/// state j. Immutable after construction.
class Wfa {
 public:
  Wfa(Alphabet alphabet, Vector initial, Vector final, std::vector<Matrix> transitions);

  std::size_t states() const { return initial_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }
  const Vector& initial() const { return initial_; }
  const Vector& final() const { return final_; }
  const Matrix& transition(std::size_t symbol_index) const {
    return transitions_.at(symbol_index);
  }
  const Matrix& transition(std::string_view symbol) const {
    return transitions_.at(alphabet_.require(symbol));
  }

  bool operator==(const Wfa& o) const;

 private:
  Alphabet alphabet_;
  Vector initial_;
  Vector final_;
  std::vector<Matrix> transitions_;  // aligned with alphabet order
};

/// The state-weight row vector after reading w; configuration(A, eps)
/// is the initial vector. Throws std::domain_error on foreign symbols.
Vector configuration(const Wfa& a, const Word& w);

/// The weight of w: configuration(A, w) combined with the final vector.
Scalar evaluate(const Wfa& a, const Word& w);

/// True iff every entry of the initial vector, final vector, and all
/// transition matrices is finite.
bool is_rational(const Wfa& a);

class WfaParseError : public std::runtime_error {
 public:
  explicit WfaParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Reads a WFA document: a JSON object with keys "alphabet" (array of
/// symbol strings), "initial" and "final" (arrays of scalar tokens) and
/// "transitions" (map from symbol to a row-major array of rows of scalar
/// tokens). Throws WfaParseError with location context on malformed
/// input, dimension mismatches, or unknown scalar tokens.
Wfa read_wfa(std::string_view text);

/// Writes the document format accepted by read_wfa; read(write(a)) == a.
std::string write_wfa(const Wfa& a);

}  // namespace maxplus
