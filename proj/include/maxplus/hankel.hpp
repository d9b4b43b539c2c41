#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "maxplus/linalg.hpp"
#include "maxplus/log.hpp"
#include "maxplus/word.hpp"

namespace maxplus {

/// Answers membership queries for a hidden weighted language.
/// Must be deterministic: the same word always gets the same answer.
using MembershipOracle = std::function<Scalar(const Word&)>;

/// The growing index pair (P, S) of the observation table. P is kept
/// prefix-closed and S suffix-closed; both contain epsilon, epsilon
/// first (the final-vector extraction is positional). Rows and columns
/// only ever append, so axis order is reproducible run to run.
class HankelMask {
 public:
  HankelMask();
  /// Validates closure, uniqueness, and that epsilon leads both lists.
  HankelMask(std::vector<Word> rows, std::vector<Word> suffixes);

  const std::vector<Word>& rows() const { return rows_; }
  const std::vector<Word>& suffixes() const { return suffixes_; }
  bool has_row(const Word& w) const { return row_set_.count(w) > 0; }
  bool has_suffix(const Word& w) const { return suffix_set_.count(w) > 0; }

  /// Appends p; requires p = p'sigma with p' already a row.
  void add_row(const Word& p);
  /// Appends every missing suffix of s, shortest first. Returns whether
  /// the suffix list grew.
  bool add_suffixes(const Word& s);

 private:
  std::vector<Word> rows_, suffixes_;
  std::set<Word> row_set_, suffix_set_;
};

/// A memoizing, oracle-backed view of the Hankel matrix of the hidden
/// language, restricted to a growing mask. Entries depend only on the
/// concatenation of the two index words, and each distinct word is
/// queried at most once, ever.
class HankelTable {
 public:
  explicit HankelTable(MembershipOracle oracle, EventSink log = {});
  HankelTable(HankelMask mask, MembershipOracle oracle, EventSink log = {});

  const HankelMask& mask() const { return mask_; }

  /// The value at (p, s), i.e. the oracle's answer for p·s. Neither word
  /// needs to be in the mask.
  Scalar entry(const Word& p, const Word& s);

  /// Materializes the subblock with the given word axes.
  Matrix subblock(const std::vector<Word>& rows, const std::vector<Word>& cols);
  /// The current table H over (P, S).
  Matrix current();

  void add_row(const Word& p) { mask_.add_row(p); }
  bool add_suffixes(const Word& s) { return mask_.add_suffixes(s); }

  /// Number of membership queries issued so far (= distinct words seen).
  std::uint64_t membership_queries() const { return queries_; }

  /// Diagnostic dump: tab-separated grid with word labels and scalar
  /// tokens; fills the current mask.
  std::string dump();

 private:
  HankelMask mask_;
  MembershipOracle oracle_;
  std::map<Word, Scalar> cache_;
  std::uint64_t queries_ = 0;
  EventSink log_;
};

}  // namespace maxplus
