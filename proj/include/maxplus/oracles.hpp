#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxplus/hankel.hpp"
#include "maxplus/wfa.hpp"
#include "maxplus/word.hpp"

namespace maxplus {

/// Answer of an equivalence query: nullopt means Eq., otherwise a word
/// on which the hypothesis and the hidden language disagree.
using EquivalenceResult = std::optional<Word>;
using EquivalenceOracle = std::function<EquivalenceResult(const Wfa&)>;

/// Membership oracle answering evaluate(target, w).
MembershipOracle wfa_membership(Wfa target);

/// Enumerates all words up to max_len in shortlex order and returns the
/// first one where the two automata differ, or Eq. Sound but incomplete:
/// exact equivalence of max-plus automata is not decidable in general,
/// so Eq. here means "no counterexample within the bound".
EquivalenceResult bounded_equivalence(const Wfa& target, const Wfa& hypothesis,
                                      std::size_t max_len);
EquivalenceOracle bounded_equivalence_oracle(Wfa target, std::size_t max_len);

class ScriptError : public std::runtime_error {
 public:
  explicit ScriptError(const std::string& what) : std::runtime_error(what) {}
};

/// A scripted answer: a counterexample word, or nullopt for Eq.
using ScriptEntry = std::optional<Word>;

/// Replays the scripted answers in order. Every scripted word is checked
/// to be a genuine counterexample for the hypothesis it is given for;
/// an invalid or exhausted script raises ScriptError.
EquivalenceOracle scripted_equivalence(Wfa target, std::vector<ScriptEntry> script);

struct QueryRecord {
  enum class Kind { membership, equivalence };
  Kind kind;
  Word word;            // queried word, or the returned counterexample
  std::string answer;   // scalar token, "Eq.", or the counterexample text
  std::uint64_t membership_count;   // running counters after this query
  std::uint64_t equivalence_count;
  std::chrono::system_clock::time_point time;
};

/// Append-only record of all oracle traffic. Wrap the oracles before
/// handing them to the learner; the wrappers keep running counters.
/// The serialized line format is deterministic (timestamps are kept
/// in memory only).
class QueryLog {
 public:
  MembershipOracle wrap(MembershipOracle inner);
  EquivalenceOracle wrap(EquivalenceOracle inner);

  const std::vector<QueryRecord>& records() const { return records_; }
  std::uint64_t membership_count() const { return membership_count_; }
  std::uint64_t equivalence_count() const { return equivalence_count_; }

  /// One JSON object per line: kind, word as a symbol array, answer
  /// token, and the running counters.
  std::string lines() const;

 private:
  std::vector<QueryRecord> records_;
  std::uint64_t membership_count_ = 0;
  std::uint64_t equivalence_count_ = 0;
};

}  // namespace maxplus
