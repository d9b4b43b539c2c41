#include "maxplus/oracles.hpp"

#include <memory>
#include <utility>

namespace maxplus {

MembershipOracle wfa_membership(Wfa target) {
  return [target = std::move(target)](const Word& w) { return evaluate(target, w); };
}

EquivalenceResult bounded_equivalence(const Wfa& target, const Wfa& hypothesis,
                                      std::size_t max_len) {
  if (!(target.alphabet() == hypothesis.alphabet())) {
    throw std::domain_error("bounded_equivalence: alphabets differ");
  }
  for (const Word& w : words_up_to(target.alphabet(), max_len)) {
    if (evaluate(target, w) != evaluate(hypothesis, w)) return w;
  }
  return std::nullopt;
}

EquivalenceOracle bounded_equivalence_oracle(Wfa target, std::size_t max_len) {
  return [target = std::move(target), max_len](const Wfa& hypothesis) {
    return bounded_equivalence(target, hypothesis, max_len);
  };
}

EquivalenceOracle scripted_equivalence(Wfa target, std::vector<ScriptEntry> script) {
  if (script.empty()) throw ScriptError("scripted_equivalence: empty script");
  auto state = std::make_shared<std::pair<std::vector<ScriptEntry>, std::size_t>>(
      std::move(script), 0);
  return [target = std::move(target), state](const Wfa& hypothesis) -> EquivalenceResult {
    if (state->second >= state->first.size()) {
      throw ScriptError("scripted_equivalence: script exhausted");
    }
    const ScriptEntry& entry = state->first[state->second++];
    if (!entry) return std::nullopt;
    const Word& w = *entry;
    if (evaluate(target, w) == evaluate(hypothesis, w)) {
      throw ScriptError("scripted_equivalence: '" + w.str() +
                        "' is not a counterexample for the presented hypothesis");
    }
    return w;
  };
}

MembershipOracle QueryLog::wrap(MembershipOracle inner) {
  return [this, inner = std::move(inner)](const Word& w) {
    Scalar value = inner(w);
    ++membership_count_;
    records_.push_back({QueryRecord::Kind::membership, w, value.str(), membership_count_,
                        equivalence_count_, std::chrono::system_clock::now()});
    return value;
  };
}

EquivalenceOracle QueryLog::wrap(EquivalenceOracle inner) {
  return [this, inner = std::move(inner)](const Wfa& hypothesis) {
    EquivalenceResult res = inner(hypothesis);
    ++equivalence_count_;
    records_.push_back({QueryRecord::Kind::equivalence, res.value_or(Word()),
                        res ? res->str() : "Eq.", membership_count_, equivalence_count_,
                        std::chrono::system_clock::now()});
    return res;
  };
}

std::string QueryLog::lines() const {
  std::string out;
  for (const QueryRecord& r : records_) {
    Event e{{"kind", r.kind == QueryRecord::Kind::membership ? "membership" : "equivalence"},
            {"word", r.word.symbols()},
            {"answer", r.answer},
            {"membership", r.membership_count},
            {"equivalence", r.equivalence_count}};
    out += e.dump();
    out += '\n';
  }
  return out;
}

}  // namespace maxplus
