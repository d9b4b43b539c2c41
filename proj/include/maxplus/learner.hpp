#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "maxplus/hankel.hpp"
#include "maxplus/oracles.hpp"
#include "maxplus/wfa.hpp"

namespace maxplus {

/// How the observation table is closed and how counterexamples are fed
/// back into it.
///
///   column_closed  — closes rows and columns; hypotheses are faithful
///                    to every cell of the table they were built from.
///   van_heerdt     — closes rows only; every suffix of a counterexample
///                    goes into the column set.
///   hybrid         — closes rows only and uses the same counterexample
///                    tail rule as column_closed. Unsound: it can stall
///                    forever on inputs the other two variants learn, so
///                    it must be enabled explicitly (demo/diagnostics).
enum class AlgorithmVariant { column_closed, van_heerdt, hybrid };

const char* variant_name(AlgorithmVariant v);
std::optional<AlgorithmVariant> parse_variant(std::string_view name);

struct LearnConfig {
  AlgorithmVariant variant = AlgorithmVariant::column_closed;
  /// Required for the hybrid variant; refused otherwise.
  bool allow_unsound = false;

  /// Word-length bound used by the bounded equivalence oracle; recorded
  /// here so outcomes can report what "converged" meant.
  std::size_t eq_max_len = 6;

  // Budgets turning divergence into reportable outcomes.
  std::size_t max_rows = 50;
  std::size_t max_cols = 50;
  std::size_t max_iterations = 100;

  /// Optional initial mask (both must contain epsilon first and be
  /// prefix-/suffix-closed); defaults to ({eps}, {eps}). Useful for
  /// resuming or demonstrating mid-run scenarios.
  std::vector<Word> initial_rows;
  std::vector<Word> initial_suffixes;

  EventSink log;
  /// Test hook: called with each hypothesis right after construction,
  /// together with the table it was extracted from.
  std::function<void(const Wfa&, HankelTable&)> on_hypothesis;
};

enum class LearnStatus { converged, budget_exhausted };
enum class BudgetKind { none, rows, cols, iterations, stalled };

const char* budget_name(BudgetKind k);

struct LearnStats {
  std::uint64_t membership_queries = 0;
  std::uint64_t equivalence_queries = 0;
  std::uint64_t enclose_iterations = 0;  // row/column passes run to fixpoint
};

struct LearnOutcome {
  LearnStatus status = LearnStatus::budget_exhausted;
  BudgetKind budget = BudgetKind::none;  // set when status is budget_exhausted
  std::optional<Wfa> wfa;                // last hypothesis, if any was built
  std::vector<Word> rows;                // final P
  std::vector<Word> suffixes;            // final S
  LearnStats stats;
  std::vector<std::string> trace;        // growth/stall trace, human readable
};

/// Internal signal raised when a closure pass would exceed a budget;
/// learn() converts it into a budget_exhausted outcome.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(BudgetKind kind, std::vector<std::string> trace)
      : std::runtime_error(std::string("budget exhausted: ") + budget_name(kind)),
        kind(kind),
        trace(std::move(trace)) {}
  BudgetKind kind;
  std::vector<std::string> trace;
};

/// One learning session over a table. The closure passes, hypothesis
/// extraction, and counterexample processing are exposed separately so
/// they can be driven and inspected in isolation.
class Learner {
 public:
  Learner(HankelTable& table, Alphabet alphabet, LearnConfig config);

  /// Scans candidate rows p·sigma in shortlex order and appends the
  /// first one that is not a max-plus combination of the current rows,
  /// restarting until none is left. Returns whether P changed.
  /// Raises BudgetExhausted when an addition would exceed max_rows.
  bool enclose_row();

  /// Dual pass over candidate columns sigma·s (solved in column form via
  /// the transpose). Returns whether S changed.
  bool enclose_column();

  /// Runs the closure passes to a joint fixpoint (rows only for the
  /// van_heerdt and hybrid variants) and builds the hypothesis:
  /// initial = unit at epsilon, final = H(:, eps), and one principal
  /// solution of X_sigma H(P,S) = H(P sigma, S) per symbol.
  Wfa extract();

  /// Feeds a counterexample back into the mask. For van_heerdt, adds all
  /// suffixes of w; otherwise takes the longest prefix p of w within P,
  /// drops one symbol, and adds all suffixes of the remaining tail.
  /// Returns whether S grew.
  bool process_counterexample(const Word& w);

  HankelTable& table() { return table_; }
  const LearnConfig& config() const { return config_; }
  LearnStats& stats() { return stats_; }
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  void note(std::string line);

  HankelTable& table_;
  Alphabet alphabet_;
  LearnConfig config_;
  LearnStats stats_;
  std::vector<std::string> trace_;
};

/// The main loop: extract a hypothesis, ask the equivalence oracle,
/// feed counterexamples back, repeat. Returns converged when the oracle
/// answers Eq., and a budget_exhausted outcome (never an exception) when
/// a budget runs out or the run stalls — i.e. the same counterexample
/// arrives twice in a row with the mask unchanged in between, which
/// would otherwise loop forever.
LearnOutcome learn(MembershipOracle membership, EquivalenceOracle equivalence,
                   const Alphabet& alphabet, const LearnConfig& config);

constexpr std::size_t kNoRemovalLimit = std::numeric_limits<std::size_t>::max();

/// Best-effort state reduction. `table` must be the row-closed subblock
/// the automaton was extracted from (one row per state, in order).
/// Repeatedly removes a row that is a max-plus combination of the
/// remaining rows (first removable in axis order, rescanning after each
/// removal, up to max_removals), then rebuilds the automaton on the
/// surviving rows. Returns the input unchanged when no row is removable.
Wfa reduce(const Wfa& a, const Matrix& table, std::size_t max_removals = kNoRemovalLimit);

}  // namespace maxplus
