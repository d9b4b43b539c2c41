#include "maxplus/learner.hpp"

#include <algorithm>
#include <utility>

namespace maxplus {

const char* variant_name(AlgorithmVariant v) {
  switch (v) {
    case AlgorithmVariant::column_closed: return "column-closed";
    case AlgorithmVariant::van_heerdt: return "van-heerdt";
    case AlgorithmVariant::hybrid: return "hybrid";
  }
  return "?";
}

std::optional<AlgorithmVariant> parse_variant(std::string_view name) {
  if (name == "column-closed") return AlgorithmVariant::column_closed;
  if (name == "van-heerdt") return AlgorithmVariant::van_heerdt;
  if (name == "hybrid") return AlgorithmVariant::hybrid;
  return std::nullopt;
}

const char* budget_name(BudgetKind k) {
  switch (k) {
    case BudgetKind::none: return "none";
    case BudgetKind::rows: return "rows";
    case BudgetKind::cols: return "cols";
    case BudgetKind::iterations: return "iterations";
    case BudgetKind::stalled: return "stalled";
  }
  return "?";
}

Learner::Learner(HankelTable& table, Alphabet alphabet, LearnConfig config)
    : table_(table), alphabet_(std::move(alphabet)), config_(std::move(config)) {
  if (config_.max_rows == 0 || config_.max_cols == 0 || config_.max_iterations == 0) {
    throw std::invalid_argument("Learner: budgets must be positive");
  }
  if (config_.variant == AlgorithmVariant::hybrid && !config_.allow_unsound) {
    throw std::invalid_argument(
        "Learner: the hybrid variant is unsound and requires allow_unsound");
  }
}

void Learner::note(std::string line) {
  emit(config_.log, {{"event", "note"}, {"detail", line}});
  trace_.push_back(std::move(line));
}

bool Learner::enclose_row() {
  bool updated = false;
  for (;;) {
    const auto& rows = table_.mask().rows();
    const auto& cols = table_.mask().suffixes();
    std::vector<Word> candidates;
    candidates.reserve(rows.size() * alphabet_.size());
    for (const Word& p : rows) {
      for (const std::string& sym : alphabet_.symbols()) candidates.push_back(p.append(sym));
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](const Word& a, const Word& b) { return shortlex_less(a, b, alphabet_); });

    Matrix h = table_.subblock(rows, cols);
    std::optional<Word> adding;
    for (const Word& cand : candidates) {
      std::vector<Scalar> target(cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) target[j] = table_.entry(cand, cols[j]);
      if (!solve_row(h, Vector(std::move(target)))) {
        adding = cand;
        break;
      }
    }
    if (!adding) return updated;
    if (rows.size() + 1 > config_.max_rows) {
      note("row budget hit while adding " + adding->str());
      throw BudgetExhausted(BudgetKind::rows, trace_);
    }
    table_.add_row(*adding);
    note("row + " + adding->str() + " (|P|=" + std::to_string(rows.size()) + ")");
    emit(config_.log,
         {{"event", "add_row"}, {"word", adding->symbols()}, {"rows", rows.size()}});
    updated = true;
  }
}

bool Learner::enclose_column() {
  bool updated = false;
  for (;;) {
    const auto& rows = table_.mask().rows();
    const auto& cols = table_.mask().suffixes();
    std::vector<Word> candidates;
    candidates.reserve(cols.size() * alphabet_.size());
    for (const std::string& sym : alphabet_.symbols()) {
      for (const Word& s : cols) candidates.push_back(s.prepend(sym));
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](const Word& a, const Word& b) { return shortlex_less(a, b, alphabet_); });

    Matrix ht = table_.subblock(rows, cols).transpose();
    std::optional<Word> adding;
    for (const Word& cand : candidates) {
      std::vector<Scalar> target(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) target[i] = table_.entry(rows[i], cand);
      if (!solve_row(ht, Vector(std::move(target)))) {
        adding = cand;
        break;
      }
    }
    if (!adding) return updated;
    if (cols.size() + 1 > config_.max_cols) {
      note("column budget hit while adding " + adding->str());
      throw BudgetExhausted(BudgetKind::cols, trace_);
    }
    table_.add_suffixes(*adding);
    note("col + " + adding->str() + " (|S|=" + std::to_string(cols.size()) + ")");
    emit(config_.log,
         {{"event", "add_column"}, {"word", adding->symbols()}, {"cols", cols.size()}});
    updated = true;
  }
}

Wfa Learner::extract() {
  for (;;) {
    const bool grew_rows = enclose_row();
    const bool grew_cols =
        config_.variant == AlgorithmVariant::column_closed ? enclose_column() : false;
    ++stats_.enclose_iterations;
    if (!grew_rows && !grew_cols) break;
  }

  const auto& rows = table_.mask().rows();
  const auto& cols = table_.mask().suffixes();
  const std::size_t d = rows.size();
  Matrix h = table_.subblock(rows, cols);

  std::vector<Scalar> init(d, Scalar::bottom());
  init[0] = Scalar(0);  // epsilon is first in P by construction
  Vector beta = h.col(0);
  Vector initial{Axis::indices(d), std::move(init)};
  Vector final{Axis::indices(d), beta.entries()};

  std::vector<Matrix> transitions;
  transitions.reserve(alphabet_.size());
  for (const std::string& sym : alphabet_.symbols()) {
    std::vector<Word> shifted;
    shifted.reserve(d);
    for (const Word& p : rows) shifted.push_back(p.append(sym));
    Matrix target = table_.subblock(shifted, cols);
    MatrixSolution sol = solve_matrix(h, target);
    if (!sol.solution) {
      // Cannot happen after enclose_row: the failing row would have been
      // appended to P instead.
      throw std::logic_error("extract: row-closedness violated at " +
                             label_str(*sol.failed_row));
    }
    Matrix x = std::move(*sol.solution);
    Matrix t(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) t(i, j) = x(i, j);
    }
    transitions.push_back(std::move(t));
  }

  Wfa hypothesis(alphabet_, std::move(initial), std::move(final), std::move(transitions));
  note("extract |P|=" + std::to_string(d) + " |S|=" + std::to_string(cols.size()) +
       " states=" + std::to_string(hypothesis.states()));
  emit(config_.log, {{"event", "extract"},
                     {"rows", d},
                     {"cols", cols.size()},
                     {"states", hypothesis.states()}});
  if (config_.on_hypothesis) config_.on_hypothesis(hypothesis, table_);
  return hypothesis;
}

bool Learner::process_counterexample(const Word& w) {
  if (config_.variant == AlgorithmVariant::van_heerdt) {
    const bool grew = table_.add_suffixes(w);
    note("cex " + w.str() + " -> all suffixes" + (grew ? "" : " (no new)"));
    return grew;
  }
  // Longest prefix of w within P, then the tail that starts one symbol
  // after it; a negative tail length means the empty word.
  std::size_t plen = 0;
  for (std::size_t len = w.size();; --len) {
    if (table_.mask().has_row(w.prefix(len))) {
      plen = len;
      break;
    }
    if (len == 0) break;
  }
  Word s;
  if (w.size() > plen + 1) s = w.suffix(w.size() - 1 - plen);
  const bool grew = table_.add_suffixes(s);
  note("cex " + w.str() + " -> tail " + (s.empty() ? "ε" : s.str()) +
       (grew ? "" : " (no new)"));
  return grew;
}

LearnOutcome learn(MembershipOracle membership, EquivalenceOracle equivalence,
                   const Alphabet& alphabet, const LearnConfig& config) {
  HankelMask mask = config.initial_rows.empty() && config.initial_suffixes.empty()
                        ? HankelMask()
                        : HankelMask(config.initial_rows.empty() ? std::vector<Word>{Word()}
                                                                 : config.initial_rows,
                                     config.initial_suffixes.empty()
                                         ? std::vector<Word>{Word()}
                                         : config.initial_suffixes);
  HankelTable table(std::move(mask), std::move(membership), config.log);
  Learner session(table, alphabet, config);

  LearnOutcome out;
  const auto finish = [&](LearnStatus status, BudgetKind budget) {
    out.status = status;
    out.budget = budget;
    out.rows = table.mask().rows();
    out.suffixes = table.mask().suffixes();
    out.stats = session.stats();
    out.stats.membership_queries = table.membership_queries();
    out.trace = session.trace();
    return out;
  };

  try {
    out.wfa = session.extract();
  } catch (const BudgetExhausted& b) {
    return finish(LearnStatus::budget_exhausted, b.kind);
  }

  std::optional<Word> last_cex;
  std::pair<std::size_t, std::size_t> sizes_at_last_cex{0, 0};
  for (std::uint64_t iteration = 1;; ++iteration) {
    if (iteration > config.max_iterations) {
      return finish(LearnStatus::budget_exhausted, BudgetKind::iterations);
    }
    EquivalenceResult res = equivalence(*out.wfa);
    ++session.stats().equivalence_queries;
    emit(config.log, {{"event", "equivalence"},
                      {"answer", res ? res->str() : "Eq."},
                      {"iteration", iteration}});
    if (!res) {
      return finish(LearnStatus::converged, BudgetKind::none);
    }
    const std::pair<std::size_t, std::size_t> sizes{table.mask().rows().size(),
                                                    table.mask().suffixes().size()};
    if (last_cex && *last_cex == *res && sizes == sizes_at_last_cex) {
      emit(config.log, {{"event", "stall"}, {"counterexample", res->symbols()}});
      auto o = finish(LearnStatus::budget_exhausted, BudgetKind::stalled);
      o.trace.push_back("stalled on repeated counterexample " + res->str());
      return o;
    }
    last_cex = *res;
    sizes_at_last_cex = sizes;
    session.process_counterexample(*res);
    try {
      out.wfa = session.extract();
    } catch (const BudgetExhausted& b) {
      return finish(LearnStatus::budget_exhausted, b.kind);
    }
  }
}

Wfa reduce(const Wfa& a, const Matrix& table, std::size_t max_removals) {
  const std::size_t n = table.row_count();
  if (n != a.states()) {
    throw std::invalid_argument("reduce: table must have one row per state");
  }

  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;

  std::size_t removed = 0;
  while (removed < max_removals && alive.size() > 1) {
    std::optional<std::size_t> pick;  // position within alive
    for (std::size_t k = 0; k < alive.size(); ++k) {
      std::vector<Vector> others;
      others.reserve(alive.size() - 1);
      for (std::size_t l = 0; l < alive.size(); ++l) {
        if (l != k) others.push_back(table.row(alive[l]));
      }
      if (combination_coeffs(others, table.row(alive[k]))) {
        pick = k;
        break;
      }
    }
    if (!pick) break;
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(*pick));
    ++removed;
  }
  if (removed == 0) return a;

  const std::size_t m = alive.size();
  std::vector<Vector> basis;
  basis.reserve(m);
  for (std::size_t k : alive) basis.push_back(table.row(k));

  // C maps removed rows onto combinations of survivors; D picks the
  // survivor rows back out. Then table == C D table.
  Matrix c(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::find(alive.begin(), alive.end(), i);
    if (it != alive.end()) {
      c(i, static_cast<std::size_t>(it - alive.begin())) = Scalar(0);
    } else {
      auto coeffs = combination_coeffs(basis, table.row(i));
      if (!coeffs) throw std::logic_error("reduce: removed row left the survivor span");
      for (std::size_t j = 0; j < m; ++j) c(i, j) = (*coeffs)[j];
    }
  }
  Matrix d(m, n);
  for (std::size_t k = 0; k < m; ++k) d(k, alive[k]) = Scalar(0);

  Vector initial = mat_mul(a.initial(), c);
  Vector final = mat_mul(d, a.final());
  std::vector<Matrix> transitions;
  transitions.reserve(a.alphabet().size());
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
    transitions.push_back(mat_mul(mat_mul(d, a.transition(s)), c));
  }
  return Wfa(a.alphabet(), std::move(initial), std::move(final), std::move(transitions));
}

}  // namespace maxplus
