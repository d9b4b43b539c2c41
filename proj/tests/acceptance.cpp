// Acceptance suite: end-to-end checks of the library's headline
// behaviors, one pass/fail line each. All comparisons are exact; there
// are no tolerances anywhere. Exits nonzero if any criterion fails.

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "maxplus/examples.hpp"
#include "maxplus/learner.hpp"
#include "maxplus/oracles.hpp"
#include "maxplus/random_wfa.hpp"

namespace {

using namespace maxplus;

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string detail;
  try {
    ok = body();
  } catch (const std::exception& e) {
    detail = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << detail << '\n';
  if (!ok) ++failures;
}

const Alphabet kAb({"a", "b"});

Word ab(const char* text) { return Word::parse(text, kAb); }

std::vector<Word> worked_rows() { return {ab(""), ab("a"), ab("ab"), ab("b")}; }
std::vector<Word> worked_cols() { return {ab(""), ab("a")}; }

Matrix longs(std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(entries[i * cols + j]);
  }
  return m;
}

struct SuiteInstance {
  Wfa target;
  std::uint64_t seed;
};

// 200 seeded random rational targets: up to 3 states, up to 2 symbols,
// integer entries in [0, 10].
std::vector<SuiteInstance> random_suite() {
  std::vector<SuiteInstance> out;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    SplitMix64 shape(seed * 7919);
    RandomWfaSpec spec;
    spec.states = 1 + static_cast<std::size_t>(shape.uniform(0, 2));
    spec.symbols = 1 + static_cast<std::size_t>(shape.uniform(0, 1));
    spec.min_entry = 0;
    spec.max_entry = 10;
    out.push_back({random_wfa(seed, spec), seed});
  }
  return out;
}

struct SuiteRun {
  LearnOutcome outcome;
  bool faithful = true;
};

SuiteRun run_learner(const Wfa& target) {
  LearnConfig cfg;
  cfg.eq_max_len = 6;
  cfg.max_rows = 50;
  cfg.max_cols = 50;
  SuiteRun run;
  cfg.on_hypothesis = [&](const Wfa& hyp, HankelTable& table) {
    for (const Word& p : table.mask().rows()) {
      for (const Word& s : table.mask().suffixes()) {
        if (evaluate(hyp, p + s) != table.entry(p, s)) run.faithful = false;
      }
    }
  };
  run.outcome = learn(wfa_membership(target), bounded_equivalence_oracle(target, 6),
                      target.alphabet(), cfg);
  return run;
}

}  // namespace

int main() {
  // Shared across criteria 4, 5 and 8.
  std::vector<SuiteInstance> suite;
  std::vector<SuiteRun> runs;

  criterion("1. worked observation table reproduces exactly", [] {
    HankelTable t(wfa_membership(examples::closure_demo_target()));
    const Matrix h = t.subblock(worked_rows(), worked_cols());
    const Matrix want = longs(4, 2, {13, 26, 26, 34, 35, 40, 28, 30});
    const Matrix ext =
        t.subblock({ab("aa"), ab("aba"), ab("abb"), ab("ba"), ab("bb")}, worked_cols());
    const Matrix want_ext = longs(5, 2, {34, 42, 40, 48, 44, 49, 30, 39, 37, 42});
    return h == want && ext == want_ext;
  });

  criterion("2. rows-only hypothesis is unfaithful at ab (36 vs table 35)", [] {
    const Wfa target = examples::closure_demo_target();
    HankelTable t(HankelMask(worked_rows(), worked_cols()), wfa_membership(target));
    LearnConfig cfg;
    cfg.variant = AlgorithmVariant::hybrid;
    cfg.allow_unsound = true;
    Learner session(t, kAb, cfg);
    const Wfa hyp = session.extract();
    return evaluate(hyp, ab("ab")) == Scalar(36) &&
           t.entry(ab("ab"), Word()) == Scalar(35);
  });

  criterion("3. hybrid stall detected within 3 main-loop iterations", [] {
    const Wfa target = examples::closure_demo_target();
    LearnConfig cfg;
    cfg.variant = AlgorithmVariant::hybrid;
    cfg.allow_unsound = true;
    cfg.initial_rows = worked_rows();
    cfg.initial_suffixes = worked_cols();
    const LearnOutcome outcome = learn(
        wfa_membership(target),
        scripted_equivalence(target, {ScriptEntry(ab("ab")), ScriptEntry(ab("ab"))}),
        target.alphabet(), cfg);
    return outcome.status == LearnStatus::budget_exhausted &&
           outcome.budget == BudgetKind::stalled && outcome.stats.equivalence_queries <= 3;
  });

  criterion("4. faithfulness on 200 random rational targets (zero violations)", [&] {
    suite = random_suite();
    runs.clear();
    runs.reserve(suite.size());
    bool all_faithful = true;
    for (const SuiteInstance& inst : suite) {
      runs.push_back(run_learner(inst.target));
      all_faithful = all_faithful && runs.back().faithful;
    }
    return all_faithful && runs.size() == 200;
  });

  criterion("5. termination on the same 200 targets (zero budget exhaustions)", [&] {
    if (runs.size() != 200) return false;
    for (const SuiteRun& run : runs) {
      if (run.outcome.status != LearnStatus::converged) return false;
    }
    return true;
  });

  criterion("6. divergent target exhausts a row budget of 10 with >= 8 powers of a", [] {
    const Wfa target = examples::divergent_target();
    LearnConfig cfg;
    cfg.max_rows = 10;
    cfg.eq_max_len = 6;
    const LearnOutcome outcome = learn(wfa_membership(target),
                                       bounded_equivalence_oracle(target, 6),
                                       target.alphabet(), cfg);
    if (outcome.status != LearnStatus::budget_exhausted ||
        outcome.budget != BudgetKind::rows) {
      return false;
    }
    std::size_t powers = 0;
    for (const Word& p : outcome.rows) {
      bool all_a = true;
      for (std::size_t i = 0; i < p.size(); ++i) all_a = all_a && p.symbol(i) == "a";
      powers += all_a;
    }
    return powers >= 8;
  });

  criterion("7. solver: completeness x1000 and column-growth monotonicity x200", [] {
    SplitMix64 rng(20260810);
    for (int iter = 0; iter < 1000; ++iter) {
      const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
      const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
      Matrix a(n, m);
      std::vector<Scalar> x0(n);
      bool bottom_row[5] = {false, false, false, false, false};
      for (std::size_t i = 0; i < n; ++i) {
        bool all_bottom = true;
        for (std::size_t j = 0; j < m; ++j) {
          if (rng.chance_permille(200)) {
            a(i, j) = Scalar::bottom();
          } else {
            a(i, j) = Scalar(static_cast<long>(rng.uniform(-10, 10)));
            all_bottom = false;
          }
        }
        bottom_row[i] = all_bottom;
        x0[i] = rng.chance_permille(200) ? Scalar::bottom()
                                         : Scalar(static_cast<long>(rng.uniform(-10, 10)));
      }
      const Vector x0v(x0);
      const Vector b = mat_mul(x0v, a);
      const auto solved = solve_row(a, b);
      if (!solved || mat_mul(*solved, a) != b) return false;
      bool has_bottom_row = false;
      for (std::size_t i = 0; i < n; ++i) has_bottom_row = has_bottom_row || bottom_row[i];
      if (!has_bottom_row) {
        for (std::size_t i = 0; i < n; ++i) {
          if ((*solved)[i] < x0v[i]) return false;
        }
      }
    }
    for (int iter = 0; iter < 200; ++iter) {
      const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
      const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
      const std::size_t extra = 1 + static_cast<std::size_t>(rng.uniform(0, 2));
      Matrix wide(n, m + extra);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m + extra; ++j) {
          wide(i, j) = Scalar(static_cast<long>(rng.uniform(-9, 9)));
        }
      }
      std::vector<Scalar> x0(n);
      for (std::size_t i = 0; i < n; ++i) x0[i] = Scalar(static_cast<long>(rng.uniform(-9, 9)));
      const Vector b_wide = mat_mul(Vector(x0), wide);
      Matrix narrow(n, m);
      std::vector<Scalar> b_narrow(m);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) narrow(i, j) = wide(i, j);
      }
      for (std::size_t j = 0; j < m; ++j) b_narrow[j] = b_wide[j];
      const auto old_sol = solve_row(narrow, Vector(b_narrow));
      const auto new_sol = solve_row(wide, b_wide);
      if (!old_sol || !new_sol) return false;
      for (std::size_t i = 0; i < n; ++i) {
        if (!((*new_sol)[i] <= (*old_sol)[i])) return false;
      }
    }
    return true;
  });

  criterion("8. exchange and shifting identities on all 200 final tables", [&] {
    if (runs.size() != 200) return false;
    for (std::size_t k = 0; k < runs.size(); ++k) {
      const Wfa& target = suite[k].target;
      const LearnOutcome& outcome = runs[k].outcome;
      HankelTable table(wfa_membership(target));
      const Matrix h = table.subblock(outcome.rows, outcome.suffixes);
      const Matrix ht = h.transpose();

      std::vector<Matrix> x_for;
      for (const std::string& sym : target.alphabet().symbols()) {
        std::vector<Word> shifted_rows;
        for (const Word& p : outcome.rows) shifted_rows.push_back(p.append(sym));
        const auto x = solve_matrix(h, table.subblock(shifted_rows, outcome.suffixes));
        if (!x.solution) return false;

        std::vector<Word> shifted_cols;
        for (const Word& s : outcome.suffixes) shifted_cols.push_back(s.prepend(sym));
        const auto yt =
            solve_matrix(ht, table.subblock(outcome.rows, shifted_cols).transpose());
        if (!yt.solution) return false;
        if (!(mat_mul(*x.solution, h) == mat_mul(h, yt.solution->transpose()))) return false;
        x_for.push_back(*x.solution);
      }

      const Axis suffix_axis = Axis::of_words(outcome.suffixes);
      for (const Word& sw : outcome.suffixes) {
        for (std::size_t cut = 0; cut <= sw.size(); ++cut) {
          const Word s = sw.prefix(cut);
          const Word w = sw.suffix(sw.size() - cut);
          if (!suffix_axis.find(Label(w))) continue;
          Matrix m = h;
          for (std::size_t i = s.size(); i-- > 0;) {
            m = mat_mul(x_for[target.alphabet().require(s.symbol(i))], m);
          }
          if (!(m.col(suffix_axis.require(Label(w))) ==
                h.col(suffix_axis.require(Label(sw))))) {
            return false;
          }
        }
      }
    }
    return true;
  });

  criterion("9. reduction strictly shrinks injected-dependent tables, language kept", [] {
    const Wfa target = examples::closure_demo_target();

    // Worked table extended by the dependent row ba.
    std::vector<Word> rows = worked_rows();
    rows.push_back(ab("ba"));
    HankelTable t(HankelMask(rows, worked_cols()), wfa_membership(target));
    LearnConfig cfg;
    cfg.variant = AlgorithmVariant::hybrid;
    cfg.allow_unsound = true;
    Learner session(t, kAb, cfg);
    const Wfa hyp = session.extract();
    const Matrix h = t.subblock(t.mask().rows(), t.mask().suffixes());
    const Wfa reduced = reduce(hyp, h);
    if (!(reduced.states() < hyp.states())) return false;
    if (bounded_equivalence(hyp, reduced, 5)) return false;

    // Column-closed final table with the same injected row.
    const LearnOutcome outcome = learn(wfa_membership(target),
                                       bounded_equivalence_oracle(target, 6),
                                       target.alphabet(), LearnConfig{});
    if (outcome.status != LearnStatus::converged) return false;
    std::vector<Word> rows2 = outcome.rows;
    rows2.push_back(ab("ba"));
    HankelTable t2(HankelMask(rows2, outcome.suffixes), wfa_membership(target));
    Learner session2(t2, kAb, LearnConfig{});
    const Wfa hyp2 = session2.extract();
    const Matrix h2 = t2.subblock(t2.mask().rows(), t2.mask().suffixes());
    const Wfa reduced2 = reduce(hyp2, h2);
    if (!(reduced2.states() < hyp2.states())) return false;
    return !bounded_equivalence(hyp2, reduced2, 5).has_value();
  });

  criterion("10. scale and height primitives match their defining examples", [] {
    const Vector v123({Scalar(1), Scalar(2), Scalar(3)});
    if (!(scale(v123) == Vector({Scalar(-2), Scalar(-1), Scalar(0)}))) return false;
    Matrix m(2, 2);
    m(0, 0) = Scalar(1);
    m(0, 1) = Scalar(2);
    m(1, 0) = Scalar(3);
    m(1, 1) = Scalar(4);
    Matrix want(2, 2);
    want(0, 0) = Scalar(-3);
    want(0, 1) = Scalar(-2);
    want(1, 0) = Scalar(-1);
    want(1, 1) = Scalar(0);
    if (!(scale(m) == want)) return false;
    return height(Vector({Scalar(1), Scalar(3), Scalar(2)})) == Scalar(2);
  });

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
