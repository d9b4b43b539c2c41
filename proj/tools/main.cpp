// Command-line front end: learn a max-plus WFA from another one used as
// a teacher, evaluate and compare automata, reduce states, generate
// random rational instances, and walk through the bundled demo.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxplus/examples.hpp"
#include "maxplus/learner.hpp"
#include "maxplus/oracles.hpp"
#include "maxplus/random_wfa.hpp"
#include "maxplus/wfa.hpp"

namespace {

using namespace maxplus;

// Exit codes: distinct values per outcome so runs are scriptable.
constexpr int kExitOk = 0;
constexpr int kExitDifference = 1;  // equiv found a counterexample
constexpr int kExitUsage = 2;       // bad flags, unreadable or malformed files
constexpr int kExitRowBudget = 10;
constexpr int kExitColBudget = 11;
constexpr int kExitIterationBudget = 12;
constexpr int kExitStalled = 13;
constexpr int kExitSelfCheck = 20;

int budget_exit_code(BudgetKind kind) {
  switch (kind) {
    case BudgetKind::rows: return kExitRowBudget;
    case BudgetKind::cols: return kExitColBudget;
    case BudgetKind::iterations: return kExitIterationBudget;
    case BudgetKind::stalled: return kExitStalled;
    case BudgetKind::none: break;
  }
  return kExitOk;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

Wfa load_wfa(const std::string& path) {
  try {
    return read_wfa(slurp(path));
  } catch (const WfaParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

struct LearnFlags {
  std::string target_path;
  std::string algorithm = "column-closed";
  bool unsound = false;
  std::size_t eq_max_len = 6;
  std::size_t max_rows = 50;
  std::size_t max_cols = 50;
  std::size_t max_iterations = 100;
  std::string out_path;
  std::string log_path;
  std::vector<std::string> seed_rows;
  std::vector<std::string> seed_suffixes;
  std::vector<std::string> script;  // scripted equivalence answers; "Eq." allowed
};

void add_learn_flags(CLI::App& cmd, LearnFlags& f, bool with_algorithm) {
  cmd.add_option("--target", f.target_path, "teacher WFA document")->required();
  if (with_algorithm) {
    cmd.add_option("--algorithm", f.algorithm,
                   "column-closed | van-heerdt | hybrid (default column-closed)");
    cmd.add_flag("--unsound", f.unsound, "acknowledge that hybrid can stall");
    cmd.add_option("--seed-row", f.seed_rows, "initial row word (repeatable; eps implied)");
    cmd.add_option("--seed-suffix", f.seed_suffixes,
                   "initial suffix word (repeatable; eps implied)");
    cmd.add_option("--script", f.script,
                   "scripted equivalence answers in order (words or Eq.; repeatable)");
  }
  cmd.add_option("--eq-max-len", f.eq_max_len, "equivalence test word-length bound");
  cmd.add_option("--max-rows", f.max_rows, "row budget");
  cmd.add_option("--max-cols", f.max_cols, "column budget");
  cmd.add_option("--max-iterations", f.max_iterations, "main loop budget");
  cmd.add_option("--out", f.out_path, "write the learned WFA here");
  cmd.add_option("--log", f.log_path, "write the event log here (one JSON record per line)");
}

LearnConfig build_config(const LearnFlags& f, const Alphabet& alphabet,
                         std::ofstream* log_stream) {
  LearnConfig cfg;
  const auto variant = parse_variant(f.algorithm);
  if (!variant) throw std::runtime_error("unknown algorithm '" + f.algorithm + "'");
  cfg.variant = *variant;
  cfg.allow_unsound = f.unsound;
  cfg.eq_max_len = f.eq_max_len;
  cfg.max_rows = f.max_rows;
  cfg.max_cols = f.max_cols;
  cfg.max_iterations = f.max_iterations;
  if (!f.seed_rows.empty()) {
    cfg.initial_rows.push_back(Word());
    for (const auto& text : f.seed_rows) cfg.initial_rows.push_back(Word::parse(text, alphabet));
  }
  if (!f.seed_suffixes.empty()) {
    cfg.initial_suffixes.push_back(Word());
    for (const auto& text : f.seed_suffixes) {
      cfg.initial_suffixes.push_back(Word::parse(text, alphabet));
    }
  }
  if (log_stream && log_stream->is_open()) {
    cfg.log = [log_stream](const Event& e) { *log_stream << e.dump() << '\n'; };
  }
  return cfg;
}

void print_summary(const LearnOutcome& outcome, const LearnFlags& flags) {
  std::cout << "status: "
            << (outcome.status == LearnStatus::converged ? "converged" : "budget_exhausted")
            << '\n';
  if (outcome.status != LearnStatus::converged) {
    std::cout << "budget: " << budget_name(outcome.budget) << '\n';
  }
  std::cout << "algorithm: " << flags.algorithm << '\n'
            << "eq_max_len: " << flags.eq_max_len << '\n'
            << "rows: " << outcome.rows.size() << '\n'
            << "cols: " << outcome.suffixes.size() << '\n'
            << "states: " << (outcome.wfa ? std::to_string(outcome.wfa->states()) : "-") << '\n'
            << "membership_queries: " << outcome.stats.membership_queries << '\n'
            << "equivalence_queries: " << outcome.stats.equivalence_queries << '\n'
            << "enclose_iterations: " << outcome.stats.enclose_iterations << '\n';
}

int cmd_learn(const LearnFlags& flags) {
  const Wfa target = load_wfa(flags.target_path);
  std::ofstream log_stream;
  if (!flags.log_path.empty()) {
    log_stream.open(flags.log_path, std::ios::binary);
    if (!log_stream) throw std::runtime_error("cannot write '" + flags.log_path + "'");
  }
  const LearnConfig cfg = build_config(flags, target.alphabet(), &log_stream);

  EquivalenceOracle equivalence;
  if (!flags.script.empty()) {
    std::vector<ScriptEntry> script;
    for (const auto& item : flags.script) {
      if (item == "Eq.") {
        script.emplace_back(std::nullopt);
      } else {
        script.emplace_back(Word::parse(item, target.alphabet()));
      }
    }
    equivalence = scripted_equivalence(target, std::move(script));
  } else {
    equivalence = bounded_equivalence_oracle(target, cfg.eq_max_len);
  }

  const LearnOutcome outcome =
      learn(wfa_membership(target), equivalence, target.alphabet(), cfg);
  print_summary(outcome, flags);

  if (!flags.out_path.empty() && outcome.wfa) {
    spill(flags.out_path, write_wfa(*outcome.wfa));
    // Self-check: re-read the document and re-verify the hypothesis on
    // the final table (the column-closed variant promises exact
    // agreement there).
    if (cfg.variant == AlgorithmVariant::column_closed) {
      const Wfa reread = load_wfa(flags.out_path);
      const auto membership = wfa_membership(target);
      for (const Word& p : outcome.rows) {
        for (const Word& s : outcome.suffixes) {
          if (evaluate(reread, p + s) != membership(p + s)) {
            std::cerr << "self-check failed at (" << p.str() << ", " << s.str() << ")\n";
            return kExitSelfCheck;
          }
        }
      }
      std::cout << "self_check: ok\n";
    }
  }
  if (outcome.status == LearnStatus::converged) return kExitOk;
  return budget_exit_code(outcome.budget);
}

int cmd_eval(const std::string& wfa_path, const std::string& word_text) {
  const Wfa a = load_wfa(wfa_path);
  const Word w = Word::parse(word_text, a.alphabet());
  std::cout << evaluate(a, w).str() << '\n';
  return kExitOk;
}

int cmd_equiv(const std::string& left_path, const std::string& right_path,
              std::size_t max_len) {
  const Wfa left = load_wfa(left_path);
  const Wfa right = load_wfa(right_path);
  const auto cex = bounded_equivalence(left, right, max_len);
  if (!cex) {
    std::cout << "Eq.\n";
    return kExitOk;
  }
  std::cout << cex->str() << '\n';
  return kExitDifference;
}

int cmd_minimize(const LearnFlags& flags) {
  // Learn the target with the column-closed variant, then sweep
  // dependent rows out of the final table.
  const Wfa target = load_wfa(flags.target_path);
  LearnFlags inner = flags;
  inner.algorithm = "column-closed";
  const LearnConfig cfg = build_config(inner, target.alphabet(), nullptr);
  const LearnOutcome outcome = learn(wfa_membership(target),
                                     bounded_equivalence_oracle(target, cfg.eq_max_len),
                                     target.alphabet(), cfg);
  if (outcome.status != LearnStatus::converged || !outcome.wfa) {
    std::cout << "status: budget_exhausted\nbudget: " << budget_name(outcome.budget) << '\n';
    return budget_exit_code(outcome.budget);
  }
  HankelTable table(wfa_membership(target));
  const Matrix h = table.subblock(outcome.rows, outcome.suffixes);
  const Wfa reduced = reduce(*outcome.wfa, h);
  std::cout << "status: converged\n"
            << "states_before: " << outcome.wfa->states() << '\n'
            << "states_after: " << reduced.states() << '\n';
  if (!flags.out_path.empty()) spill(flags.out_path, write_wfa(reduced));
  return kExitOk;
}

int cmd_gen(std::uint64_t seed, const RandomWfaSpec& spec, const std::string& out_path) {
  const Wfa a = random_wfa(seed, spec);
  const std::string doc = write_wfa(a);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    spill(out_path, doc);
  }
  return kExitOk;
}

void print_table(HankelTable& table, const std::vector<Word>& rows,
                 const std::vector<Word>& cols) {
  const auto cell = [](const std::string& text) {
    std::cout << text;
    for (std::size_t i = text.size(); i < 6; ++i) std::cout << ' ';
  };
  cell("");
  for (const Word& s : cols) cell(s.empty() ? "eps" : s.str());
  std::cout << '\n';
  for (const Word& p : rows) {
    cell(p.empty() ? "eps" : p.str());
    for (const Word& s : cols) cell(table.entry(p, s).str());
    std::cout << '\n';
  }
}

int cmd_demo() {
  const Wfa target = examples::closure_demo_target();
  const Alphabet& sigma = target.alphabet();
  const auto word = [&](const char* text) { return Word::parse(text, sigma); };

  const std::vector<Word> rows = {word(""), word("a"), word("ab"), word("b")};
  const std::vector<Word> cols = {word(""), word("a")};

  std::cout << "Observation table at P = {eps, a, ab, b}, S = {eps, a}:\n";
  HankelTable table(wfa_membership(target));
  print_table(table, rows, cols);

  std::cout << "\nShifted rows (row . symbol), each a combination of table rows:\n";
  print_table(table, {word("aa"), word("aba"), word("abb"), word("ba"), word("bb")}, cols);

  // Rows-only hypothesis from exactly this table.
  HankelTable seeded(HankelMask(rows, cols), wfa_membership(target));
  LearnConfig rows_only;
  rows_only.variant = AlgorithmVariant::hybrid;
  rows_only.allow_unsound = true;
  Learner rows_session(seeded, sigma, rows_only);
  const Wfa rows_hyp = rows_session.extract();

  // Column-closed hypothesis from the same starting point.
  HankelTable seeded2(HankelMask(rows, cols), wfa_membership(target));
  LearnConfig closed;
  Learner closed_session(seeded2, sigma, closed);
  const Wfa closed_hyp = closed_session.extract();

  std::cout << "\nThe table is row-closed but not column-closed; on the word ab:\n"
            << "  teacher value       : " << evaluate(target, word("ab")).str() << '\n'
            << "  rows-only hypothesis: " << evaluate(rows_hyp, word("ab")).str()
            << "  <- disagrees with the already-answered query\n"
            << "  column-closed       : " << evaluate(closed_hyp, word("ab")).str() << '\n';

  std::cout << "\nFeeding the counterexample ab back to the rows-only learner changes\n"
            << "nothing (its tail is empty), so the run stalls:\n";
  LearnConfig stall_cfg;
  stall_cfg.variant = AlgorithmVariant::hybrid;
  stall_cfg.allow_unsound = true;
  stall_cfg.initial_rows = rows;
  stall_cfg.initial_suffixes = cols;
  const LearnOutcome stalled =
      learn(wfa_membership(target),
            scripted_equivalence(target, {ScriptEntry(word("ab")), ScriptEntry(word("ab"))}),
            sigma, stall_cfg);
  for (const std::string& line : stalled.trace) std::cout << "  " << line << '\n';
  std::cout << "  status: " << budget_name(stalled.budget) << " after "
            << stalled.stats.equivalence_queries << " equivalence queries\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active learning of weighted automata over the max-plus semiring"};
  app.require_subcommand(1);

  LearnFlags learn_flags;
  CLI::App* learn_cmd = app.add_subcommand("learn", "run the learner against a teacher WFA");
  add_learn_flags(*learn_cmd, learn_flags, true);

  std::string eval_wfa, eval_word;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a WFA on a word");
  eval_cmd->add_option("--wfa", eval_wfa, "WFA document")->required();
  eval_cmd->add_option("--word", eval_word,
                       "word (comma-separated symbols; plain letters for 1-char alphabets)");

  std::string equiv_left, equiv_right;
  std::size_t equiv_max_len = 6;
  CLI::App* equiv_cmd =
      app.add_subcommand("equiv", "compare two WFAs on all words up to a length bound");
  equiv_cmd->add_option("--left", equiv_left)->required();
  equiv_cmd->add_option("--right", equiv_right)->required();
  equiv_cmd->add_option("--max-len", equiv_max_len);

  LearnFlags minimize_flags;
  CLI::App* minimize_cmd =
      app.add_subcommand("minimize", "learn a teacher WFA and sweep dependent rows");
  add_learn_flags(*minimize_cmd, minimize_flags, false);

  std::uint64_t gen_seed = 0;
  RandomWfaSpec gen_spec;
  std::string gen_out;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded random rational WFA");
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--states", gen_spec.states);
  gen_cmd->add_option("--symbols", gen_spec.symbols);
  gen_cmd->add_option("--min", gen_spec.min_entry, "minimum integer entry");
  gen_cmd->add_option("--max", gen_spec.max_entry, "maximum integer entry");
  gen_cmd->add_option("--bottom-permille", gen_spec.bottom_permille,
                      "per-mille probability of a -inf entry (stress testing)");
  gen_cmd->add_option("--out", gen_out, "output file (stdout when omitted)");

  CLI::App* demo_cmd = app.add_subcommand(
      "demo", "walk through the bundled example: faithfulness, its failure, and a stall");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (learn_cmd->parsed()) return cmd_learn(learn_flags);
    if (eval_cmd->parsed()) return cmd_eval(eval_wfa, eval_word);
    if (equiv_cmd->parsed()) return cmd_equiv(equiv_left, equiv_right, equiv_max_len);
    if (minimize_cmd->parsed()) return cmd_minimize(minimize_flags);
    if (gen_cmd->parsed()) return cmd_gen(gen_seed, gen_spec, gen_out);
    if (demo_cmd->parsed()) return cmd_demo();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
