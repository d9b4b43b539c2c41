#include <doctest.h>

#include "helpers.hpp"
#include "maxplus/oracles.hpp"

using namespace maxplus;
using namespace maxplus::test;

TEST_CASE("wfa_membership answers by evaluation") {
  const auto m = wfa_membership(examples::closure_demo_target());
  CHECK(m(ab_word("ab")) == Scalar(35));
  CHECK(m(Word()) == Scalar(13));  // alpha (x) beta
  const auto mb = wfa_membership(examples::divergent_target());
  CHECK(mb(abc_word("aab")) == Scalar(2));
  CHECK_THROWS_AS(m(Word::single("z")), std::domain_error);
}

TEST_CASE("bounded equivalence is reflexive") {
  const Wfa a = examples::closure_demo_target();
  CHECK_FALSE(bounded_equivalence(a, a, 5).has_value());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Wfa r = random_wfa(seed, {.states = 3, .symbols = 2});
    CHECK_FALSE(bounded_equivalence(r, r, 4).has_value());
  }
}

TEST_CASE("bounded equivalence returns the shortlex-first difference") {
  const Wfa a = examples::closure_demo_target();

  // Shifting the final vector changes f(eps) immediately.
  std::vector<Scalar> shifted;
  for (const Scalar& s : a.final().entries()) shifted.push_back(otimes(Scalar(1), s));
  const Wfa bumped(a.alphabet(), a.initial(), Vector(shifted),
                   {a.transition(std::size_t{0}), a.transition(std::size_t{1})});
  const auto cex = bounded_equivalence(a, bumped, 3);
  REQUIRE(cex.has_value());
  CHECK(*cex == Word());

  CHECK_THROWS_AS(bounded_equivalence(a, examples::divergent_target(), 2), std::domain_error);
}

TEST_CASE("every returned counterexample is a real difference") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Wfa x = random_wfa(seed, {.states = 2, .symbols = 2, .max_entry = 6});
    const Wfa y = random_wfa(seed + 1000, {.states = 2, .symbols = 2, .max_entry = 6});
    if (const auto cex = bounded_equivalence(x, y, 4)) {
      CHECK(evaluate(x, *cex) != evaluate(y, *cex));
    }
  }
}

TEST_CASE("scripted oracle replays, validates, and errors out") {
  const Wfa target = examples::closure_demo_target();

  // A hypothesis disagreeing on "ab": the target with transition b
  // replaced by transition a.
  const Wfa wrong(target.alphabet(), target.initial(), target.final(),
                  {target.transition(std::size_t{0}), target.transition(std::size_t{0})});
  REQUIRE(evaluate(wrong, ab_word("ab")) != evaluate(target, ab_word("ab")));

  auto oracle = scripted_equivalence(
      target, {ScriptEntry(ab_word("ab")), ScriptEntry(std::nullopt)});
  const auto first = oracle(wrong);
  REQUIRE(first.has_value());
  CHECK(*first == ab_word("ab"));
  CHECK_FALSE(oracle(wrong).has_value());          // scripted Eq.
  CHECK_THROWS_AS(oracle(wrong), ScriptError);     // exhausted

  // A scripted word that is not a counterexample is rejected.
  auto bogus = scripted_equivalence(target, {ScriptEntry(ab_word("ab"))});
  CHECK_THROWS_AS(bogus(target), ScriptError);

  CHECK_THROWS_AS(scripted_equivalence(target, {}), ScriptError);
}

TEST_CASE("query log counts and serializes oracle traffic") {
  const Wfa target = examples::closure_demo_target();
  QueryLog log;
  auto m = log.wrap(wfa_membership(target));
  auto e = log.wrap(bounded_equivalence_oracle(target, 3));

  m(ab_word("ab"));
  m(ab_word("a"));
  CHECK_FALSE(e(target).has_value());
  CHECK(log.membership_count() == 2);
  CHECK(log.equivalence_count() == 1);
  REQUIRE(log.records().size() == 3);
  CHECK(log.records()[0].answer == "35");
  CHECK(log.records()[2].answer == "Eq.");

  const std::string lines = log.lines();
  CHECK(lines.find("\"membership\"") != std::string::npos);
  CHECK(lines.find("\"Eq.\"") != std::string::npos);
  // One line per record.
  std::size_t newlines = 0;
  for (char c : lines) newlines += c == '\n';
  CHECK(newlines == 3);

  // Replaying the membership records against the target reproduces the
  // recorded answers.
  for (const QueryRecord& r : log.records()) {
    if (r.kind == QueryRecord::Kind::membership) {
      CHECK(evaluate(target, r.word).str() == r.answer);
    }
  }
}
