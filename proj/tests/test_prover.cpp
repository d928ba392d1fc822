#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfnl/frames.hpp"
#include "bfnl/prover.hpp"

using namespace bfnl;

namespace {

Sequent S(const std::string& s) { return parse_sequent(s); }

ProveResult quick_prove(const std::string& s, int depth = 30) {
  SearchBudget b;
  b.max_depth = depth;
  return prove(S(s), {}, b);
}

// Satisfaction of a sequent in the complex algebra of every unital frame of
// the given size, under every valuation of its variables.
bool valid_in_all_frames(const Sequent& s, int kmax) {
  const std::vector<std::string> vars = variables_of(s);
  for (int k = 1; k <= kmax; ++k)
    for (const ResiduatedFrame& f : enumerate_unital_frames(k)) {
      const std::uint64_t values = std::uint64_t{1} << f.points;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < vars.size(); ++i) total *= values;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::map<std::string, std::uint64_t> val;
        std::uint64_t rest = idx;
        for (const std::string& v : vars) {
          val[v] = rest % values;
          rest /= values;
        }
        std::uint64_t lhs = cx_eval(f, val, s.antecedent);
        std::uint64_t rhs = cx_eval(f, val, s.succedent);
        if ((lhs & ~rhs) != 0) return false;
      }
    }
  return true;
}

const std::vector<std::string> kTheorems = {
    "p => p",
    "eps => 1",
    "p & ~p => F",
    "T => p | ~p",
    "p ; q => q & p",
    "p & (q | r) => (p & q) | (p & r)",
    "1 , p => p",
    "p , (p \\ q) => q",
    "(q / p) , p => q",
    "p * q => p * (q | r)",
    "q => p \\ (p * q)",
    "p & q => p",
};

}  // namespace

TEST_CASE("axiom instances prove at depth one") {
  auto id = quick_prove("p => p");
  REQUIRE(id.proved());
  CHECK(proof_depth(*id.proof) == 1);
  CHECK(id.proof->rule == Rule::Id);

  auto unit = quick_prove("eps => 1");
  REQUIRE(unit.proved());
  CHECK(unit.proof->rule == Rule::OneRight);

  auto contradiction = quick_prove("p & ~p => F");
  REQUIRE(contradiction.proved());
  CHECK(contradiction.proof->rule == Rule::NegLeft);

  auto middle = quick_prove("T => p | ~p");
  REQUIRE(middle.proved());
  CHECK(middle.proof->rule == Rule::NegRight);
}

TEST_CASE("distributivity proves within the documented depth") {
  auto r = quick_prove("p & (q | r) => (p & q) | (p & r)");
  REQUIRE(r.proved());
  CHECK(proof_depth(*r.proof) <= 12);
  CHECK(proof_depth(*r.proof) == 7);  // regression constant
  CHECK(valid_in_all_frames(S("p & (q | r) => (p & q) | (p & r)"), 2));
}

TEST_CASE("known theorems all prove and check") {
  for (const std::string& s : kTheorems) {
    CAPTURE(s);
    auto r = quick_prove(s);
    REQUIRE(r.proved());
    std::string why;
    CHECK(check_proof(*r.proof, {}, &why));
    CHECK(why.empty());
  }
}

TEST_CASE("soundness sweep over small frames") {
  for (const std::string& s : kTheorems) {
    CAPTURE(s);
    auto r = quick_prove(s);
    REQUIRE(r.proved());
    CHECK(valid_in_all_frames(S(s), 2));
  }
}

TEST_CASE("non-theorems exhaust without a proof") {
  SearchBudget small;
  small.max_nodes = 50000;
  CHECK_FALSE(prove(S("p , q => q * p"), {}, small).proved());
  CHECK_FALSE(prove(S("p => p * p"), {}, small).proved());
  CHECK_FALSE(prove(S("p * q => p"), {}, small).proved());
  CHECK_FALSE(prove(S("p => q"), {}, small).proved());
  CHECK_FALSE(prove(S("p => ~~p"), {}, small).proved());  // not cut-free derivable
}

TEST_CASE("budget monotonicity") {
  for (const std::string& s : {"p ; q => q & p", "p , (p \\ q) => q"}) {
    auto base = quick_prove(s);
    REQUIRE(base.proved());
    int d = proof_depth(*base.proof);
    for (int extra : {0, 3, 10}) {
      auto again = quick_prove(s, d + extra);
      CHECK(again.proved());
      CHECK(proof_depth(*again.proof) <= d + extra);
    }
  }
}

TEST_CASE("assumptions enable the consequence relation") {
  std::vector<Sequent> phi = {S("p => q"), S("q => r")};
  ProveResult r = prove(S("p => r"), phi, {});
  REQUIRE(r.proved());
  CHECK(proof_depth(*r.proof) == 2);
  CHECK(r.proof->rule == Rule::Cut);
  std::string why;
  CHECK(check_proof(*r.proof, phi, &why));

  // Cut formula inside a context.
  std::vector<Sequent> phi2 = {S("p => q")};
  ProveResult r2 = prove(S("r , p => r * q"), phi2, {});
  REQUIRE(r2.proved());
  CHECK(check_proof(*r2.proof, phi2, &why));

  // An irrelevant hypothesis does not make an invalid sequent provable.
  std::vector<Sequent> phi3 = {S("q | ~q => T")};
  CHECK_FALSE(prove(S("p => q"), phi3, {}).proved());
}

TEST_CASE("relative soundness with assumptions") {
  std::vector<Sequent> phi = {S("p => q"), S("q => r")};
  Sequent goal = S("p => r");
  REQUIRE(prove(goal, phi, {}).proved());
  // Wherever every hypothesis holds, the goal holds too.
  const std::vector<std::string> vars = variables_of(phi, goal);
  for (int k = 1; k <= 2; ++k)
    for (const ResiduatedFrame& f : enumerate_unital_frames(k)) {
      const std::uint64_t values = std::uint64_t{1} << f.points;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < vars.size(); ++i) total *= values;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::map<std::string, std::uint64_t> val;
        std::uint64_t rest = idx;
        for (const std::string& v : vars) {
          val[v] = rest % values;
          rest /= values;
        }
        bool hyps = true;
        for (const Sequent& h : phi) {
          std::uint64_t lhs = cx_eval(f, val, h.antecedent);
          std::uint64_t rhs = cx_eval(f, val, h.succedent);
          if ((lhs & ~rhs) != 0) hyps = false;
        }
        if (!hyps) continue;
        std::uint64_t lhs = cx_eval(f, val, goal.antecedent);
        std::uint64_t rhs = cx_eval(f, val, goal.succedent);
        CHECK((lhs & ~rhs) == 0);
      }
    }
}

TEST_CASE("check_proof rejects malformed trees") {
  // A lol-right node whose premise puts the antecedent formula on the
  // wrong side.
  Sequent goal = S("q => p \\ (p * q)");
  ProofNode bad;
  bad.sequent = goal;
  bad.rule = Rule::LolRight;
  ProofNode premise;
  premise.sequent = S("q , p => p * q");  // should be "p , q => p * q"
  premise.rule = Rule::Id;
  bad.premises = {premise};
  std::string why;
  CHECK_FALSE(check_proof(bad, {}, &why));
  CHECK(why.find("lol-right") != std::string::npos);

  // Assumption leaf that is not among the assumptions.
  ProofNode leaf;
  leaf.sequent = S("p => q");
  leaf.rule = Rule::Assumption;
  CHECK_FALSE(check_proof(leaf, {}, &why));
  CHECK(check_proof(leaf, {S("p => q")}, &why));

  // Wrong premise count.
  ProofNode id;
  id.sequent = S("p => p");
  id.rule = Rule::Id;
  id.premises = {leaf};
  CHECK_FALSE(check_proof(id, {S("p => q")}, &why));
}

TEST_CASE("proved trees survive reserialization to text") {
  auto r = quick_prove("p , (p \\ q) => q");
  REQUIRE(r.proved());
  std::string text = proof_to_text(*r.proof);
  CHECK(text.find("lol-left") != std::string::npos);
  CHECK(text.find("id") != std::string::npos);
}

TEST_CASE("rule names round trip") {
  for (int i = 0; i <= static_cast<int>(Rule::AndContract); ++i) {
    Rule r = static_cast<Rule>(i);
    auto back = rule_from_name(rule_name(r));
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK_FALSE(rule_from_name("no-such-rule").has_value());
}
