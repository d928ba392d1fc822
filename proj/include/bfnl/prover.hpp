#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfnl/syntax.hpp"

namespace bfnl {

enum class Rule {
  Id, Assumption, Cut,
  OtimesLeft, OtimesRight,
  LolLeft, LolRight,
  LolinvLeft, LolinvRight,
  AndLeft, AndRight,
  OrLeft, OrRight1, OrRight2,
  TopLeft1, TopLeft2, TopRight,
  BotLeft,
  NegLeft, NegRight,
  OneLeft1, OneLeft2, OneRight,
  AndAssoc1, AndAssoc2, AndExchange, AndWeak, AndContract,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

struct ProofNode {
  Sequent sequent;
  Rule rule = Rule::Id;
  BunchPath position;   // context rules: where in the antecedent
  Formula cut_formula;  // cut only
  std::vector<ProofNode> premises;
};

struct SearchBudget {
  int max_depth = 30;
  // Bunch growth cap: antecedents larger than bunch_cap_factor * goal size
  // are pruned.  An explicit max_bunch_nodes overrides the factor.
  int bunch_cap_factor = 2;
  int max_bunch_nodes = 0;
  // Total node-expansion budget across the whole search; exceeding it ends
  // the search with an exhaustion result.
  std::uint64_t max_nodes = 400000;
  bool allow_cut = true;  // restricted cut, only active with assumptions
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
};

struct ProveResult {
  std::optional<ProofNode> proof;
  SearchStats stats;
  bool proved() const { return proof.has_value(); }
};

// Backward cut-free proof search; with assumptions, assumption leaves and a
// cut restricted to subformulas of the assumptions and the goal are enabled.
// Exhaustion is not a refutation.
ProveResult prove(const Sequent& goal, const std::vector<Sequent>& assumptions,
                  const SearchBudget& budget = {});

// Validates every node against its rule schema; assumption leaves must
// occur among the given assumptions.
bool check_proof(const ProofNode& proof, const std::vector<Sequent>& assumptions,
                 std::string* why = nullptr);

int proof_depth(const ProofNode& proof);
std::string proof_to_text(const ProofNode& proof);

}  // namespace bfnl
