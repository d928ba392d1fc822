#include "bfnl/prover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace bfnl {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Id: return "id";
    case Rule::Assumption: return "assumption";
    case Rule::Cut: return "cut";
    case Rule::OtimesLeft: return "otimes-left";
    case Rule::OtimesRight: return "otimes-right";
    case Rule::LolLeft: return "lol-left";
    case Rule::LolRight: return "lol-right";
    case Rule::LolinvLeft: return "lolinv-left";
    case Rule::LolinvRight: return "lolinv-right";
    case Rule::AndLeft: return "and-left";
    case Rule::AndRight: return "and-right";
    case Rule::OrLeft: return "or-left";
    case Rule::OrRight1: return "or-right-1";
    case Rule::OrRight2: return "or-right-2";
    case Rule::TopLeft1: return "top-left-1";
    case Rule::TopLeft2: return "top-left-2";
    case Rule::TopRight: return "top-right";
    case Rule::BotLeft: return "bot-left";
    case Rule::NegLeft: return "neg-left";
    case Rule::NegRight: return "neg-right";
    case Rule::OneLeft1: return "one-left-1";
    case Rule::OneLeft2: return "one-left-2";
    case Rule::OneRight: return "one-right";
    case Rule::AndAssoc1: return "and-assoc-1";
    case Rule::AndAssoc2: return "and-assoc-2";
    case Rule::AndExchange: return "and-exchange";
    case Rule::AndWeak: return "and-weak";
    case Rule::AndContract: return "and-contract";
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  static const std::map<std::string, Rule> table = [] {
    std::map<std::string, Rule> t;
    for (int i = 0; i <= static_cast<int>(Rule::AndContract); ++i)
      t[rule_name(static_cast<Rule>(i))] = static_cast<Rule>(i);
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

bool is_formula_leaf(const Bunch& b) { return b.kind() == BunchKind::Leaf; }

bool leaf_is(const Bunch& b, FormulaKind k) {
  return is_formula_leaf(b) && b.formula().kind() == k;
}

// A /\ ~A pattern.
bool neg_axiom_formula(const Formula& f) {
  return f.kind() == FormulaKind::Conj && f.right().kind() == FormulaKind::Neg &&
         f.right().child() == f.left();
}

// A \/ ~A pattern.
bool excluded_middle_formula(const Formula& f) {
  return f.kind() == FormulaKind::Disj && f.right().kind() == FormulaKind::Neg &&
         f.right().child() == f.left();
}

struct Searcher {
  const std::vector<Sequent>& assumptions;
  SearchBudget budget;
  SearchStats stats;
  std::set<std::string> path;            // exact keys of ancestors
  std::map<std::string, int> fail_memo;  // key -> largest depth budget that failed
  std::map<std::string, std::pair<ProofNode, int>> proof_cache;  // key -> proof, depth
  std::vector<Formula> cut_formulas;
  bool aborted = false;  // node budget ran out; failures are no longer conclusive

  bool use_cut() const { return budget.allow_cut && !assumptions.empty(); }

  // Depth-bounded DFS with an exact-sequent ancestor check against cycles
  // and a failure memo keyed by sequent.  The memo ignores which ancestors
  // pruned a subtree, so a goal reachable only through an alternative path
  // within the budget can be missed; the engine is bounded-incomplete
  // either way and exhaustion is never reported as a refutation.
  std::optional<ProofNode> search(const Sequent& goal, int depth_left) {
    if (aborted || depth_left <= 0) return std::nullopt;
    if (goal.antecedent.node_count() > budget.max_bunch_nodes) return std::nullopt;
    const std::string key = goal.key();
    if (auto hit = proof_cache.find(key); hit != proof_cache.end())
      if (hit->second.second <= depth_left) return hit->second.first;
    if (path.count(key)) return std::nullopt;
    if (auto memo = fail_memo.find(key); memo != fail_memo.end() && memo->second >= depth_left)
      return std::nullopt;
    if (++stats.nodes_expanded > budget.max_nodes) {
      aborted = true;
      return std::nullopt;
    }

    if (auto leaf = try_axioms(goal)) {
      proof_cache.emplace(key, std::pair{*leaf, 1});
      return leaf;
    }

    path.insert(key);
    auto out = try_rules(goal, depth_left);
    path.erase(key);

    if (out) {
      proof_cache.insert_or_assign(key, std::pair{*out, proof_depth(*out)});
      return out;
    }
    if (!aborted) {
      auto [it, inserted] = fail_memo.emplace(key, depth_left);
      if (!inserted) it->second = std::max(it->second, depth_left);
    }
    return std::nullopt;
  }

  std::optional<ProofNode> try_axioms(const Sequent& goal) {
    const Bunch& g = goal.antecedent;
    const Formula& c = goal.succedent;
    if (is_formula_leaf(g) && g.formula() == c)
      return ProofNode{goal, Rule::Id, {}, {}, {}};
    if (g.kind() == BunchKind::Eps && c.kind() == FormulaKind::One)
      return ProofNode{goal, Rule::OneRight, {}, {}, {}};
    if (c.kind() == FormulaKind::Top)
      return ProofNode{goal, Rule::TopRight, {}, {}, {}};
    if (is_formula_leaf(g) && neg_axiom_formula(g.formula()) && c.kind() == FormulaKind::Bot)
      return ProofNode{goal, Rule::NegLeft, {}, {}, {}};
    if (leaf_is(g, FormulaKind::Top) && excluded_middle_formula(c))
      return ProofNode{goal, Rule::NegRight, {}, {}, {}};
    std::optional<ProofNode> bot;
    for_each_position(g, [&](const BunchPath& p, const Bunch& sub) {
      if (leaf_is(sub, FormulaKind::Bot)) {
        bot = ProofNode{goal, Rule::BotLeft, p, {}, {}};
        return false;
      }
      return true;
    });
    if (bot) return bot;
    for (const Sequent& a : assumptions)
      if (a == goal) return ProofNode{goal, Rule::Assumption, {}, {}, {}};
    return std::nullopt;
  }

  std::optional<ProofNode> prove_premises(const Sequent& goal, Rule rule, BunchPath pos,
                                          Formula cut, std::vector<Sequent> premises,
                                          int depth_left) {
    std::vector<ProofNode> sub;
    for (const Sequent& p : premises) {
      auto r = search(p, depth_left - 1);
      if (!r) return std::nullopt;
      sub.push_back(std::move(*r));
    }
    return ProofNode{goal, rule, std::move(pos), std::move(cut), std::move(sub)};
  }

  // All positions of the antecedent in pre-order.
  std::vector<std::pair<BunchPath, Bunch>> positions(const Bunch& g) {
    std::vector<std::pair<BunchPath, Bunch>> out;
    for_each_position(g, [&](const BunchPath& p, const Bunch& sub) {
      out.emplace_back(p, sub);
      return true;
    });
    return out;
  }

  std::optional<ProofNode> try_rules(const Sequent& goal, int depth_left) {
    const Bunch& g = goal.antecedent;
    const Formula& c = goal.succedent;
    auto pos = positions(g);

    // Invertible right rules.
    if (c.kind() == FormulaKind::Conj) {
      if (auto r = prove_premises(goal, Rule::AndRight, {}, {},
                                  {Sequent{g, c.left()}, Sequent{g, c.right()}}, depth_left))
        return r;
    }
    if (c.kind() == FormulaKind::Lol) {
      Sequent prem{Bunch::comma(Bunch::leaf(c.left()), g), c.right()};
      if (auto r = prove_premises(goal, Rule::LolRight, {}, {}, {prem}, depth_left)) return r;
    }
    if (c.kind() == FormulaKind::Lolinv) {
      Sequent prem{Bunch::comma(g, Bunch::leaf(c.right())), c.left()};
      if (auto r = prove_premises(goal, Rule::LolinvRight, {}, {}, {prem}, depth_left))
        return r;
    }

    // Invertible left rules.
    for (const auto& [p, sub] : pos) {
      if (leaf_is(sub, FormulaKind::Otimes)) {
        const Formula& f = sub.formula();
        Bunch repl = Bunch::comma(Bunch::leaf(f.left()), Bunch::leaf(f.right()));
        if (auto r = prove_premises(goal, Rule::OtimesLeft, p, {},
                                    {Sequent{replace_at(g, p, repl), c}}, depth_left))
          return r;
      }
      if (leaf_is(sub, FormulaKind::Conj)) {
        const Formula& f = sub.formula();
        Bunch repl = Bunch::semi(Bunch::leaf(f.left()), Bunch::leaf(f.right()));
        if (auto r = prove_premises(goal, Rule::AndLeft, p, {},
                                    {Sequent{replace_at(g, p, repl), c}}, depth_left))
          return r;
      }
      if (leaf_is(sub, FormulaKind::Disj)) {
        const Formula& f = sub.formula();
        Sequent p1{replace_at(g, p, Bunch::leaf(f.left())), c};
        Sequent p2{replace_at(g, p, Bunch::leaf(f.right())), c};
        if (auto r = prove_premises(goal, Rule::OrLeft, p, {}, {p1, p2}, depth_left)) return r;
      }
    }

    // Product right needs the antecedent split at the top comma.
    if (c.kind() == FormulaKind::Otimes && g.kind() == BunchKind::Comma) {
      if (auto r = prove_premises(goal, Rule::OtimesRight, {}, {},
                                  {Sequent{g.left(), c.left()}, Sequent{g.right(), c.right()}},
                                  depth_left))
        return r;
    }
    if (c.kind() == FormulaKind::Disj) {
      if (auto r = prove_premises(goal, Rule::OrRight1, {}, {}, {Sequent{g, c.left()}},
                                  depth_left))
        return r;
      if (auto r = prove_premises(goal, Rule::OrRight2, {}, {}, {Sequent{g, c.right()}},
                                  depth_left))
        return r;
    }

    // Residual left rules.
    for (const auto& [p, sub] : pos) {
      if (sub.kind() == BunchKind::Comma && leaf_is(sub.right(), FormulaKind::Lol)) {
        const Formula& f = sub.right().formula();  // A \ B
        Sequent p1{replace_at(g, p, Bunch::leaf(f.right())), c};
        Sequent p2{sub.left(), f.left()};
        if (auto r = prove_premises(goal, Rule::LolLeft, p, {}, {p1, p2}, depth_left))
          return r;
      }
      if (sub.kind() == BunchKind::Comma && leaf_is(sub.left(), FormulaKind::Lolinv)) {
        const Formula& f = sub.left().formula();  // A / B
        Sequent p1{replace_at(g, p, Bunch::leaf(f.left())), c};
        Sequent p2{sub.right(), f.right()};
        if (auto r = prove_premises(goal, Rule::LolinvLeft, p, {}, {p1, p2}, depth_left))
          return r;
      }
    }

    // Unit and top removal.
    for (const auto& [p, sub] : pos) {
      if (sub.kind() == BunchKind::Comma) {
        if (leaf_is(sub.left(), FormulaKind::One)) {
          if (auto r = prove_premises(goal, Rule::OneLeft1, p, {},
                                      {Sequent{replace_at(g, p, sub.right()), c}}, depth_left))
            return r;
        }
        if (leaf_is(sub.right(), FormulaKind::One)) {
          if (auto r = prove_premises(goal, Rule::OneLeft2, p, {},
                                      {Sequent{replace_at(g, p, sub.left()), c}}, depth_left))
            return r;
        }
      }
      if (sub.kind() == BunchKind::Semi) {
        if (leaf_is(sub.left(), FormulaKind::Top)) {
          if (auto r = prove_premises(goal, Rule::TopLeft1, p, {},
                                      {Sequent{replace_at(g, p, sub.right()), c}}, depth_left))
            return r;
        }
        if (leaf_is(sub.right(), FormulaKind::Top)) {
          if (auto r = prove_premises(goal, Rule::TopLeft2, p, {},
                                      {Sequent{replace_at(g, p, sub.left()), c}}, depth_left))
            return r;
        }
      }
    }

    // Structural semicolon rules, shrinking moves first.
    for (const auto& [p, sub] : pos) {
      if (sub.kind() != BunchKind::Semi) continue;
      if (auto r = prove_premises(goal, Rule::AndWeak, p, {},
                                  {Sequent{replace_at(g, p, sub.left()), c}}, depth_left))
        return r;
    }
    for (const auto& [p, sub] : pos) {
      if (sub.kind() != BunchKind::Semi) continue;
      Bunch swapped = Bunch::semi(sub.right(), sub.left());
      if (auto r = prove_premises(goal, Rule::AndExchange, p, {},
                                  {Sequent{replace_at(g, p, swapped), c}}, depth_left))
        return r;
    }
    for (const auto& [p, sub] : pos) {
      if (sub.kind() != BunchKind::Semi) continue;
      if (sub.left().kind() == BunchKind::Semi) {
        // ((D1 ; D2) ; D3)  ->  (D1 ; (D2 ; D3))
        Bunch repl = Bunch::semi(sub.left().left(), Bunch::semi(sub.left().right(), sub.right()));
        if (auto r = prove_premises(goal, Rule::AndAssoc1, p, {},
                                    {Sequent{replace_at(g, p, repl), c}}, depth_left))
          return r;
      }
      if (sub.right().kind() == BunchKind::Semi) {
        // (D1 ; (D2 ; D3))  ->  ((D1 ; D2) ; D3)
        Bunch repl = Bunch::semi(Bunch::semi(sub.left(), sub.right().left()), sub.right().right());
        if (auto r = prove_premises(goal, Rule::AndAssoc2, p, {},
                                    {Sequent{replace_at(g, p, repl), c}}, depth_left))
          return r;
      }
    }
    // Restricted cut, assumption mode only; tried before contraction since
    // contraction has the largest branching.
    if (use_cut()) {
      for (const auto& [p, sub] : pos) {
        for (const Formula& a : cut_formulas) {
          if (is_formula_leaf(sub) && sub.formula() == a) continue;  // no-op cut
          Sequent p1{sub, a};
          Sequent p2{replace_at(g, p, Bunch::leaf(a)), c};
          if (auto r = prove_premises(goal, Rule::Cut, p, a, {p1, p2}, depth_left)) return r;
        }
      }
    }
    for (const auto& [p, sub] : pos) {
      Bunch doubled = Bunch::semi(sub, sub);
      if (auto r = prove_premises(goal, Rule::AndContract, p, {},
                                  {Sequent{replace_at(g, p, doubled), c}}, depth_left))
        return r;
    }
    return std::nullopt;
  }
};

}  // namespace

ProveResult prove(const Sequent& goal, const std::vector<Sequent>& assumptions,
                  const SearchBudget& budget) {
  Searcher s{assumptions, budget, {}, {}, {}, {}, {}};
  if (s.budget.max_bunch_nodes <= 0)
    s.budget.max_bunch_nodes =
        std::max(goal.antecedent.node_count(), s.budget.bunch_cap_factor * sequent_size(goal));
  if (s.use_cut()) {
    std::set<Formula> cuts;
    for (const Sequent& a : assumptions)
      for (const Formula& f : subformulas(a)) cuts.insert(f);
    for (const Formula& f : subformulas(goal)) cuts.insert(f);
    s.cut_formulas.assign(cuts.begin(), cuts.end());
  }
  // Iterative deepening: shallow proofs are found without touching the
  // deep structural search space, and the failure memo carries over.
  ProveResult out;
  for (int level = 1; level <= s.budget.max_depth && !s.aborted; ++level)
    if ((out.proof = s.search(goal, level))) break;
  out.stats = s.stats;
  return out;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool check_node(const ProofNode& n, const std::vector<Sequent>& assumptions, std::string* why) {
  const Bunch& g = n.sequent.antecedent;
  const Formula& c = n.sequent.succedent;
  auto premise_count = [&](std::size_t k) {
    return n.premises.size() == k ||
           (why && fail(why, std::string(rule_name(n.rule)) + ": wrong premise count"));
  };
  auto mismatch = [&]() {
    return fail(why, std::string(rule_name(n.rule)) + ": schema mismatch at " +
                         to_string(n.sequent));
  };

  switch (n.rule) {
    case Rule::Id:
      if (!premise_count(0)) return false;
      if (!is_formula_leaf(g) || !(g.formula() == c)) return mismatch();
      return true;
    case Rule::Assumption:
      if (!premise_count(0)) return false;
      for (const Sequent& a : assumptions)
        if (a == n.sequent) return true;
      return fail(why, "assumption leaf not among the assumptions: " + to_string(n.sequent));
    case Rule::OneRight:
      if (!premise_count(0)) return false;
      if (g.kind() != BunchKind::Eps || c.kind() != FormulaKind::One) return mismatch();
      return true;
    case Rule::TopRight:
      if (!premise_count(0)) return false;
      if (c.kind() != FormulaKind::Top) return mismatch();
      return true;
    case Rule::BotLeft: {
      if (!premise_count(0)) return false;
      Bunch sub = subbunch_at(g, n.position);
      if (!leaf_is(sub, FormulaKind::Bot)) return mismatch();
      return true;
    }
    case Rule::NegLeft:
      if (!premise_count(0)) return false;
      if (!is_formula_leaf(g) || !neg_axiom_formula(g.formula()) ||
          c.kind() != FormulaKind::Bot)
        return mismatch();
      return true;
    case Rule::NegRight:
      if (!premise_count(0)) return false;
      if (!leaf_is(g, FormulaKind::Top) || !excluded_middle_formula(c)) return mismatch();
      return true;
    default:
      break;
  }

  // Rules with premises.
  switch (n.rule) {
    case Rule::AndRight:
      if (!premise_count(2)) return false;
      if (c.kind() != FormulaKind::Conj) return mismatch();
      if (!(n.premises[0].sequent == Sequent{g, c.left()}) ||
          !(n.premises[1].sequent == Sequent{g, c.right()}))
        return mismatch();
      break;
    case Rule::LolRight:
      if (!premise_count(1)) return false;
      if (c.kind() != FormulaKind::Lol) return mismatch();
      if (!(n.premises[0].sequent ==
            Sequent{Bunch::comma(Bunch::leaf(c.left()), g), c.right()}))
        return mismatch();
      break;
    case Rule::LolinvRight:
      if (!premise_count(1)) return false;
      if (c.kind() != FormulaKind::Lolinv) return mismatch();
      if (!(n.premises[0].sequent ==
            Sequent{Bunch::comma(g, Bunch::leaf(c.right())), c.left()}))
        return mismatch();
      break;
    case Rule::OtimesRight:
      if (!premise_count(2)) return false;
      if (c.kind() != FormulaKind::Otimes || g.kind() != BunchKind::Comma) return mismatch();
      if (!(n.premises[0].sequent == Sequent{g.left(), c.left()}) ||
          !(n.premises[1].sequent == Sequent{g.right(), c.right()}))
        return mismatch();
      break;
    case Rule::OrRight1:
      if (!premise_count(1)) return false;
      if (c.kind() != FormulaKind::Disj) return mismatch();
      if (!(n.premises[0].sequent == Sequent{g, c.left()})) return mismatch();
      break;
    case Rule::OrRight2:
      if (!premise_count(1)) return false;
      if (c.kind() != FormulaKind::Disj) return mismatch();
      if (!(n.premises[0].sequent == Sequent{g, c.right()})) return mismatch();
      break;
    default:
      break;
  }

  // Context rules: validate via the stored position.
  auto context_single = [&](const std::function<std::optional<Bunch>(const Bunch&)>& rewrite) {
    if (n.premises.size() != 1) return false;
    Bunch sub = subbunch_at(g, n.position);
    auto repl = rewrite(sub);
    if (!repl) return false;
    return n.premises[0].sequent == Sequent{replace_at(g, n.position, *repl), c};
  };

  switch (n.rule) {
    case Rule::OtimesLeft:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (!leaf_is(sub, FormulaKind::Otimes)) return std::nullopt;
            return Bunch::comma(Bunch::leaf(sub.formula().left()),
                                Bunch::leaf(sub.formula().right()));
          }))
        return mismatch();
      break;
    case Rule::AndLeft:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (!leaf_is(sub, FormulaKind::Conj)) return std::nullopt;
            return Bunch::semi(Bunch::leaf(sub.formula().left()),
                               Bunch::leaf(sub.formula().right()));
          }))
        return mismatch();
      break;
    case Rule::OrLeft: {
      if (!premise_count(2)) return false;
      Bunch sub = subbunch_at(g, n.position);
      if (!leaf_is(sub, FormulaKind::Disj)) return mismatch();
      Sequent p1{replace_at(g, n.position, Bunch::leaf(sub.formula().left())), c};
      Sequent p2{replace_at(g, n.position, Bunch::leaf(sub.formula().right())), c};
      if (!(n.premises[0].sequent == p1) || !(n.premises[1].sequent == p2)) return mismatch();
      break;
    }
    case Rule::LolLeft: {
      if (!premise_count(2)) return false;
      Bunch sub = subbunch_at(g, n.position);
      if (sub.kind() != BunchKind::Comma || !leaf_is(sub.right(), FormulaKind::Lol))
        return mismatch();
      const Formula& f = sub.right().formula();
      Sequent p1{replace_at(g, n.position, Bunch::leaf(f.right())), c};
      Sequent p2{sub.left(), f.left()};
      if (!(n.premises[0].sequent == p1) || !(n.premises[1].sequent == p2)) return mismatch();
      break;
    }
    case Rule::LolinvLeft: {
      if (!premise_count(2)) return false;
      Bunch sub = subbunch_at(g, n.position);
      if (sub.kind() != BunchKind::Comma || !leaf_is(sub.left(), FormulaKind::Lolinv))
        return mismatch();
      const Formula& f = sub.left().formula();
      Sequent p1{replace_at(g, n.position, Bunch::leaf(f.left())), c};
      Sequent p2{sub.right(), f.right()};
      if (!(n.premises[0].sequent == p1) || !(n.premises[1].sequent == p2)) return mismatch();
      break;
    }
    case Rule::OneLeft1:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (sub.kind() != BunchKind::Comma || !leaf_is(sub.left(), FormulaKind::One))
              return std::nullopt;
            return sub.right();
          }))
        return mismatch();
      break;
    case Rule::OneLeft2:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (sub.kind() != BunchKind::Comma || !leaf_is(sub.right(), FormulaKind::One))
              return std::nullopt;
            return sub.left();
          }))
        return mismatch();
      break;
    case Rule::TopLeft1:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (sub.kind() != BunchKind::Semi || !leaf_is(sub.left(), FormulaKind::Top))
              return std::nullopt;
            return sub.right();
          }))
        return mismatch();
      break;
    case Rule::TopLeft2:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (sub.kind() != BunchKind::Semi || !leaf_is(sub.right(), FormulaKind::Top))
              return std::nullopt;
            return sub.left();
          }))
        return mismatch();
      break;
    case Rule::AndAssoc1:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (sub.kind() != BunchKind::Semi || sub.left().kind() != BunchKind::Semi)
              return std::nullopt;
            return Bunch::semi(sub.left().left(),
                               Bunch::semi(sub.left().right(), sub.right()));
          }))
        return mismatch();
      break;
    case Rule::AndAssoc2:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (sub.kind() != BunchKind::Semi || sub.right().kind() != BunchKind::Semi)
              return std::nullopt;
            return Bunch::semi(Bunch::semi(sub.left(), sub.right().left()),
                               sub.right().right());
          }))
        return mismatch();
      break;
    case Rule::AndExchange:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (sub.kind() != BunchKind::Semi) return std::nullopt;
            return Bunch::semi(sub.right(), sub.left());
          }))
        return mismatch();
      break;
    case Rule::AndWeak:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            if (sub.kind() != BunchKind::Semi) return std::nullopt;
            return sub.left();
          }))
        return mismatch();
      break;
    case Rule::AndContract:
      if (!context_single([](const Bunch& sub) -> std::optional<Bunch> {
            return Bunch::semi(sub, sub);
          }))
        return mismatch();
      break;
    case Rule::Cut: {
      if (!premise_count(2)) return false;
      if (!n.cut_formula) return fail(why, "cut node without cut formula");
      Bunch sub = subbunch_at(g, n.position);
      Sequent p1{sub, n.cut_formula};
      Sequent p2{replace_at(g, n.position, Bunch::leaf(n.cut_formula)), c};
      if (!(n.premises[0].sequent == p1) || !(n.premises[1].sequent == p2)) return mismatch();
      break;
    }
    default:
      break;
  }

  for (const ProofNode& p : n.premises)
    if (!check_node(p, assumptions, why)) return false;
  return true;
}

}  // namespace

bool check_proof(const ProofNode& proof, const std::vector<Sequent>& assumptions,
                 std::string* why) {
  return check_node(proof, assumptions, why);
}

int proof_depth(const ProofNode& proof) {
  int d = 0;
  for (const ProofNode& p : proof.premises) d = std::max(d, proof_depth(p));
  return d + 1;
}

namespace {

void print_node(const ProofNode& n, int indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += to_string(n.sequent);
  out += "   [";
  out += rule_name(n.rule);
  out += "]\n";
  for (const ProofNode& p : n.premises) print_node(p, indent + 1, out);
}

}  // namespace

std::string proof_to_text(const ProofNode& proof) {
  std::string out;
  print_node(proof, 0, out);
  return out;
}

}  // namespace bfnl
