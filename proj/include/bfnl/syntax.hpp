#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bfnl {

// Formulas of BFNL: variables, constants 1/T/F, negation, and the five
// binary connectives * (product), \ (left residual), / (right residual),
// & (meet), | (join).
enum class FormulaKind { Var, One, Top, Bot, Neg, Otimes, Lol, Lolinv, Conj, Disj };

class Formula {
 public:
  Formula() = default;

  static Formula var(std::string name);
  static Formula one();
  static Formula top();
  static Formula bot();
  static Formula neg(Formula a);
  static Formula otimes(Formula a, Formula b);
  static Formula lol(Formula a, Formula b);     // a \ b
  static Formula lolinv(Formula a, Formula b);  // a / b
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);

  FormulaKind kind() const;
  const std::string& var_name() const;
  Formula left() const;   // binary nodes
  Formula right() const;  // binary nodes
  Formula child() const;  // negation

  bool is_binary() const;
  explicit operator bool() const { return node_ != nullptr; }

  // Canonical structural key; total order and equality are key-based.
  const std::string& key() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return a.key() == b.key();
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return a.key() <=> b.key();
  }

  struct Node;  // implementation detail, public for the factory helpers

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Bunches: binary trees whose leaves are formulas or the structural units
// eps (comma unit) and del (semicolon unit). A hole leaf makes a context.
enum class BunchKind { Leaf, Eps, Del, Hole, Comma, Semi };

class Bunch {
 public:
  Bunch() = default;

  static Bunch leaf(Formula f);
  static Bunch eps();
  static Bunch del();
  static Bunch hole();
  static Bunch comma(Bunch l, Bunch r);
  static Bunch semi(Bunch l, Bunch r);

  BunchKind kind() const;
  const Formula& formula() const;  // Leaf only
  Bunch left() const;
  Bunch right() const;

  int node_count() const;  // all tree nodes, leaves included
  int hole_count() const;

  explicit operator bool() const { return node_ != nullptr; }
  const std::string& key() const;

  friend bool operator==(const Bunch& a, const Bunch& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return a.key() == b.key();
  }
  friend std::strong_ordering operator<=>(const Bunch& a, const Bunch& b) {
    return a.key() <=> b.key();
  }

  struct Node;  // implementation detail, public for the factory helpers

 private:
  explicit Bunch(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Sequent {
  Bunch antecedent;
  Formula succedent;

  std::string key() const { return antecedent.key() + "=>" + succedent.key(); }
  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.antecedent == b.antecedent && a.succedent == b.succedent;
  }
  friend std::strong_ordering operator<=>(const Sequent& a, const Sequent& b) {
    return a.key() <=> b.key();
  }
};

// Position of a subtree in a bunch: 0 = left child, 1 = right child.
using BunchPath = std::vector<int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Formula parse_formula(std::string_view text);
Bunch parse_bunch(std::string_view text);
Sequent parse_sequent(std::string_view text);

std::string to_string(const Formula& f);
std::string to_string(const Bunch& b);
std::string to_string(const Sequent& s);

// Homomorphic translation: comma -> *, semicolon -> &, eps -> 1, del -> T.
Formula bunch_to_formula(const Bunch& b);

// Substitution into the unique hole of a context.
Bunch substitute(const Bunch& context, const Bunch& replacement);

// Size measure: variables and constants count 1, binary nodes add 1,
// negation adds 1; a sequent is sized through bunch_to_formula.
int formula_size(const Formula& f);
int sequent_size(const Sequent& s);

// Search bound for the consequence relation: 2 * (sum of sizes) + 4.
int entailment_bound(const std::vector<Sequent>& hypotheses, const Sequent& goal);

std::set<Formula> subformulas(const Formula& f);
std::set<Formula> subformulas(const Sequent& s);

// Variables occurring in a formula / sequent / family, sorted by name.
std::vector<std::string> variables_of(const Formula& f);
std::vector<std::string> variables_of(const Sequent& s);
std::vector<std::string> variables_of(const std::vector<Sequent>& hypotheses,
                                      const Sequent& goal);

Bunch subbunch_at(const Bunch& b, const BunchPath& path);
Bunch replace_at(const Bunch& b, const BunchPath& path, const Bunch& replacement);

// Pre-order traversal of all positions; return false from the visitor to stop.
void for_each_position(const Bunch& b,
                       const std::function<bool(const BunchPath&, const Bunch&)>& visit);

// Normal form modulo semicolon associativity/exchange: maximal semicolon
// groups are flattened, children canonicalized, components sorted, and the
// group rebuilt as a right comb. Comma structure is untouched.
Bunch canonical_semi_form(const Bunch& b);

}  // namespace bfnl
