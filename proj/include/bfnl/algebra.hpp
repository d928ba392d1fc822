#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bfnl/syntax.hpp"

namespace bfnl {

using Elem = int;
inline constexpr Elem kUndef = -1;

// Finite partial residuated Boolean algebra candidate, given by explicit
// tables over an index universe 0..size-1.  Binary tables are row-major;
// kUndef marks undefined entries.  Nothing is validated at construction;
// the checker decides whether the tables describe a partial residuated
// Boolean algebra.
struct PartialAlgebra {
  int size = 0;
  std::vector<std::uint8_t> leq;  // size*size, 0/1
  std::vector<Elem> otimes;       // a * b
  std::vector<Elem> lol;          // a \ b
  std::vector<Elem> lolinv;       // a / b
  std::vector<Elem> join;
  std::vector<Elem> meet;
  std::vector<Elem> neg;          // size entries; kUndef allowed, rejected by step 3
  Elem one = 0, top = 0, bot = 0;

  bool le(Elem a, Elem b) const { return leq[a * size + b] != 0; }
  Elem ot(Elem a, Elem b) const { return otimes[a * size + b]; }
  Elem ld(Elem a, Elem b) const { return lol[a * size + b]; }
  Elem rd(Elem a, Elem b) const { return lolinv[a * size + b]; }
  Elem jn(Elem a, Elem b) const { return join[a * size + b]; }
  Elem mt(Elem a, Elem b) const { return meet[a * size + b]; }
  Elem ng(Elem a) const { return neg[a]; }

  bool tables_total() const;
  static PartialAlgebra empty_tables(int m);  // all entries undefined
};

struct Violation {
  std::string rule;         // short identifier of the violated law
  std::vector<Elem> elems;  // witnessing elements
  std::string detail;
};

struct CheckResult {
  bool ok = true;
  std::optional<Violation> violation;
  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string rule, std::vector<Elem> elems, std::string detail = "") {
    return {false, Violation{std::move(rule), std::move(elems), std::move(detail)}};
  }
};

// Step 1: partial order, bounds, and sup/inf compatibility of join/meet.
CheckResult check_order_and_lattice(const PartialAlgebra& a);
// Step 2: 1 * a = a = a * 1, both defined.
CheckResult check_unit_laws(const PartialAlgebra& a);
// Step 3: total negation with a | ~a = T and a & ~a = F, both defined.
CheckResult check_complement_laws(const PartialAlgebra& a);
// Residuation law a*b <= c  iff  b <= a\c  iff  a <= c/b over all triples.
// With require_total, any undefined table entry is a violation; otherwise
// triples touching undefined entries are skipped.
CheckResult check_total_residuation(const PartialAlgebra& a, bool require_total = true);

// The two-element chain with * = &, 1 = T.
PartialAlgebra two_chain();
// Powerset Boolean algebra on the given number of atoms, with * = &,
// residuals the material implication, 1 = T.  Element index = subset mask.
PartialAlgebra boolean_powerset(int atoms);

enum class Truth { True, False, Undefined };

// Partial valuation: explicit assignments per formula plus bottom-up
// evaluation through the algebra tables.  Stored values win; anything not
// derivable comes out undefined.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(const PartialAlgebra& a) : alg_(&a) {}

  const PartialAlgebra& algebra() const { return *alg_; }
  void assign(const Formula& f, Elem v);
  bool has(const Formula& f) const;
  Elem eval(const Formula& f) const;
  Elem eval(const Bunch& b) const;  // eps -> 1, del -> T, comma -> *, semi -> &
  const std::map<std::string, Elem>& assignments() const { return by_key_; }

 private:
  const PartialAlgebra* alg_ = nullptr;
  std::map<std::string, Elem> by_key_;
};

// True iff both sides defined and leq holds; Undefined iff a side is undefined.
Truth satisfies(const PartialAlgebra& a, const Valuation& mu, const Sequent& s);

// All total assignments of the given variables, in odometer order (first
// variable most significant, values ascending).  Return false to stop.
void for_each_valuation(const PartialAlgebra& a, const std::vector<std::string>& vars,
                        const std::function<bool(const Valuation&)>& fn);
std::uint64_t valuation_count(const PartialAlgebra& a, std::size_t nvars);

// The set {1, T, F} plus all subformulas of the hypotheses and the goal.
std::set<Formula> closure_set(const std::vector<Sequent>& hypotheses, const Sequent& goal);

struct RestrictResult {
  PartialAlgebra algebra;
  std::vector<std::pair<Formula, Elem>> assignments;  // valuation on the closed set
  std::vector<Elem> carrier;                          // new index -> total-algebra element

  // Valuation bound to this result's algebra (rebuild after copying/moving).
  Valuation valuation() const {
    Valuation mu(algebra);
    for (const auto& [f, v] : assignments) mu.assign(f, v);
    return mu;
  }
};

// Carve the partial subalgebra generated by a valuation on a
// subformula-closed set out of a total algebra: universe is the set of
// values and their complements, operations are defined exactly on the
// clauses induced by the closed set plus the unit and complement laws,
// order is the restriction.  Element 0 of the result is F.
RestrictResult restrict_to_partial(const PartialAlgebra& total,
                                   const std::set<Formula>& closed_set,
                                   const Valuation& mu);

}  // namespace bfnl
