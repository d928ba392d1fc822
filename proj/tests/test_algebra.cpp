#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfnl/algebra.hpp"

using namespace bfnl;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }
Sequent S(const std::string& s) { return parse_sequent(s); }

}  // namespace

TEST_CASE("two-chain passes the table checks") {
  PartialAlgebra a = two_chain();
  CHECK(a.size == 2);
  CHECK(check_order_and_lattice(a).ok);
  CHECK(check_unit_laws(a).ok);
  CHECK(check_complement_laws(a).ok);
  CHECK(check_total_residuation(a).ok);
}

TEST_CASE("order violations are caught with witnesses") {
  PartialAlgebra a = two_chain();
  a.leq[1 * 2 + 0] = 1;  // top <= bot
  CheckResult r = check_order_and_lattice(a);
  CHECK_FALSE(r.ok);
  CHECK(r.violation->rule == "antisymmetry");

  PartialAlgebra b = two_chain();
  b.leq[0 * 2 + 0] = 0;
  CHECK(check_order_and_lattice(b).violation->rule == "reflexivity");

  // A defined join that is not an upper bound.
  PartialAlgebra c = two_chain();
  c.join[1 * 2 + 1] = 0;
  CHECK(check_order_and_lattice(c).violation->rule == "join-upper-bound");
}

TEST_CASE("unit law violations") {
  PartialAlgebra a = two_chain();
  a.otimes[a.one * 2 + 0] = kUndef;
  CheckResult r = check_unit_laws(a);
  CHECK_FALSE(r.ok);
  CHECK(r.violation->rule == "left-unit");

  PartialAlgebra b = two_chain();
  b.otimes[0 * 2 + b.one] = 1;  // bot * 1 = top
  CHECK(check_unit_laws(b).violation->rule == "right-unit");
}

TEST_CASE("complement law violations") {
  // Three-element chain: the middle element has no complement, and every
  // total negation assignment fails.
  const int m = 3;
  PartialAlgebra a = PartialAlgebra::empty_tables(m);
  a.bot = 0; a.top = 2; a.one = 2;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      a.leq[x * m + y] = x <= y;
      a.join[x * m + y] = std::max(x, y);
      a.meet[x * m + y] = std::min(x, y);
      a.otimes[x * m + y] = std::min(x, y);
    }
  CHECK(check_order_and_lattice(a).ok);
  for (Elem n0 = 0; n0 < m; ++n0)
    for (Elem n1 = 0; n1 < m; ++n1)
      for (Elem n2 = 0; n2 < m; ++n2) {
        a.neg = {n0, n1, n2};
        CHECK_FALSE(check_complement_laws(a).ok);
      }

  PartialAlgebra b = two_chain();
  b.meet[0 * 2 + 1] = kUndef;  // bot & ~bot undefined
  CHECK_FALSE(check_complement_laws(b).ok);

  PartialAlgebra c = two_chain();
  c.neg[0] = kUndef;
  CHECK(check_complement_laws(c).violation->rule == "neg-total");
}

TEST_CASE("residuation check") {
  CHECK(check_total_residuation(boolean_powerset(2)).ok);
  CHECK(check_total_residuation(boolean_powerset(3)).ok);

  PartialAlgebra a = two_chain();
  a.lol.assign(4, a.top);  // constant-top residual breaks the law
  CheckResult r = check_total_residuation(a);
  CHECK_FALSE(r.ok);

  PartialAlgebra b = two_chain();
  b.otimes[1 * 2 + 1] = kUndef;
  CHECK_FALSE(check_total_residuation(b).ok);
  CHECK(b.tables_total() == false);
}

TEST_CASE("eval follows the closure clauses") {
  PartialAlgebra a = two_chain();
  Valuation mu(a);
  CHECK(mu.eval(Formula::top()) == a.top);
  CHECK(mu.eval(Formula::one()) == a.one);
  CHECK(mu.eval(Formula::bot()) == a.bot);

  mu.assign(F("p"), 1);
  CHECK(mu.eval(F("p * q")) == kUndef);  // q unassigned
  CHECK(mu.eval(F("~p")) == 0);
  mu.assign(F("q"), 0);
  CHECK(mu.eval(F("p * q")) == 0);
  CHECK(mu.eval(F("p | q")) == 1);

  // Stored compound values win over recomputation.
  Valuation nu(a);
  nu.assign(F("p * q"), 1);
  CHECK(nu.eval(F("p * q")) == 1);
  CHECK(nu.eval(F("p")) == kUndef);
}

TEST_CASE("satisfies tri-state") {
  PartialAlgebra a = two_chain();
  Valuation mu(a);
  mu.assign(F("p"), 1);
  CHECK(satisfies(a, mu, S("p => p")) == Truth::True);
  mu.assign(F("q"), 0);
  CHECK(satisfies(a, mu, S("p => q")) == Truth::False);

  Valuation nu(a);
  nu.assign(F("p"), 1);
  CHECK(satisfies(a, nu, S("p => q")) == Truth::Undefined);

  // Bunch semantics: eps behaves as the unit, del as top.
  Valuation rho(a);
  rho.assign(F("p"), 0);
  CHECK(satisfies(a, rho, S("eps => 1")) == Truth::True);
  CHECK(satisfies(a, rho, S("p ; del => p")) == Truth::True);
}

TEST_CASE("valuation enumeration counts") {
  PartialAlgebra a2 = two_chain();
  int n = 0;
  for_each_valuation(a2, {"p"}, [&](const Valuation&) { ++n; return true; });
  CHECK(n == 2);
  n = 0;
  for_each_valuation(a2, {"p", "q"}, [&](const Valuation&) { ++n; return true; });
  CHECK(n == 4);
  PartialAlgebra a4 = boolean_powerset(2);
  n = 0;
  for_each_valuation(a4, {"p", "q", "r"}, [&](const Valuation&) { ++n; return true; });
  CHECK(n == 64);
  CHECK(valuation_count(a4, 3) == 64);
}

TEST_CASE("negation is an involution on total Boolean tables") {
  for (int atoms = 0; atoms <= 4; ++atoms) {
    PartialAlgebra a = boolean_powerset(atoms);
    for (Elem x = 0; x < a.size; ++x) CHECK(a.ng(a.ng(x)) == x);
  }
}

TEST_CASE("product distributes over join and is monotone in total algebras") {
  for (int atoms = 1; atoms <= 4; ++atoms) {
    PartialAlgebra a = boolean_powerset(atoms);
    REQUIRE(check_total_residuation(a).ok);
    for (Elem x = 0; x < a.size; ++x)
      for (Elem y = 0; y < a.size; ++y) {
        for (Elem z = 0; z < a.size; ++z) {
          CHECK(a.ot(x, a.jn(y, z)) == a.jn(a.ot(x, y), a.ot(x, z)));
          CHECK(a.ot(a.jn(y, z), x) == a.jn(a.ot(y, x), a.ot(z, x)));
          if (a.le(y, z)) {
            CHECK(a.le(a.ot(x, y), a.ot(x, z)));
            CHECK(a.le(a.ot(y, x), a.ot(z, x)));
          }
        }
      }
  }
}

TEST_CASE("closure set") {
  auto t = closure_set({}, S("p * q => p"));
  CHECK(t.count(Formula::one()) == 1);
  CHECK(t.count(Formula::top()) == 1);
  CHECK(t.count(Formula::bot()) == 1);
  CHECK(t.count(F("p * q")) == 1);
  CHECK(t.size() == 6);
}

TEST_CASE("restrict_to_partial constants-only set") {
  PartialAlgebra total = two_chain();
  Valuation mu(total);
  std::set<Formula> t{Formula::one(), Formula::top(), Formula::bot()};
  RestrictResult r = restrict_to_partial(total, t, mu);
  // Values {1, T, F} and complements collapse to the two elements.
  CHECK(r.algebra.size == 2);
  CHECK(r.algebra.bot == 0);
  CHECK(check_order_and_lattice(r.algebra).ok);
  CHECK(check_unit_laws(r.algebra).ok);
  CHECK(check_complement_laws(r.algebra).ok);
}

TEST_CASE("restrict_to_partial keeps the defining entries") {
  PartialAlgebra total = two_chain();
  Valuation mu(total);
  mu.assign(F("p"), 1);
  mu.assign(F("q"), 0);
  std::set<Formula> t = closure_set({}, S("p * q => p"));
  RestrictResult r = restrict_to_partial(total, t, mu);
  CHECK(r.algebra.size <= 2);
  Valuation nu = r.valuation();
  Elem vp = nu.eval(F("p"));
  Elem vq = nu.eval(F("q"));
  CHECK(vp != kUndef);
  CHECK(vq != kUndef);
  CHECK(r.algebra.ot(vp, vq) != kUndef);  // the product entry is defined
  CHECK(check_order_and_lattice(r.algebra).ok);
  CHECK(check_unit_laws(r.algebra).ok);
  CHECK(check_complement_laws(r.algebra).ok);
}

TEST_CASE("restrict_to_partial universe bound") {
  PartialAlgebra total = boolean_powerset(3);
  std::vector<Sequent> phi;
  Sequent goal = S("p * q => p & ~q");
  std::set<Formula> t = closure_set(phi, goal);
  int checked = 0;
  for_each_valuation(total, variables_of(phi, goal), [&](const Valuation& mu) {
    RestrictResult r = restrict_to_partial(total, t, mu);
    CHECK(r.algebra.size <= entailment_bound(phi, goal));
    CHECK(r.algebra.size <= total.size);
    return ++checked < 16;  // sample
  });
  CHECK(checked == 16);
}

TEST_CASE("restrict_to_partial validates inputs") {
  PartialAlgebra total = two_chain();
  Valuation mu(total);
  std::set<Formula> not_closed{Formula::one(), Formula::top(), Formula::bot(), F("p * q")};
  CHECK_THROWS_AS(restrict_to_partial(total, not_closed, mu), std::invalid_argument);
  std::set<Formula> no_constants{F("p")};
  CHECK_THROWS_AS(restrict_to_partial(total, no_constants, mu), std::invalid_argument);
}

TEST_CASE("bunch translation preserves semantics") {
  // mu(bunch) and mu(translated formula) coincide in every total algebra,
  // for structured bunches mixing both separators and both units.
  const std::vector<std::string> bunches = {
      "p , q", "p ; q", "(p ; del) , eps", "eps", "del", "(p , q) ; (q , p)",
      "((p ; q) , r) ; del", "1 , (p ; T)"};
  for (int atoms = 1; atoms <= 4; ++atoms) {
    PartialAlgebra a = boolean_powerset(atoms);
    for (const std::string& text : bunches) {
      Bunch b = parse_bunch(text);
      Formula f = bunch_to_formula(b);
      for_each_valuation(a, variables_of(Sequent{b, Formula::top()}),
                         [&](const Valuation& mu) {
                           CHECK(mu.eval(b) == mu.eval(f));
                           return true;
                         });
    }
  }
}

TEST_CASE("satisfaction agrees across the restriction embedding") {
  PartialAlgebra total = boolean_powerset(2);
  std::vector<Sequent> phi;
  for (const char* txt : {"p * q => p", "p => p | q", "p & q => q * p"}) {
    Sequent goal = S(txt);
    std::set<Formula> t = closure_set(phi, goal);
    for_each_valuation(total, variables_of(phi, goal), [&](const Valuation& mu) {
      RestrictResult r = restrict_to_partial(total, t, mu);
      Valuation nu = r.valuation();
      Truth partial = satisfies(r.algebra, nu, goal);
      Truth full = satisfies(total, mu, goal);
      if (partial != Truth::Undefined) CHECK(partial == full);
      return true;
    });
  }
}
