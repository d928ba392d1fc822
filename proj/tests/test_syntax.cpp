#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bfnl/syntax.hpp"

using namespace bfnl;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }

// Random trees for the round-trip property, fixed seed.
struct Gen {
  std::mt19937 rng{20240811};
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Formula formula(int depth) {
    if (depth <= 0 || pick(4) == 0) {
      switch (pick(6)) {
        case 0: return Formula::var("p");
        case 1: return Formula::var("q");
        case 2: return Formula::var("r2");
        case 3: return Formula::one();
        case 4: return Formula::top();
        default: return Formula::bot();
      }
    }
    switch (pick(6)) {
      case 0: return Formula::neg(formula(depth - 1));
      case 1: return Formula::otimes(formula(depth - 1), formula(depth - 1));
      case 2: return Formula::lol(formula(depth - 1), formula(depth - 1));
      case 3: return Formula::lolinv(formula(depth - 1), formula(depth - 1));
      case 4: return Formula::conj(formula(depth - 1), formula(depth - 1));
      default: return Formula::disj(formula(depth - 1), formula(depth - 1));
    }
  }

  Bunch bunch(int depth) {
    if (depth <= 0 || pick(3) == 0) {
      switch (pick(4)) {
        case 0: return Bunch::eps();
        case 1: return Bunch::del();
        default: return Bunch::leaf(formula(2));
      }
    }
    Bunch l = bunch(depth - 1), r = bunch(depth - 1);
    return pick(2) ? Bunch::comma(l, r) : Bunch::semi(l, r);
  }
};

}  // namespace

TEST_CASE("parse_formula basics") {
  CHECK(F("p").kind() == FormulaKind::Var);
  CHECK(F("p").var_name() == "p");

  Formula f = F("p * q \\ r");
  CHECK(f.kind() == FormulaKind::Lol);
  CHECK(f.left() == F("p * q"));
  CHECK(f.right() == F("r"));

  Formula g = F("~(p & T)");
  CHECK(g.kind() == FormulaKind::Neg);
  CHECK(g.child() == Formula::conj(Formula::var("p"), Formula::top()));

  CHECK(F("p * q * r") == Formula::otimes(F("p * q"), F("r")));  // left-assoc
  CHECK(F("a | b & c") == Formula::disj(F("a"), F("b & c")));
  CHECK(F("~p * q") == Formula::otimes(Formula::neg(F("p")), F("q")));
}

TEST_CASE("parse_formula errors") {
  CHECK_THROWS_AS(F("p \\ q \\ r"), ParseError);  // non-associative chain
  CHECK_THROWS_AS(F("p q"), ParseError);
  CHECK_THROWS_AS(F("(p"), ParseError);
  CHECK_THROWS_AS(F(""), ParseError);
  CHECK_THROWS_AS(F("p &"), ParseError);
}

TEST_CASE("parse_sequent basics") {
  Sequent s = parse_sequent("p , q => p * q");
  CHECK(s.antecedent == Bunch::comma(Bunch::leaf(F("p")), Bunch::leaf(F("q"))));
  CHECK(s.succedent == F("p * q"));

  Sequent unit = parse_sequent("eps => 1");
  CHECK(unit.antecedent.kind() == BunchKind::Eps);
  CHECK(unit.succedent.kind() == FormulaKind::One);

  Sequent semi = parse_sequent("p ; q => p");
  CHECK(semi.antecedent.kind() == BunchKind::Semi);

  CHECK_THROWS_AS(parse_sequent("p => q => r"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p , q"), ParseError);

  // Mixed separators associate left.
  Sequent mixed = parse_sequent("p , q ; r => T");
  CHECK(mixed.antecedent ==
        Bunch::semi(Bunch::comma(Bunch::leaf(F("p")), Bunch::leaf(F("q"))), Bunch::leaf(F("r"))));
}

TEST_CASE("round trip over random trees") {
  Gen gen;
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.formula(4);
    CAPTURE(to_string(f));
    CHECK(parse_formula(to_string(f)) == f);
  }
  for (int i = 0; i < 500; ++i) {
    Bunch b = gen.bunch(3);
    CAPTURE(to_string(b));
    CHECK(parse_bunch(to_string(b)) == b);
    Sequent s{b, gen.formula(3)};
    CHECK(parse_sequent(to_string(s)) == s);
  }
}

TEST_CASE("bunch_to_formula") {
  CHECK(bunch_to_formula(parse_bunch("p , q")) == F("p * q"));
  CHECK(bunch_to_formula(Bunch::eps()) == Formula::one());
  CHECK(bunch_to_formula(parse_bunch("(p ; del) , eps")) == F("(p & T) * 1"));
}

TEST_CASE("substitute") {
  Bunch d = parse_bunch("q ; r");
  CHECK(substitute(Bunch::hole(), d) == d);
  CHECK(substitute(parse_bunch("p , _"), d) == parse_bunch("p , (q ; r)"));
  CHECK(substitute(parse_bunch("_ ; del"), Bunch::eps()) == parse_bunch("eps ; del"));
  CHECK_THROWS_AS(substitute(parse_bunch("p , q"), d), std::invalid_argument);
  CHECK_THROWS_AS(substitute(parse_bunch("_ , _"), d), std::invalid_argument);
}

TEST_CASE("size function") {
  CHECK(sequent_size(parse_sequent("p * q => p")) == 4);
  CHECK(sequent_size(parse_sequent("T => p | ~p")) == 5);
  CHECK(sequent_size(parse_sequent("p => p")) == 2);
  CHECK(formula_size(F("1")) == 1);
  CHECK(formula_size(F("~~p")) == 3);
}

TEST_CASE("size is monotone on subterms") {
  Gen gen;
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.formula(4);
    int s = formula_size(f);
    CHECK(s >= 1);
    if (f.is_binary()) {
      CHECK(formula_size(f.left()) < s);
      CHECK(formula_size(f.right()) < s);
    } else if (f.kind() == FormulaKind::Neg) {
      CHECK(formula_size(f.child()) < s);
    }
  }
  for (int i = 0; i < 200; ++i) {
    Sequent s{gen.bunch(3), gen.formula(3)};
    CHECK(sequent_size(s) >= 2);
  }
}

TEST_CASE("entailment bound") {
  Sequent goal = parse_sequent("p * q => p");
  CHECK(entailment_bound({}, goal) == 12);
  CHECK(entailment_bound({parse_sequent("p => q")}, parse_sequent("p => q")) == 12);
  CHECK(entailment_bound({}, parse_sequent("p => p")) == 8);
}

TEST_CASE("subformulas") {
  auto sf = subformulas(F("p * q"));
  CHECK(sf.size() == 3);
  CHECK(sf.count(F("p")) == 1);
  CHECK(sf.count(F("q")) == 1);
  CHECK(sf.count(F("p * q")) == 1);

  CHECK(subformulas(F("~p")).size() == 2);
  CHECK(subformulas(F("1")).size() == 1);

  Gen gen;
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.formula(4);
    CHECK(static_cast<int>(subformulas(f).size()) <= formula_size(f));
  }
}

TEST_CASE("positions and replacement") {
  Bunch b = parse_bunch("(p , q) ; r");
  int count = 0;
  for_each_position(b, [&](const BunchPath&, const Bunch&) {
    ++count;
    return true;
  });
  CHECK(count == 5);
  CHECK(subbunch_at(b, {0, 1}) == Bunch::leaf(F("q")));
  CHECK(replace_at(b, {1}, Bunch::eps()) == parse_bunch("(p , q) ; eps"));
}

TEST_CASE("canonical semicolon form") {
  Bunch a = parse_bunch("(p ; q) ; r");
  Bunch b = parse_bunch("r ; (q ; p)");
  CHECK(canonical_semi_form(a) == canonical_semi_form(b));
  Bunch c = parse_bunch("p , q");
  CHECK(canonical_semi_form(c) == c);
  // Comma shape is preserved: no exchange for the product separator.
  CHECK(canonical_semi_form(parse_bunch("q , p")) != canonical_semi_form(parse_bunch("p , q")));
}

TEST_CASE("variables") {
  auto vars = variables_of(parse_sequent("p , z => a * p"));
  CHECK(vars == std::vector<std::string>{"a", "p", "z"});
}
