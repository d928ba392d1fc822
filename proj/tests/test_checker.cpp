#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfnl/checker.hpp"

using namespace bfnl;

namespace {

FilterSet fs(std::initializer_list<Elem> elems) {
  FilterSet s = 0;
  for (Elem e : elems) s |= FilterSet{1} << e;
  return s;
}

Sequent S(const std::string& s) { return parse_sequent(s); }

// Six-element partial algebra passing steps 1 to 4 whose separation fails:
// two complement pairs x/y and z/w, with the meets of x against both z and
// w defined as bottom, so no prime filter contains x at all.
PartialAlgebra separation_failure_fixture() {
  const int m = 6;  // 0 = bot, 1 = x, 2 = y, 3 = z, 4 = w, 5 = top
  PartialAlgebra a = PartialAlgebra::empty_tables(m);
  a.bot = 0;
  a.top = 5;
  a.one = 5;
  for (int i = 0; i < m; ++i) {
    a.leq[0 * m + i] = 1;
    a.leq[i * m + 5] = 1;
    a.leq[i * m + i] = 1;
  }
  a.neg = {5, 2, 1, 4, 3, 0};
  auto def = [&](std::vector<Elem>& t, Elem i, Elem j, Elem v) { t[i * m + j] = v; };
  for (Elem i = 0; i < m; ++i) {
    def(a.join, i, a.neg[i], a.top);
    def(a.meet, i, a.neg[i], a.bot);
    def(a.otimes, a.one, i, i);
    def(a.otimes, i, a.one, i);
  }
  def(a.meet, 1, 3, 0);  // x & z = bot
  def(a.meet, 1, 4, 0);  // x & w = bot
  return a;
}

}  // namespace

TEST_CASE("two-chain is accepted in one sweep") {
  PartialAlgebra a = two_chain();
  CheckerVerdict v = check_partial_rba(a);
  CHECK(v.accepted);
  CHECK(v.failing_step == 0);
  CHECK(v.iterations == 1);
  REQUIRE(v.family.size() == 1);
  CHECK(v.family[0] == fs({1}));
  CHECK(v.unit_family == v.family);
}

TEST_CASE("four-element Boolean algebra is accepted with both prime filters") {
  PartialAlgebra a = boolean_powerset(2);
  CheckerVerdict v = check_partial_rba(a);
  CHECK(v.accepted);
  CHECK(v.family.size() == 2);
}

TEST_CASE("step 1 rejection") {
  PartialAlgebra a = two_chain();
  a.leq[1 * 2 + 0] = 1;
  CheckerVerdict v = check_partial_rba(a);
  CHECK_FALSE(v.accepted);
  CHECK(v.failing_step == 1);
  CHECK(v.witness->condition == "antisymmetry");
}

TEST_CASE("step 2 rejection") {
  PartialAlgebra a = two_chain();
  a.otimes[a.one * 2 + 0] = kUndef;
  CheckerVerdict v = check_partial_rba(a);
  CHECK(v.failing_step == 2);
}

TEST_CASE("step 3 rejection on a broken complement") {
  PartialAlgebra a = two_chain();
  a.join[0 * 2 + 1] = kUndef;  // bot | ~bot undefined
  CheckerVerdict v = check_partial_rba(a);
  CHECK(v.failing_step == 3);
  CHECK(v.witness->condition == "excluded-middle");
}

TEST_CASE("one-element structure is rejected for lack of prime filters") {
  // The degenerate single-element structure embeds into itself, but the
  // recognition procedure starts from the prime filters and there are none,
  // so it stops at step 4.  Kept as a frozen behavioral constant.
  PartialAlgebra a = PartialAlgebra::empty_tables(1);
  a.neg = {0};
  a.join = {0};
  a.meet = {0};
  a.otimes = {0};
  CheckerVerdict v = check_partial_rba(a);
  CHECK_FALSE(v.accepted);
  CHECK(v.failing_step == 4);
  CHECK(v.witness->condition == "empty-family");
}

TEST_CASE("condition primitives on the two-chain") {
  PartialAlgebra a = two_chain();
  FilterFamily fam = {fs({1})};
  CHECK(cond_separation(a, fam));
  CHECK(cond_m_otimes(a, fs({1}), fam));
  CHECK(cond_m_lol(a, fs({1}), fam));
  CHECK(cond_m_lolinv(a, fs({1}), fam));
  CHECK(cond_m_one(a, fs({1}), fam, fam));
  CHECK_FALSE(cond_m_one(a, fs({1}), fam, {}));  // no unit filters at all
}

TEST_CASE("separation fails for a one-sided family") {
  PartialAlgebra a = boolean_powerset(2);
  FilterFamily only_x = {principal_upset(a, 1)};
  StepWitness w;
  CHECK_FALSE(cond_separation(a, only_x, &w));
  // First unseparated pair in scan order: top (or the complement atom)
  // against something the filter cannot split.
  CHECK(w.step == 5);
  FilterFamily both = prime_filters(a);
  CHECK(cond_separation(a, both));
}

TEST_CASE("one-sided family survives the witness conditions but not separation") {
  // With meet as product every product that lands in the atom's upset
  // comes from that upset itself, so the four witness conditions hold for
  // the singleton family and rejection happens at the separation step.
  PartialAlgebra a = boolean_powerset(2);
  FilterFamily only_x = {principal_upset(a, 1)};
  CHECK(cond_m_otimes(a, only_x[0], only_x));
  CHECK(cond_m_lol(a, only_x[0], only_x));
  CHECK(cond_m_lolinv(a, only_x[0], only_x));
  CHECK(cond_m_one(a, only_x[0], only_x, only_x));
  int sweeps = 0;
  FilterFamily fixed = refine_family(a, only_x, RefinePolicy::JacobiSerial, &sweeps);
  CHECK(fixed == only_x);
  CHECK_FALSE(cond_separation(a, fixed));
}

TEST_CASE("refinement policies agree") {
  std::vector<PartialAlgebra> algebras = {two_chain(), boolean_powerset(2),
                                          boolean_powerset(3), separation_failure_fixture()};
  for (const PartialAlgebra& a : algebras) {
    FilterFamily start = prime_filters(a);
    FilterFamily jp = refine_family(a, start, RefinePolicy::JacobiParallel);
    FilterFamily js = refine_family(a, start, RefinePolicy::JacobiSerial);
    FilterFamily gs = refine_family(a, start, RefinePolicy::GaussSeidel);
    CHECK(jp == js);
    CHECK(js == gs);
  }
}

TEST_CASE("refinement is monotone and bounded") {
  PartialAlgebra a = boolean_powerset(3);
  FilterFamily start = prime_filters(a);
  int sweeps = 0;
  FilterFamily fixed = refine_family(a, start, RefinePolicy::JacobiSerial, &sweeps);
  CHECK(fixed.size() <= start.size());
  CHECK(sweeps <= 1 << a.size);
  for (FilterSet f : fixed)
    CHECK(std::find(start.begin(), start.end(), f) != start.end());
}

TEST_CASE("separation failure fixture stops at step 5") {
  PartialAlgebra a = separation_failure_fixture();
  REQUIRE(check_order_and_lattice(a).ok);
  REQUIRE(check_unit_laws(a).ok);
  REQUIRE(check_complement_laws(a).ok);
  CheckerVerdict v = check_partial_rba(a);
  CHECK_FALSE(v.accepted);
  CHECK(v.failing_step == 5);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->condition == "separation");
  // x is the element no prime filter contains.
  CHECK(v.witness->elements[0] == 1);
}

TEST_CASE("acceptance certificates verify") {
  for (int atoms = 1; atoms <= 3; ++atoms) {
    PartialAlgebra a = boolean_powerset(atoms);
    CheckerVerdict v = check_partial_rba(a);
    REQUIRE(v.accepted);
    AcceptanceCertificate cert = certify_acceptance(a, v);
    CHECK(cert.frame_check.ok);
    CHECK(cert.embedding_check.ok);
    CHECK(cert.frame.points == static_cast<int>(v.family.size()));
  }
  PartialAlgebra a = two_chain();
  CheckerVerdict rejected = check_partial_rba([] {
    PartialAlgebra b = two_chain();
    b.leq[1 * 2 + 0] = 1;
    return b;
  }());
  CHECK_THROWS_AS(certify_acceptance(a, rejected), std::invalid_argument);
}

TEST_CASE("restriction outputs are accepted and certified") {
  PartialAlgebra total = boolean_powerset(2);
  std::vector<Sequent> phi;
  for (const char* txt : {"p * q => p", "p => p | q", "p \\ q => q / p"}) {
    Sequent goal = S(txt);
    std::set<Formula> t = closure_set(phi, goal);
    for_each_valuation(total, variables_of(phi, goal), [&](const Valuation& mu) {
      RestrictResult r = restrict_to_partial(total, t, mu);
      CheckerVerdict v = check_partial_rba(r.algebra);
      CHECK(v.accepted);
      if (v.accepted) {
        AcceptanceCertificate cert = certify_acceptance(r.algebra, v);
        CHECK(cert.embedding_check.ok);
      }
      return true;
    });
  }
}
