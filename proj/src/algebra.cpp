#include "bfnl/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfnl {

bool PartialAlgebra::tables_total() const {
  auto total = [](const std::vector<Elem>& t) {
    return std::none_of(t.begin(), t.end(), [](Elem e) { return e == kUndef; });
  };
  return total(otimes) && total(lol) && total(lolinv) && total(join) && total(meet) &&
         total(neg);
}

PartialAlgebra PartialAlgebra::empty_tables(int m) {
  PartialAlgebra a;
  a.size = m;
  a.leq.assign(std::size_t(m) * m, 0);
  for (int i = 0; i < m; ++i) a.leq[i * m + i] = 1;
  a.otimes.assign(std::size_t(m) * m, kUndef);
  a.lol.assign(std::size_t(m) * m, kUndef);
  a.lolinv.assign(std::size_t(m) * m, kUndef);
  a.join.assign(std::size_t(m) * m, kUndef);
  a.meet.assign(std::size_t(m) * m, kUndef);
  a.neg.assign(m, kUndef);
  return a;
}

CheckResult check_order_and_lattice(const PartialAlgebra& a) {
  const int m = a.size;
  for (int x = 0; x < m; ++x)
    if (!a.le(x, x)) return CheckResult::fail("reflexivity", {x});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && a.le(x, y) && a.le(y, x))
        return CheckResult::fail("antisymmetry", {x, y});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (!a.le(x, y)) continue;
      for (int z = 0; z < m; ++z)
        if (a.le(y, z) && !a.le(x, z)) return CheckResult::fail("transitivity", {x, y, z});
    }
  for (int x = 0; x < m; ++x) {
    if (!a.le(a.bot, x)) return CheckResult::fail("bottom-bound", {x});
    if (!a.le(x, a.top)) return CheckResult::fail("top-bound", {x});
  }
  // join/meet compatibility: a defined entry must be the sup/inf.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Elem j = a.jn(x, y);
      if (j != kUndef) {
        if (!a.le(x, j) || !a.le(y, j))
          return CheckResult::fail("join-upper-bound", {x, y, j});
        for (int c = 0; c < m; ++c)
          if (a.le(x, c) && a.le(y, c) && !a.le(j, c))
            return CheckResult::fail("join-least", {x, y, j, c});
      }
      Elem w = a.mt(x, y);
      if (w != kUndef) {
        if (!a.le(w, x) || !a.le(w, y))
          return CheckResult::fail("meet-lower-bound", {x, y, w});
        for (int c = 0; c < m; ++c)
          if (a.le(c, x) && a.le(c, y) && !a.le(c, w))
            return CheckResult::fail("meet-greatest", {x, y, w, c});
      }
    }
  return CheckResult::pass();
}

CheckResult check_unit_laws(const PartialAlgebra& a) {
  for (int x = 0; x < a.size; ++x) {
    if (a.ot(a.one, x) != x) return CheckResult::fail("left-unit", {x});
    if (a.ot(x, a.one) != x) return CheckResult::fail("right-unit", {x});
  }
  return CheckResult::pass();
}

CheckResult check_complement_laws(const PartialAlgebra& a) {
  for (int x = 0; x < a.size; ++x) {
    Elem n = a.ng(x);
    if (n == kUndef) return CheckResult::fail("neg-total", {x});
    if (a.jn(x, n) != a.top) return CheckResult::fail("excluded-middle", {x, n});
    if (a.mt(x, n) != a.bot) return CheckResult::fail("non-contradiction", {x, n});
  }
  return CheckResult::pass();
}

CheckResult check_total_residuation(const PartialAlgebra& a, bool require_total) {
  const int m = a.size;
  if (require_total && !a.tables_total())
    return CheckResult::fail("tables-total", {});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Elem p = a.ot(x, y);
      for (int z = 0; z < m; ++z) {
        Elem l = a.ld(x, z);
        Elem r = a.rd(z, y);
        if (p == kUndef || l == kUndef || r == kUndef) continue;
        bool v1 = a.le(p, z), v2 = a.le(y, l), v3 = a.le(x, r);
        if (v1 != v2) return CheckResult::fail("res-otimes-lol", {x, y, z});
        if (v1 != v3) return CheckResult::fail("res-otimes-lolinv", {x, y, z});
      }
    }
  return CheckResult::pass();
}

PartialAlgebra two_chain() { return boolean_powerset(1); }

PartialAlgebra boolean_powerset(int atoms) {
  if (atoms < 0 || atoms > 16) throw std::invalid_argument("boolean_powerset: bad atom count");
  const int m = 1 << atoms;
  const int full = m - 1;
  PartialAlgebra a = PartialAlgebra::empty_tables(m);
  a.bot = 0;
  a.top = full;
  a.one = full;
  for (int x = 0; x < m; ++x) {
    a.neg[x] = full & ~x;
    for (int y = 0; y < m; ++y) {
      a.leq[x * m + y] = (x & ~y) == 0;
      a.join[x * m + y] = x | y;
      a.meet[x * m + y] = x & y;
      a.otimes[x * m + y] = x & y;
      a.lol[x * m + y] = (full & ~x) | y;     // x \ y
      a.lolinv[x * m + y] = (full & ~y) | x;  // x / y
    }
  }
  return a;
}

void Valuation::assign(const Formula& f, Elem v) { by_key_[f.key()] = v; }

bool Valuation::has(const Formula& f) const { return by_key_.count(f.key()) != 0; }

Elem Valuation::eval(const Formula& f) const {
  auto it = by_key_.find(f.key());
  if (it != by_key_.end()) return it->second;
  const PartialAlgebra& a = *alg_;
  switch (f.kind()) {
    case FormulaKind::Var: return kUndef;
    case FormulaKind::One: return a.one;
    case FormulaKind::Top: return a.top;
    case FormulaKind::Bot: return a.bot;
    case FormulaKind::Neg: {
      Elem v = eval(f.child());
      return v == kUndef ? kUndef : a.ng(v);
    }
    default: break;
  }
  Elem l = eval(f.left()), r = eval(f.right());
  if (l == kUndef || r == kUndef) return kUndef;
  switch (f.kind()) {
    case FormulaKind::Otimes: return a.ot(l, r);
    case FormulaKind::Lol: return a.ld(l, r);
    case FormulaKind::Lolinv: return a.rd(l, r);
    case FormulaKind::Conj: return a.mt(l, r);
    case FormulaKind::Disj: return a.jn(l, r);
    default: throw std::logic_error("unreachable");
  }
}

Elem Valuation::eval(const Bunch& b) const {
  const PartialAlgebra& a = *alg_;
  switch (b.kind()) {
    case BunchKind::Leaf: return eval(b.formula());
    case BunchKind::Eps: return a.one;
    case BunchKind::Del: return a.top;
    case BunchKind::Comma: {
      Elem l = eval(b.left()), r = eval(b.right());
      return (l == kUndef || r == kUndef) ? kUndef : a.ot(l, r);
    }
    case BunchKind::Semi: {
      Elem l = eval(b.left()), r = eval(b.right());
      return (l == kUndef || r == kUndef) ? kUndef : a.mt(l, r);
    }
    case BunchKind::Hole:
      throw std::invalid_argument("eval: bunch contains a hole");
  }
  throw std::logic_error("unreachable");
}

Truth satisfies(const PartialAlgebra& a, const Valuation& mu, const Sequent& s) {
  Elem g = mu.eval(s.antecedent);
  Elem c = mu.eval(s.succedent);
  if (g == kUndef || c == kUndef) return Truth::Undefined;
  return a.le(g, c) ? Truth::True : Truth::False;
}

void for_each_valuation(const PartialAlgebra& a, const std::vector<std::string>& vars,
                        const std::function<bool(const Valuation&)>& fn) {
  const int m = a.size;
  std::vector<Elem> digits(vars.size(), 0);
  for (;;) {
    Valuation mu(a);
    for (std::size_t i = 0; i < vars.size(); ++i) mu.assign(Formula::var(vars[i]), digits[i]);
    if (!fn(mu)) return;
    int i = static_cast<int>(vars.size()) - 1;
    while (i >= 0 && digits[i] == m - 1) digits[i--] = 0;
    if (i < 0) return;
    ++digits[i];
  }
}

std::uint64_t valuation_count(const PartialAlgebra& a, std::size_t nvars) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < nvars; ++i) n *= static_cast<std::uint64_t>(a.size);
  return n;
}

std::set<Formula> closure_set(const std::vector<Sequent>& hypotheses, const Sequent& goal) {
  std::set<Formula> t;
  t.insert(Formula::one());
  t.insert(Formula::top());
  t.insert(Formula::bot());
  auto add = [&t](const Sequent& s) {
    for (const Formula& f : subformulas(s)) t.insert(f);
  };
  for (const Sequent& h : hypotheses) add(h);
  add(goal);
  return t;
}

RestrictResult restrict_to_partial(const PartialAlgebra& total,
                                   const std::set<Formula>& closed_set,
                                   const Valuation& mu) {
  if (!total.tables_total())
    throw std::invalid_argument("restrict_to_partial: input algebra must be total");
  for (const Formula& c : {Formula::one(), Formula::top(), Formula::bot()})
    if (!closed_set.count(c))
      throw std::invalid_argument("restrict_to_partial: closed set must contain 1, T, F");
  for (const Formula& f : closed_set)
    for (const Formula& sub : subformulas(f))
      if (!closed_set.count(sub))
        throw std::invalid_argument("restrict_to_partial: set not closed under subformulas");

  // Values of the set and their complements, deduplicated; F goes first.
  std::set<Elem> universe;
  std::map<std::string, Elem> value;  // formula key -> total-algebra element
  for (const Formula& f : closed_set) {
    Elem v = mu.eval(f);
    if (v == kUndef)
      throw std::invalid_argument("restrict_to_partial: valuation undefined on the set");
    value[f.key()] = v;
    universe.insert(v);
    universe.insert(total.ng(v));
  }
  std::vector<Elem> carrier(universe.begin(), universe.end());
  auto bot_it = std::find(carrier.begin(), carrier.end(), total.bot);
  std::rotate(carrier.begin(), bot_it, bot_it + 1);

  const int m = static_cast<int>(carrier.size());
  std::map<Elem, Elem> index;
  for (int i = 0; i < m; ++i) index[carrier[i]] = i;

  PartialAlgebra a = PartialAlgebra::empty_tables(m);
  a.bot = index.at(total.bot);
  a.top = index.at(total.top);
  a.one = index.at(mu.eval(Formula::one()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a.leq[i * m + j] = total.le(carrier[i], carrier[j]) ? 1 : 0;

  auto table_of = [&a](FormulaKind k) -> std::vector<Elem>& {
    switch (k) {
      case FormulaKind::Otimes: return a.otimes;
      case FormulaKind::Lol: return a.lol;
      case FormulaKind::Lolinv: return a.lolinv;
      case FormulaKind::Conj: return a.meet;
      case FormulaKind::Disj: return a.join;
      default: throw std::logic_error("unreachable");
    }
  };
  for (const Formula& f : closed_set) {
    if (!f.is_binary()) continue;
    Elem l = index.at(value.at(f.left().key()));
    Elem r = index.at(value.at(f.right().key()));
    table_of(f.kind())[l * m + r] = index.at(value.at(f.key()));
  }
  for (int i = 0; i < m; ++i) {
    a.otimes[a.one * m + i] = i;
    a.otimes[i * m + a.one] = i;
    Elem n = index.at(total.ng(carrier[i]));
    a.neg[i] = n;
    a.join[i * m + n] = a.top;
    a.meet[i * m + n] = a.bot;
  }

  std::vector<std::pair<Formula, Elem>> assignments;
  for (const Formula& f : closed_set)
    assignments.emplace_back(f, index.at(value.at(f.key())));
  return RestrictResult{std::move(a), std::move(assignments), std::move(carrier)};
}

}  // namespace bfnl
