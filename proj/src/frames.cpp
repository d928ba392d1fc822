#include "bfnl/frames.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bfnl {

std::uint64_t ResiduatedFrame::rel_mask() const {
  if (points * points * points > 64)
    throw std::invalid_argument("rel_mask: relation does not fit one word");
  std::uint64_t mask = 0;
  for (int x = 0; x < points; ++x)
    for (int y = 0; y < points; ++y)
      for (int z = 0; z < points; ++z)
        if (relates(x, y, z)) mask |= std::uint64_t{1} << ((x * points + y) * points + z);
  return mask;
}

ResiduatedFrame ResiduatedFrame::from_rel_mask(int k, std::uint64_t unit, std::uint64_t mask) {
  ResiduatedFrame f;
  f.points = k;
  f.unit = unit;
  f.rel.assign(std::size_t(k) * k, 0);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        if ((mask >> ((x * k + y) * k + z)) & 1u)
          f.rel[x * k + y] |= std::uint64_t{1} << z;
  return f;
}

CheckResult check_frame(const ResiduatedFrame& f) {
  const int k = f.points;
  // Collapse law first: cheap and independent of coverage.
  for (int y = 0; y < k; ++y) {
    if (!((f.unit >> y) & 1u)) continue;
    for (int x = 0; x < k; ++x)
      for (int z = 0; z < k; ++z) {
        if (x == z) continue;
        if (f.relates(x, y, z)) return CheckResult::fail("unit-collapse", {x, y, z});
        if (f.relates(y, x, z)) return CheckResult::fail("unit-collapse", {y, x, z});
      }
  }
  for (int x = 0; x < k; ++x) {
    bool right = false, left = false;
    for (int y = 0; y < k; ++y) {
      if (!((f.unit >> y) & 1u)) continue;
      right = right || f.relates(x, y, x);
      left = left || f.relates(y, x, x);
    }
    if (!right || !left) return CheckResult::fail("unit-coverage", {x});
  }
  return CheckResult::pass();
}

std::uint64_t cx_otimes(const ResiduatedFrame& f, std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  for (int i = 0; i < f.points; ++i) {
    if (!((x >> i) & 1u)) continue;
    for (int j = 0; j < f.points; ++j)
      if ((y >> j) & 1u) out |= f.rel_row(i, j);
  }
  return out;
}

std::uint64_t cx_lol(const ResiduatedFrame& f, std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  for (int j = 0; j < f.points; ++j) {
    bool in = true;
    for (int i = 0; i < f.points && in; ++i)
      if ((x >> i) & 1u) in = (f.rel_row(i, j) & ~y) == 0;
    if (in) out |= std::uint64_t{1} << j;
  }
  return out;
}

std::uint64_t cx_lolinv(const ResiduatedFrame& f, std::uint64_t y, std::uint64_t x) {
  std::uint64_t out = 0;
  for (int i = 0; i < f.points; ++i) {
    bool in = true;
    for (int j = 0; j < f.points && in; ++j)
      if ((x >> j) & 1u) in = (f.rel_row(i, j) & ~y) == 0;
    if (in) out |= std::uint64_t{1} << i;
  }
  return out;
}

std::uint64_t cx_eval(const ResiduatedFrame& f,
                      const std::map<std::string, std::uint64_t>& vars, const Formula& fm) {
  switch (fm.kind()) {
    case FormulaKind::Var: return vars.at(fm.var_name());
    case FormulaKind::One: return f.unit;
    case FormulaKind::Top: return f.full();
    case FormulaKind::Bot: return 0;
    case FormulaKind::Neg: return f.full() & ~cx_eval(f, vars, fm.child());
    case FormulaKind::Otimes:
      return cx_otimes(f, cx_eval(f, vars, fm.left()), cx_eval(f, vars, fm.right()));
    case FormulaKind::Lol:
      return cx_lol(f, cx_eval(f, vars, fm.left()), cx_eval(f, vars, fm.right()));
    case FormulaKind::Lolinv:
      return cx_lolinv(f, cx_eval(f, vars, fm.left()), cx_eval(f, vars, fm.right()));
    case FormulaKind::Conj:
      return cx_eval(f, vars, fm.left()) & cx_eval(f, vars, fm.right());
    case FormulaKind::Disj:
      return cx_eval(f, vars, fm.left()) | cx_eval(f, vars, fm.right());
  }
  throw std::logic_error("unreachable");
}

std::uint64_t cx_eval(const ResiduatedFrame& f,
                      const std::map<std::string, std::uint64_t>& vars, const Bunch& b) {
  switch (b.kind()) {
    case BunchKind::Leaf: return cx_eval(f, vars, b.formula());
    case BunchKind::Eps: return f.unit;
    case BunchKind::Del: return f.full();
    case BunchKind::Comma:
      return cx_otimes(f, cx_eval(f, vars, b.left()), cx_eval(f, vars, b.right()));
    case BunchKind::Semi:
      return cx_eval(f, vars, b.left()) & cx_eval(f, vars, b.right());
    case BunchKind::Hole:
      throw std::invalid_argument("cx_eval: bunch contains a hole");
  }
  throw std::logic_error("unreachable");
}

PartialAlgebra complex_algebra(const ResiduatedFrame& f) {
  if (f.points > 4)
    throw std::invalid_argument("complex_algebra: materialization limited to 4 points");
  const int m = 1 << f.points;
  const std::uint64_t full = f.full();
  PartialAlgebra a = PartialAlgebra::empty_tables(m);
  a.bot = 0;
  a.top = static_cast<Elem>(full);
  a.one = static_cast<Elem>(f.unit);
  for (int x = 0; x < m; ++x) {
    a.neg[x] = static_cast<Elem>(full & ~static_cast<std::uint64_t>(x));
    for (int y = 0; y < m; ++y) {
      a.leq[x * m + y] = (x & ~y) == 0;
      a.join[x * m + y] = x | y;
      a.meet[x * m + y] = x & y;
      a.otimes[x * m + y] = static_cast<Elem>(cx_otimes(f, x, y));
      a.lol[x * m + y] = static_cast<Elem>(cx_lol(f, x, y));
      a.lolinv[x * m + y] = static_cast<Elem>(cx_lolinv(f, x, y));
    }
  }
  return a;
}

bool filters_relate(const PartialAlgebra& a, FilterSet f, FilterSet g, FilterSet h) {
  const int m = a.size;
  for (int x = 0; x < m; ++x) {
    if (!fs_has(f, x)) continue;
    for (int y = 0; y < m; ++y) {
      if (!fs_has(g, y)) continue;
      Elem p = a.ot(x, y);
      if (p != kUndef && !fs_has(h, p)) return false;
    }
  }
  for (int x = 0; x < m; ++x) {
    if (!fs_has(f, x)) continue;
    for (int y = 0; y < m; ++y) {
      Elem l = a.ld(x, y);
      if (l != kUndef && fs_has(g, l) && !fs_has(h, y)) return false;
    }
  }
  for (int x = 0; x < m; ++x) {
    if (!fs_has(g, x)) continue;
    for (int y = 0; y < m; ++y) {
      Elem r = a.rd(y, x);  // y / x
      if (r != kUndef && fs_has(f, r) && !fs_has(h, y)) return false;
    }
  }
  return true;
}

ResiduatedFrame associated_frame(const PartialAlgebra& a, const FilterFamily& family) {
  const int k = static_cast<int>(family.size());
  if (k > 62) throw std::invalid_argument("associated_frame: family too large");
  ResiduatedFrame f;
  f.points = k;
  f.rel.assign(std::size_t(k) * k, 0);
  for (int i = 0; i < k; ++i)
    if (fs_has(family[i], a.one)) f.unit |= std::uint64_t{1} << i;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        if (filters_relate(a, family[x], family[y], family[z]))
          f.rel[x * k + y] |= std::uint64_t{1} << z;
  return f;
}

std::vector<std::uint64_t> iota_map(const PartialAlgebra& a, const FilterFamily& family) {
  std::vector<std::uint64_t> iota(a.size, 0);
  for (Elem x = 0; x < a.size; ++x)
    for (std::size_t i = 0; i < family.size(); ++i)
      if (fs_has(family[i], x)) iota[x] |= std::uint64_t{1} << i;
  return iota;
}

template <typename View>
CheckResult verify_embedding(const PartialAlgebra& src, const View& dst,
                             const std::vector<typename View::Element>& iota) {
  const int m = src.size;
  if (static_cast<int>(iota.size()) != m) return CheckResult::fail("iota-size", {});
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (iota[x] == iota[y]) return CheckResult::fail("injectivity", {x, y});
  if (iota[src.one] != dst.one()) return CheckResult::fail("constant-one", {src.one});
  if (iota[src.top] != dst.top()) return CheckResult::fail("constant-top", {src.top});
  if (iota[src.bot] != dst.bot()) return CheckResult::fail("constant-bot", {src.bot});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      bool lhs = src.le(x, y);
      bool rhs = dst.le(iota[x], iota[y]);
      if (lhs != rhs) return CheckResult::fail("order-reflection", {x, y});
    }
  for (int x = 0; x < m; ++x) {
    Elem n = src.ng(x);
    if (n != kUndef && dst.ng(iota[x]) != iota[n]) return CheckResult::fail("preserve-neg", {x});
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Elem v;
      if ((v = src.ot(x, y)) != kUndef && dst.ot(iota[x], iota[y]) != iota[v])
        return CheckResult::fail("preserve-otimes", {x, y});
      if ((v = src.ld(x, y)) != kUndef && dst.ld(iota[x], iota[y]) != iota[v])
        return CheckResult::fail("preserve-lol", {x, y});
      if ((v = src.rd(x, y)) != kUndef && dst.rd(iota[x], iota[y]) != iota[v])
        return CheckResult::fail("preserve-lolinv", {x, y});
      if ((v = src.jn(x, y)) != kUndef && dst.jn(iota[x], iota[y]) != iota[v])
        return CheckResult::fail("preserve-join", {x, y});
      if ((v = src.mt(x, y)) != kUndef && dst.mt(iota[x], iota[y]) != iota[v])
        return CheckResult::fail("preserve-meet", {x, y});
    }
  return CheckResult::pass();
}

template CheckResult verify_embedding<AlgebraView>(const PartialAlgebra&, const AlgebraView&,
                                                   const std::vector<Elem>&);
template CheckResult verify_embedding<ComplexAlgebraView>(const PartialAlgebra&,
                                                          const ComplexAlgebraView&,
                                                          const std::vector<std::uint64_t>&);

namespace {

// Triple index in the flat relation mask.
inline int tidx(int k, int x, int y, int z) { return (x * k + y) * k + z; }

// Triples not immediately ruled out by the collapse law for the given units.
std::uint64_t allowed_mask(int k, std::uint64_t unit) {
  std::uint64_t mask = 0;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) {
        bool bad = (((unit >> y) & 1u) && x != z) || (((unit >> x) & 1u) && y != z);
        if (!bad) mask |= std::uint64_t{1} << tidx(k, x, y, z);
      }
  return mask;
}

std::uint64_t canonical_relabel_key(const ResiduatedFrame& f, std::uint64_t* unit_out) {
  const int k = f.points;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best_rel = ~std::uint64_t{0};
  std::uint64_t best_unit = ~std::uint64_t{0};
  do {
    std::uint64_t u = 0, r = 0;
    for (int i = 0; i < k; ++i)
      if ((f.unit >> i) & 1u) u |= std::uint64_t{1} << perm[i];
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        for (int z = 0; z < k; ++z)
          if (f.relates(x, y, z))
            r |= std::uint64_t{1} << tidx(k, perm[x], perm[y], perm[z]);
    if (u < best_unit || (u == best_unit && r < best_rel)) {
      best_unit = u;
      best_rel = r;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  *unit_out = best_unit;
  return best_rel;
}

}  // namespace

std::vector<ResiduatedFrame> enumerate_frames(int k, bool unital, bool prune_isomorphic) {
  if (k < 1) throw std::invalid_argument("enumerate_frames: size must be positive");
  if (k > 3) throw std::invalid_argument("enumerate_frames: sizes above 3 are not supported");
  if (!unital && k > 2)
    throw std::invalid_argument("enumerate_frames: non-unital mode limited to 2 points");
  std::vector<ResiduatedFrame> out;
  const std::uint64_t unit_end = std::uint64_t{1} << k;
  for (std::uint64_t unit = unital ? 1 : 0; unit < (unital ? unit_end : 1); ++unit) {
    const std::uint64_t allowed = allowed_mask(k, unit);
    // Subsets of the allowed mask in ascending numeric order.
    std::uint64_t rel = 0;
    for (;;) {
      ResiduatedFrame f = ResiduatedFrame::from_rel_mask(k, unit, rel);
      if (!unital || check_frame(f)) out.push_back(std::move(f));
      rel = (rel - allowed) & allowed;
      if (rel == 0) break;
    }
  }
  if (prune_isomorphic) {
    std::vector<ResiduatedFrame> pruned;
    for (const ResiduatedFrame& f : out) {
      std::uint64_t cu = 0;
      std::uint64_t cr = canonical_relabel_key(f, &cu);
      if (cu == f.unit && cr == f.rel_mask()) pruned.push_back(f);
    }
    return pruned;
  }
  return out;
}

std::vector<ResiduatedFrame> enumerate_unital_frames(int k, bool prune_isomorphic) {
  return enumerate_frames(k, true, prune_isomorphic);
}

}  // namespace bfnl
