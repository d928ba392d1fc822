#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bfnl/algebra.hpp"
#include "bfnl/filters.hpp"

namespace bfnl {

// Residuated frame (P, I, R): P indexed 0..points-1, I a subset, R a
// ternary relation stored per (x, y) as the mask of related z.
struct ResiduatedFrame {
  int points = 0;
  std::uint64_t unit = 0;                // mask over P
  std::vector<std::uint64_t> rel;        // rel[x*points+y] = mask of z

  bool relates(int x, int y, int z) const { return (rel[x * points + y] >> z) & 1u; }
  std::uint64_t rel_row(int x, int y) const { return rel[x * points + y]; }
  std::uint64_t full() const { return (std::uint64_t{1} << points) - 1; }

  // Flat relation bitmask in (x, y, z) index order; needs points^3 <= 64.
  std::uint64_t rel_mask() const;
  static ResiduatedFrame from_rel_mask(int k, std::uint64_t unit, std::uint64_t mask);
};

// Frame laws: the unit coverage law (every x is R(x,i,x) and R(j,x,x) for
// some units i, j) and the unit collapse law (R(x,y,z) or R(y,x,z) with
// y a unit forces x = z).  The three reflexivity-style laws from the
// definition hold by pure logic and are not represented.
CheckResult check_frame(const ResiduatedFrame& f);

// Complex-algebra operations on subsets of P, computed from the relation.
std::uint64_t cx_otimes(const ResiduatedFrame& f, std::uint64_t x, std::uint64_t y);
std::uint64_t cx_lol(const ResiduatedFrame& f, std::uint64_t x, std::uint64_t y);     // x \ y
std::uint64_t cx_lolinv(const ResiduatedFrame& f, std::uint64_t y, std::uint64_t x);  // y / x

// Evaluation of formulas and bunches in the complex algebra of a frame,
// with variables mapped to subsets of P.  Total, so never undefined.
std::uint64_t cx_eval(const ResiduatedFrame& f,
                      const std::map<std::string, std::uint64_t>& vars, const Formula& fm);
std::uint64_t cx_eval(const ResiduatedFrame& f,
                      const std::map<std::string, std::uint64_t>& vars, const Bunch& b);

// Materialized complex algebra: 2^points elements, element index = subset
// mask.  Only for small frames (points <= 4).
PartialAlgebra complex_algebra(const ResiduatedFrame& f);

// The three-clause relation between filters of a partial algebra:
//   (a in F, b in G)            =>  a*b in H or a*b undefined
//   (a in F, a\b in G defined)  =>  b in H
//   (b/a in F defined, a in G)  =>  b in H
bool filters_relate(const PartialAlgebra& a, FilterSet f, FilterSet g, FilterSet h);

// Frame over a family of prime filters: units are the filters containing 1,
// the relation is filters_relate.
ResiduatedFrame associated_frame(const PartialAlgebra& a, const FilterFamily& family);

// Canonical map into the complex algebra of the associated frame:
// element x goes to the mask of family members containing x.
std::vector<std::uint64_t> iota_map(const PartialAlgebra& a, const FilterFamily& family);

// Views presenting a total algebra through one interface so embeddings can
// be verified against either explicit tables or a frame's powerset algebra.
struct AlgebraView {
  using Element = Elem;
  const PartialAlgebra* a;
  bool le(Element x, Element y) const { return a->le(x, y); }
  Element ot(Element x, Element y) const { return a->ot(x, y); }
  Element ld(Element x, Element y) const { return a->ld(x, y); }
  Element rd(Element x, Element y) const { return a->rd(x, y); }
  Element jn(Element x, Element y) const { return a->jn(x, y); }
  Element mt(Element x, Element y) const { return a->mt(x, y); }
  Element ng(Element x) const { return a->ng(x); }
  Element one() const { return a->one; }
  Element top() const { return a->top; }
  Element bot() const { return a->bot; }
};

struct ComplexAlgebraView {
  using Element = std::uint64_t;
  const ResiduatedFrame* f;
  bool le(Element x, Element y) const { return (x & ~y) == 0; }
  Element ot(Element x, Element y) const { return cx_otimes(*f, x, y); }
  Element ld(Element x, Element y) const { return cx_lol(*f, x, y); }
  Element rd(Element x, Element y) const { return cx_lolinv(*f, x, y); }
  Element jn(Element x, Element y) const { return x | y; }
  Element mt(Element x, Element y) const { return x & y; }
  Element ng(Element x) const { return f->full() & ~x; }
  Element one() const { return f->unit; }
  Element top() const { return f->full(); }
  Element bot() const { return 0; }
};

// Embedding of a partial algebra into a total one presented as a view:
// injective, preserves constants and every defined operation entry, and
// reflects the order in both directions.
template <typename View>
CheckResult verify_embedding(const PartialAlgebra& src, const View& dst,
                             const std::vector<typename View::Element>& iota);

// All frames of a given size passing the frame laws, ordered by
// (unit mask, relation mask) ascending.  In non-unital mode the unit set is
// empty and the coverage law is waived.  Sizes above 3 are refused: the
// relation space at k = 4 already exceeds 2^36 candidates per unit set.
std::vector<ResiduatedFrame> enumerate_frames(int k, bool unital,
                                              bool prune_isomorphic = false);
std::vector<ResiduatedFrame> enumerate_unital_frames(int k, bool prune_isomorphic = false);

}  // namespace bfnl
