#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bfnl/algebra.hpp"

namespace bfnl {

// Subset of an algebra's universe as a bitset; bit i = element i.
// Universe sizes are capped at 62 so subsets fit one word.
using FilterSet = std::uint64_t;
using FilterFamily = std::vector<FilterSet>;  // kept sorted ascending

inline bool fs_has(FilterSet s, Elem e) { return (s >> e) & 1u; }
std::vector<Elem> fs_elements(FilterSet s);

// Upward closed and closed under defined meets: a,b in F implies
// a & b in F or a & b undefined.
bool is_filter(const PartialAlgebra& a, FilterSet s);

// Primality via the complement test: proper and, for every a, exactly one
// of a, ~a belongs.  Assumes s is a filter and negation is total.
bool is_prime_filter(const PartialAlgebra& a, FilterSet s);

// Primality via the join-splitting condition: proper, contains T, and
// a | b in F implies a in F or b in F.  Kept as the cross-check twin of
// is_prime_filter; the two must agree on filters of Boolean algebras.
bool is_prime_filter_f3(const PartialAlgebra& a, FilterSet s);

// All prime filters, ascending by bitset value.
FilterFamily prime_filters(const PartialAlgebra& a);            // OpenMP kernel
FilterFamily prime_filters_reference(const PartialAlgebra& a);  // serial reference

FilterSet principal_upset(const PartialAlgebra& a, Elem x);
FilterSet principal_downset(const PartialAlgebra& a, Elem x);

// F_x = { y : exists w in F with w & x <= y }.  Requires the needed meets
// to be defined; throws otherwise.
FilterSet extend_filter(const PartialAlgebra& a, FilterSet f, Elem x);

// A prime filter containing a and excluding b, or nullopt iff a <= b.
// Finite-scale replacement for the separation lemma; scans prime filters
// in canonical order.
std::optional<FilterSet> separating_filter(const PartialAlgebra& a, Elem x, Elem y);

}  // namespace bfnl
