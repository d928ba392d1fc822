#include "bfnl/filters.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfnl {

std::vector<Elem> fs_elements(FilterSet s) {
  std::vector<Elem> out;
  for (Elem e = 0; s; ++e, s >>= 1)
    if (s & 1u) out.push_back(e);
  return out;
}

bool is_filter(const PartialAlgebra& a, FilterSet s) {
  const int m = a.size;
  for (int x = 0; x < m; ++x) {
    if (!fs_has(s, x)) continue;
    for (int y = 0; y < m; ++y) {
      if (a.le(x, y) && !fs_has(s, y)) return false;  // (F1)
      if (!fs_has(s, y)) continue;
      Elem w = a.mt(x, y);
      if (w != kUndef && !fs_has(s, w)) return false;  // (F2')
    }
  }
  return true;
}

bool is_prime_filter(const PartialAlgebra& a, FilterSet s) {
  const FilterSet universe = (FilterSet{1} << a.size) - 1;
  if (s == universe) return false;  // proper
  for (int x = 0; x < a.size; ++x) {
    Elem n = a.ng(x);
    if (n == kUndef) return false;
    if (fs_has(s, n) == fs_has(s, x)) return false;  // (FB)
  }
  return true;
}

bool is_prime_filter_f3(const PartialAlgebra& a, FilterSet s) {
  const FilterSet universe = (FilterSet{1} << a.size) - 1;
  if (s == universe || !fs_has(s, a.top)) return false;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) {
      Elem j = a.jn(x, y);
      if (j != kUndef && fs_has(s, j) && !fs_has(s, x) && !fs_has(s, y)) return false;
    }
  return true;
}

namespace {

void check_width(const PartialAlgebra& a) {
  if (a.size > 62) throw std::invalid_argument("filter enumeration: universe too large");
}

}  // namespace

FilterFamily prime_filters_reference(const PartialAlgebra& a) {
  check_width(a);
  FilterFamily out;
  const FilterSet end = FilterSet{1} << a.size;
  for (FilterSet s = 0; s < end; ++s)
    if (is_filter(a, s) && is_prime_filter(a, s)) out.push_back(s);
  return out;
}

FilterFamily prime_filters(const PartialAlgebra& a) {
  check_width(a);
  const long long end = 1ll << a.size;
  if (end <= 1024) return prime_filters_reference(a);
#ifndef _OPENMP
  return prime_filters_reference(a);
#else
  // Partition the subset range into ascending chunks; concatenating the
  // per-chunk results in chunk order restores the canonical ordering.
  const long long chunks = 64;
  const long long step = (end + chunks - 1) / chunks;
  std::vector<FilterFamily> partial(chunks);
#pragma omp parallel for schedule(dynamic)
  for (long long c = 0; c < chunks; ++c) {
    const long long lo = c * step;
    const long long hi = std::min(end, lo + step);
    for (long long s = lo; s < hi; ++s) {
      FilterSet fs = static_cast<FilterSet>(s);
      if (is_filter(a, fs) && is_prime_filter(a, fs)) partial[c].push_back(fs);
    }
  }
  FilterFamily out;
  for (const FilterFamily& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
#endif
}

FilterSet principal_upset(const PartialAlgebra& a, Elem x) {
  FilterSet s = 0;
  for (int y = 0; y < a.size; ++y)
    if (a.le(x, y)) s |= FilterSet{1} << y;
  return s;
}

FilterSet principal_downset(const PartialAlgebra& a, Elem x) {
  FilterSet s = 0;
  for (int y = 0; y < a.size; ++y)
    if (a.le(y, x)) s |= FilterSet{1} << y;
  return s;
}

FilterSet extend_filter(const PartialAlgebra& a, FilterSet f, Elem x) {
  FilterSet out = 0;
  for (int y = 0; y < a.size; ++y) {
    bool in = false;
    for (int w = 0; w < a.size && !in; ++w) {
      if (!fs_has(f, w)) continue;
      Elem wx = a.mt(w, x);
      if (wx == kUndef) throw std::invalid_argument("extend_filter: undefined meet");
      if (a.le(wx, y)) in = true;
    }
    if (in) out |= FilterSet{1} << y;
  }
  return out;
}

std::optional<FilterSet> separating_filter(const PartialAlgebra& a, Elem x, Elem y) {
  if (a.le(x, y)) return std::nullopt;
  for (FilterSet f : prime_filters_reference(a))
    if (fs_has(f, x) && !fs_has(f, y)) return f;
  return std::nullopt;
}

}  // namespace bfnl
