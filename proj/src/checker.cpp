#include "bfnl/checker.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfnl {

namespace {

// Shared implementation of the four witness conditions, parameterized over
// the relation test so the fixpoint can swap in a precomputed cube.
template <typename Relate>
bool m_otimes_impl(const PartialAlgebra& a, int hi, const FilterFamily& family,
                   const std::vector<int>& idx, const Relate& relate, StepWitness* w) {
  FilterSet h = family[hi];
  const int m = a.size;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Elem p = a.ot(x, y);
      if (p == kUndef || !fs_has(h, p)) continue;
      bool found = false;
      for (std::size_t fi = 0; fi < idx.size() && !found; ++fi) {
        if (!fs_has(family[idx[fi]], x)) continue;
        for (std::size_t gi = 0; gi < idx.size() && !found; ++gi)
          if (fs_has(family[idx[gi]], y) && relate(idx[fi], idx[gi], hi)) found = true;
      }
      if (!found) {
        if (w) *w = {4, "m-otimes", {x, y}, {h}, "no witness pair produces x*y in H"};
        return false;
      }
    }
  return true;
}

template <typename Relate>
bool m_lol_impl(const PartialAlgebra& a, int gi, const FilterFamily& family,
                const std::vector<int>& idx, const Relate& relate, StepWitness* w) {
  FilterSet g = family[gi];
  const int m = a.size;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Elem l = a.ld(x, y);
      if (l == kUndef || fs_has(g, l)) continue;
      bool found = false;
      for (std::size_t fi = 0; fi < idx.size() && !found; ++fi) {
        if (!fs_has(family[idx[fi]], x)) continue;
        for (std::size_t hi = 0; hi < idx.size() && !found; ++hi)
          if (!fs_has(family[idx[hi]], y) && relate(idx[fi], gi, idx[hi])) found = true;
      }
      if (!found) {
        if (w) *w = {4, "m-lol", {x, y}, {g}, "no witnesses for x\\y outside G"};
        return false;
      }
    }
  return true;
}

template <typename Relate>
bool m_lolinv_impl(const PartialAlgebra& a, int fi, const FilterFamily& family,
                   const std::vector<int>& idx, const Relate& relate, StepWitness* w) {
  FilterSet f = family[fi];
  const int m = a.size;
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x) {
      Elem r = a.rd(y, x);  // y / x
      if (r == kUndef || fs_has(f, r)) continue;
      bool found = false;
      for (std::size_t gi = 0; gi < idx.size() && !found; ++gi) {
        if (!fs_has(family[idx[gi]], x)) continue;
        for (std::size_t hi = 0; hi < idx.size() && !found; ++hi)
          if (!fs_has(family[idx[hi]], y) && relate(fi, idx[gi], idx[hi])) found = true;
      }
      if (!found) {
        if (w) *w = {4, "m-lolinv", {y, x}, {f}, "no witnesses for y/x outside F"};
        return false;
      }
    }
  return true;
}

template <typename Relate>
bool m_one_impl(int fi, const FilterFamily& family, const std::vector<int>& unit_idx,
                const Relate& relate, StepWitness* w) {
  bool right = false, left = false;
  for (int ui : unit_idx) {
    right = right || relate(fi, ui, fi);
    left = left || relate(ui, fi, fi);
    if (right && left) return true;
  }
  if (w) *w = {4, "m-one", {}, {family[fi]}, "no unit filters relate F to itself"};
  return false;
}

std::vector<int> all_indices(std::size_t n) {
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  return idx;
}

int index_of(const FilterFamily& family, FilterSet s) {
  auto it = std::find(family.begin(), family.end(), s);
  if (it == family.end()) throw std::invalid_argument("filter is not in the family");
  return static_cast<int>(it - family.begin());
}

}  // namespace

bool cond_m_otimes(const PartialAlgebra& a, FilterSet h, const FilterFamily& family,
                   StepWitness* w) {
  auto relate = [&](int x, int y, int z) {
    return filters_relate(a, family[x], family[y], family[z]);
  };
  return m_otimes_impl(a, index_of(family, h), family, all_indices(family.size()), relate, w);
}

bool cond_m_lol(const PartialAlgebra& a, FilterSet g, const FilterFamily& family,
                StepWitness* w) {
  auto relate = [&](int x, int y, int z) {
    return filters_relate(a, family[x], family[y], family[z]);
  };
  return m_lol_impl(a, index_of(family, g), family, all_indices(family.size()), relate, w);
}

bool cond_m_lolinv(const PartialAlgebra& a, FilterSet f, const FilterFamily& family,
                   StepWitness* w) {
  auto relate = [&](int x, int y, int z) {
    return filters_relate(a, family[x], family[y], family[z]);
  };
  return m_lolinv_impl(a, index_of(family, f), family, all_indices(family.size()), relate, w);
}

bool cond_m_one(const PartialAlgebra& a, FilterSet f, const FilterFamily& family,
                const FilterFamily& unit_family, StepWitness* w) {
  auto relate = [&](int x, int y, int z) {
    return filters_relate(a, family[x], family[y], family[z]);
  };
  std::vector<int> unit_idx;
  for (FilterSet u : unit_family) unit_idx.push_back(index_of(family, u));
  return m_one_impl(index_of(family, f), family, unit_idx, relate, w);
}

bool cond_separation(const PartialAlgebra& a, const FilterFamily& family, StepWitness* w) {
  for (Elem x = 0; x < a.size; ++x)
    for (Elem y = 0; y < a.size; ++y) {
      if (a.le(x, y)) continue;
      bool separated = false;
      for (FilterSet f : family)
        if (fs_has(f, x) && !fs_has(f, y)) {
          separated = true;
          break;
        }
      if (!separated) {
        if (w) *w = {5, "separation", {x, y}, {}, "no family member contains x and omits y"};
        return false;
      }
    }
  return true;
}

namespace {

// Relation cube over a fixed starting family; refinement only shrinks the
// family, so entries stay valid across sweeps.
class RelCube {
 public:
  RelCube(const PartialAlgebra& a, const FilterFamily& family) : n_(family.size()) {
    cube_.assign(n_ * n_ * n_, 0);
    const long long total = static_cast<long long>(n_) * n_ * n_;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long t = 0; t < total; ++t) {
      std::size_t x = t / (n_ * n_), rest = t % (n_ * n_);
      cube_[t] = filters_relate(a, family[x], family[rest / n_], family[rest % n_]) ? 1 : 0;
    }
  }
  bool operator()(int x, int y, int z) const { return cube_[(x * n_ + y) * n_ + z] != 0; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cube_;
};

}  // namespace

FilterFamily refine_family(const PartialAlgebra& a, FilterFamily family, RefinePolicy policy,
                           int* iterations, StepWitness* last_removed) {
  if (iterations) *iterations = 0;
  if (family.empty()) return family;
  const FilterFamily base = family;
  RelCube cube(a, base);
  std::vector<int> alive = all_indices(base.size());

  auto survives = [&](int i, const std::vector<int>& idx, StepWitness* w) {
    std::vector<int> unit_idx;
    for (int j : idx)
      if (fs_has(base[j], a.one)) unit_idx.push_back(j);
    return m_otimes_impl(a, i, base, idx, cube, w) && m_lol_impl(a, i, base, idx, cube, w) &&
           m_lolinv_impl(a, i, base, idx, cube, w) && m_one_impl(i, base, unit_idx, cube, w);
  };

  if (policy == RefinePolicy::GaussSeidel) {
    bool changed = true;
    while (changed && !alive.empty()) {
      changed = false;
      if (iterations) ++*iterations;
      for (std::size_t p = 0; p < alive.size();) {
        StepWitness w;
        if (!survives(alive[p], alive, &w)) {
          w.filters.insert(w.filters.begin(), base[alive[p]]);
          if (last_removed) *last_removed = w;
          alive.erase(alive.begin() + p);
          changed = true;
        } else {
          ++p;
        }
      }
    }
  } else {
    bool changed = true;
    while (changed && !alive.empty()) {
      changed = false;
      if (iterations) ++*iterations;
      std::vector<std::uint8_t> keep(alive.size(), 1);
      const bool parallel = policy == RefinePolicy::JacobiParallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
      for (long long p = 0; p < static_cast<long long>(alive.size()); ++p)
        keep[p] = survives(alive[p], alive, nullptr) ? 1 : 0;
      (void)parallel;
      std::vector<int> next;
      for (std::size_t p = 0; p < alive.size(); ++p) {
        if (keep[p]) {
          next.push_back(alive[p]);
        } else if (last_removed) {
          StepWitness w;
          survives(alive[p], alive, &w);  // recompute for the witness
          w.filters.insert(w.filters.begin(), base[alive[p]]);
          *last_removed = w;
          last_removed = nullptr;  // keep the first of this sweep
        }
      }
      changed = next.size() != alive.size();
      alive = std::move(next);
    }
  }

  FilterFamily out;
  for (int i : alive) out.push_back(base[i]);
  return out;
}

CheckerVerdict check_partial_rba(const PartialAlgebra& a, RefinePolicy policy) {
  CheckerVerdict v;
  auto reject = [&](int step, const CheckResult& r) {
    v.accepted = false;
    v.failing_step = step;
    StepWitness w;
    w.step = step;
    if (r.violation) {
      w.condition = r.violation->rule;
      w.elements = r.violation->elems;
      w.detail = r.violation->detail;
    }
    v.witness = w;
    return v;
  };

  if (CheckResult r = check_order_and_lattice(a); !r) return reject(1, r);
  if (CheckResult r = check_unit_laws(a); !r) return reject(2, r);
  if (CheckResult r = check_complement_laws(a); !r) return reject(3, r);

  FilterFamily start = prime_filters(a);
  if (start.empty()) {
    v.accepted = false;
    v.failing_step = 4;
    v.witness = StepWitness{4, "empty-family", {}, {}, "structure has no prime filters"};
    return v;
  }
  StepWitness removed;
  int sweeps = 0;
  FilterFamily fixed = refine_family(a, start, policy, &sweeps, &removed);
  v.iterations = sweeps;
  if (fixed.empty()) {
    v.accepted = false;
    v.failing_step = 4;
    v.witness = removed;
    return v;
  }
  v.family = fixed;
  for (FilterSet f : fixed)
    if (fs_has(f, a.one)) v.unit_family.push_back(f);

  StepWitness sep;
  if (!cond_separation(a, fixed, &sep)) {
    v.accepted = false;
    v.failing_step = 5;
    v.witness = sep;
    return v;
  }
  v.accepted = true;
  return v;
}

AcceptanceCertificate certify_acceptance(const PartialAlgebra& a, const CheckerVerdict& v) {
  if (!v.accepted) throw std::invalid_argument("certify_acceptance: verdict not accepted");
  AcceptanceCertificate cert;
  cert.family = v.family;
  cert.frame = associated_frame(a, v.family);
  cert.frame_check = check_frame(cert.frame);
  cert.iota = iota_map(a, v.family);
  ComplexAlgebraView view{&cert.frame};
  cert.embedding_check = verify_embedding(a, view, cert.iota);
  if (!cert.frame_check || !cert.embedding_check)
    throw std::logic_error("certify_acceptance: accepted structure failed certification");
  return cert;
}

}  // namespace bfnl
