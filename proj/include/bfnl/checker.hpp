#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfnl/algebra.hpp"
#include "bfnl/filters.hpp"
#include "bfnl/frames.hpp"

namespace bfnl {

struct StepWitness {
  int step = 0;                   // 1..5
  std::string condition;          // violated law / condition name
  std::vector<Elem> elements;
  std::vector<FilterSet> filters;
  std::string detail;
};

struct CheckerVerdict {
  bool accepted = false;
  int failing_step = 0;  // 0 when accepted
  std::optional<StepWitness> witness;
  FilterFamily family;       // final family (accepted) or last nonempty one
  FilterFamily unit_family;  // members containing 1
  int iterations = 0;        // refinement sweeps executed
};

// Witness-existence conditions for one filter relative to a family.
// Product: every product landing in H has member filters producing it
// through the frame relation.
bool cond_m_otimes(const PartialAlgebra& a, FilterSet h, const FilterFamily& family,
                   StepWitness* w = nullptr);
// Left residual: a\b defined and outside G is witnessed by F containing a
// and H omitting b with F, G, H related.
bool cond_m_lol(const PartialAlgebra& a, FilterSet g, const FilterFamily& family,
                StepWitness* w = nullptr);
// Right residual: b/a defined and outside F is witnessed by G containing a
// and H omitting b with F, G, H related.
bool cond_m_lolinv(const PartialAlgebra& a, FilterSet f, const FilterFamily& family,
                   StepWitness* w = nullptr);
// Unit condition: F relates to itself through unit filters on both sides.
bool cond_m_one(const PartialAlgebra& a, FilterSet f, const FilterFamily& family,
                const FilterFamily& unit_family, StepWitness* w = nullptr);
// Separation: every strict non-order pair is split by a family member.
bool cond_separation(const PartialAlgebra& a, const FilterFamily& family,
                     StepWitness* w = nullptr);

enum class RefinePolicy { JacobiParallel, JacobiSerial, GaussSeidel };

// Greatest family of filters closed under the four witness conditions,
// computed by iterated removal.  The Jacobi policies evaluate each sweep
// against the previous family (parallelizable, order-independent); the
// Gauss-Seidel policy removes eagerly.  All three reach the same fixpoint.
FilterFamily refine_family(const PartialAlgebra& a, FilterFamily family, RefinePolicy policy,
                           int* iterations = nullptr, StepWitness* last_removed = nullptr);

// Full recognition procedure for partial residuated Boolean algebras:
// order/bounds/lattice compatibility, unit laws, complement laws, the
// filter-family fixpoint, and separation.
CheckerVerdict check_partial_rba(const PartialAlgebra& a,
                                 RefinePolicy policy = RefinePolicy::JacobiParallel);

struct AcceptanceCertificate {
  ResiduatedFrame frame;             // over the final family
  FilterFamily family;
  std::vector<std::uint64_t> iota;   // element -> mask over the family
  CheckResult frame_check;
  CheckResult embedding_check;
};

// Certificate for an accepted structure: the frame over the final family,
// the canonical map into its complex algebra, and the embedding
// verification.  Throws logic_error if verification fails, since acceptance
// guarantees the embedding exists.
AcceptanceCertificate certify_acceptance(const PartialAlgebra& a, const CheckerVerdict& v);

}  // namespace bfnl
