#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfnl/algebra.hpp"
#include "bfnl/checker.hpp"
#include "bfnl/frames.hpp"
#include "bfnl/prover.hpp"

namespace bfnl {

struct DecisionConfig {
  int kmax = 2;             // frame-countermodel search cap
  int prover_depth = 30;
  int bunch_cap_factor = 2;
  bool paper_faithful = false;  // also run the table-enumeration refuter
  int size_cap = 3;             // universe cap for the table enumeration
  bool cross_check = false;     // run the refuter even after a proof is found
};

// Countermodel in the complex algebra of a frame; variables map to subsets.
struct FrameCountermodel {
  ResiduatedFrame frame;
  std::map<std::string, std::uint64_t> valuation;
};

// Countermodel as an explicit accepted partial algebra.
struct AlgebraCountermodel {
  PartialAlgebra algebra;
  std::map<std::string, Elem> valuation;
};

struct EngineStats {
  std::uint64_t frames_checked = 0;
  std::uint64_t structures_checked = 0;
  std::uint64_t filters_checked = 0;
  std::uint64_t prover_nodes = 0;
};

struct Verdict {
  enum class Kind { Provable, Refuted, Unknown } kind = Kind::Unknown;
  std::optional<ProofNode> proof;
  std::optional<FrameCountermodel> frame_model;
  std::optional<AlgebraCountermodel> algebra_model;
  bool soundness_alarm = false;  // cross-check produced both proof and model
  DecisionConfig bounds;         // the budgets this verdict was decided under
  EngineStats stats;
};

// All hypotheses satisfied, goal sides defined, goal not satisfied.
bool verify_countermodel(const FrameCountermodel& model, const std::vector<Sequent>& hypotheses,
                         const Sequent& goal, std::string* why = nullptr);
bool verify_countermodel(const PartialAlgebra& algebra,
                         const std::map<std::string, Elem>& valuation,
                         const std::vector<Sequent>& hypotheses, const Sequent& goal,
                         std::string* why = nullptr);

// Exhaustive search over unital frames of size 1..kmax and all valuations
// of the occurring variables into the complex algebra; first counterexample
// in canonical order (frame order, then valuation odometer).
std::optional<FrameCountermodel> refute_by_frames(const std::vector<Sequent>& hypotheses,
                                                  const Sequent& goal, int kmax,
                                                  EngineStats* stats = nullptr);
std::optional<FrameCountermodel> refute_by_frames_reference(
    const std::vector<Sequent>& hypotheses, const Sequent& goal, int kmax,
    EngineStats* stats = nullptr);

// Table enumeration per the recognition procedure: all partial structures
// up to the size cap in canonical encoding order, filtered through
// check_partial_rba, then all valuations with defined goal sides.  Caps of
// 3 and below are practical; the space explodes beyond that.
struct PaperFaithfulResult {
  std::optional<AlgebraCountermodel> model;
  std::uint64_t structures_enumerated = 0;
  std::uint64_t structures_accepted = 0;
  std::uint64_t filters_checked = 0;    // filter candidates scanned by the recognizer
  bool cap_below_bound = true;  // completeness caveat: cap < entailment bound
};
PaperFaithfulResult decide_paper_faithful(const std::vector<Sequent>& hypotheses,
                                          const Sequent& goal, int size_cap);

// Prover plus frame refuter (plus the table refuter when configured);
// certificates are verified before being returned.
Verdict decide(const std::vector<Sequent>& hypotheses, const Sequent& goal,
               const DecisionConfig& cfg = {});

}  // namespace bfnl
