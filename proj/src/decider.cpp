#include "bfnl/decider.hpp"

#include <algorithm>
#include <stdexcept>

#include "bfnl/parallel.hpp"

namespace bfnl {

namespace {

bool frame_satisfied(const ResiduatedFrame& f,
                     const std::map<std::string, std::uint64_t>& val, const Sequent& s) {
  std::uint64_t lhs = cx_eval(f, val, s.antecedent);
  std::uint64_t rhs = cx_eval(f, val, s.succedent);
  return (lhs & ~rhs) == 0;
}

}  // namespace

bool verify_countermodel(const FrameCountermodel& model, const std::vector<Sequent>& hypotheses,
                         const Sequent& goal, std::string* why) {
  if (CheckResult r = check_frame(model.frame); !r) {
    if (why) *why = "frame fails the frame laws";
    return false;
  }
  for (const Sequent& h : hypotheses)
    if (!frame_satisfied(model.frame, model.valuation, h)) {
      if (why) *why = "hypothesis not satisfied: " + to_string(h);
      return false;
    }
  if (frame_satisfied(model.frame, model.valuation, goal)) {
    if (why) *why = "goal is satisfied";
    return false;
  }
  return true;
}

bool verify_countermodel(const PartialAlgebra& algebra,
                         const std::map<std::string, Elem>& valuation,
                         const std::vector<Sequent>& hypotheses, const Sequent& goal,
                         std::string* why) {
  Valuation mu(algebra);
  for (const auto& [name, v] : valuation) mu.assign(Formula::var(name), v);
  for (const Sequent& h : hypotheses)
    if (satisfies(algebra, mu, h) != Truth::True) {
      if (why) *why = "hypothesis not satisfied: " + to_string(h);
      return false;
    }
  if (mu.eval(goal.antecedent) == kUndef || mu.eval(goal.succedent) == kUndef) {
    if (why) *why = "goal side undefined";
    return false;
  }
  if (satisfies(algebra, mu, goal) != Truth::False) {
    if (why) *why = "goal is satisfied";
    return false;
  }
  return true;
}

namespace {

// Valuation index -> variable masks, first variable most significant.
std::map<std::string, std::uint64_t> masks_for_index(const std::vector<std::string>& vars,
                                                     std::uint64_t idx, int points) {
  const std::uint64_t radix = std::uint64_t{1} << points;
  std::map<std::string, std::uint64_t> out;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    out[*it] = idx % radix;
    idx /= radix;
  }
  return out;
}

// First falsifying valuation index for one frame, or -1.
long long first_falsifying(const ResiduatedFrame& f, const std::vector<Sequent>& hypotheses,
                           const Sequent& goal, const std::vector<std::string>& vars) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= std::uint64_t{1} << f.points;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto val = masks_for_index(vars, idx, f.points);
    bool hyps_ok = true;
    for (const Sequent& h : hypotheses)
      if (!frame_satisfied(f, val, h)) {
        hyps_ok = false;
        break;
      }
    if (!hyps_ok) continue;
    if (!frame_satisfied(f, val, goal)) return static_cast<long long>(idx);
  }
  return -1;
}

}  // namespace

std::optional<FrameCountermodel> refute_by_frames_reference(
    const std::vector<Sequent>& hypotheses, const Sequent& goal, int kmax,
    EngineStats* stats) {
  const std::vector<std::string> vars = variables_of(hypotheses, goal);
  for (int k = 1; k <= kmax; ++k) {
    for (const ResiduatedFrame& f : enumerate_unital_frames(k)) {
      if (stats) ++stats->frames_checked;
      long long idx = first_falsifying(f, hypotheses, goal, vars);
      if (idx >= 0)
        return FrameCountermodel{f, masks_for_index(vars, idx, f.points)};
    }
  }
  return std::nullopt;
}

std::optional<FrameCountermodel> refute_by_frames(const std::vector<Sequent>& hypotheses,
                                                  const Sequent& goal, int kmax,
                                                  EngineStats* stats) {
#ifndef _OPENMP
  return refute_by_frames_reference(hypotheses, goal, kmax, stats);
#else
  const std::vector<std::string> vars = variables_of(hypotheses, goal);
  for (int k = 1; k <= kmax; ++k) {
    const std::vector<ResiduatedFrame> frames = enumerate_unital_frames(k);
    const long long n = static_cast<long long>(frames.size());
    const long long block = std::max(1, worker_count()) * 16;
    for (long long lo = 0; lo < n; lo += block) {
      const long long hi = std::min(n, lo + block);
      std::vector<long long> hit(hi - lo, -1);
#pragma omp parallel for schedule(dynamic)
      for (long long i = lo; i < hi; ++i)
        hit[i - lo] = first_falsifying(frames[i], hypotheses, goal, vars);
      if (stats) stats->frames_checked += static_cast<std::uint64_t>(hi - lo);
      // Scan the block in canonical order so the first hit matches the
      // serial search regardless of thread interleaving.
      for (long long i = lo; i < hi; ++i)
        if (hit[i - lo] >= 0)
          return FrameCountermodel{frames[i],
                                   masks_for_index(vars, hit[i - lo], frames[i].points)};
    }
  }
  return std::nullopt;
#endif
}

// ---------------------------------------------------------------------------
// Table enumeration.  Canonical encoding order, most significant first:
// size m ascending, top, one, free order bits, negation tuple, then the
// join, meet, product, and residual tables as one odometer (row-major
// within each table, undefined before defined values, residual table last
// and fastest).  Entries forced by the order, unit, and complement laws
// contribute a single choice, so pruning never disturbs the order.
// ---------------------------------------------------------------------------

namespace {

class SlotOdometer {
 public:
  explicit SlotOdometer(std::vector<std::vector<Elem>> choices)
      : choices_(std::move(choices)), digit_(choices_.size(), 0) {}

  bool done() const { return done_; }
  Elem value(std::size_t slot) const { return choices_[slot][digit_[slot]]; }

  void advance() {
    int i = static_cast<int>(digit_.size()) - 1;
    while (i >= 0 && digit_[i] + 1 == choices_[i].size()) digit_[i--] = 0;
    if (i < 0) done_ = true;
    else ++digit_[i];
  }

 private:
  std::vector<std::vector<Elem>> choices_;
  std::vector<std::size_t> digit_;
  bool done_ = false;
};

struct OrderInfo {
  std::vector<std::uint8_t> leq;
  std::vector<Elem> sup, inf;  // kUndef when no sup/inf exists
};

// Sup/inf tables for a valid bounded order; nullopt when the order part of
// step 1 fails.
std::optional<OrderInfo> analyze_order(int m, Elem top, const std::vector<std::uint8_t>& leq) {
  auto le = [&](Elem a, Elem b) { return leq[a * m + b] != 0; };
  for (int a = 0; a < m; ++a)
    if (!le(a, a)) return std::nullopt;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && le(a, b) && le(b, a)) return std::nullopt;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!le(a, b)) continue;
      for (int c = 0; c < m; ++c)
        if (le(b, c) && !le(a, c)) return std::nullopt;
    }
  for (int a = 0; a < m; ++a)
    if (!le(0, a) || !le(a, top)) return std::nullopt;
  OrderInfo info;
  info.leq = leq;
  info.sup.assign(std::size_t(m) * m, kUndef);
  info.inf.assign(std::size_t(m) * m, kUndef);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        if (!le(a, c) || !le(b, c)) continue;
        bool least = true;
        for (int d = 0; d < m && least; ++d)
          if (le(a, d) && le(b, d) && !le(c, d)) least = false;
        if (least) {
          info.sup[a * m + b] = c;
          break;
        }
      }
      for (int c = m - 1; c >= 0; --c) {
        if (!le(c, a) || !le(c, b)) continue;
        bool greatest = true;
        for (int d = 0; d < m && greatest; ++d)
          if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
        if (greatest) {
          info.inf[a * m + b] = c;
          break;
        }
      }
    }
  return info;
}

}  // namespace

PaperFaithfulResult decide_paper_faithful(const std::vector<Sequent>& hypotheses,
                                          const Sequent& goal, int size_cap) {
  PaperFaithfulResult result;
  result.cap_below_bound = size_cap < entailment_bound(hypotheses, goal);
  const std::vector<std::string> vars = variables_of(hypotheses, goal);

  for (int m = 1; m <= size_cap; ++m) {
    const Elem bot = 0;
    std::vector<Elem> tops;
    if (m == 1) tops.push_back(0);
    else
      for (Elem t = 1; t < m; ++t) tops.push_back(t);

    // Free order pairs in row-major order; bot row and top column are forced.
    for (Elem top : tops) {
      std::vector<std::pair<Elem, Elem>> free_pairs;
      for (Elem a = 0; a < m; ++a)
        for (Elem b = 0; b < m; ++b)
          if (a != b && a != bot && b != top) free_pairs.emplace_back(a, b);

      for (Elem one = 0; one < m; ++one) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free_pairs.size()); ++bits) {
          std::vector<std::uint8_t> leq(std::size_t(m) * m, 0);
          for (Elem a = 0; a < m; ++a) {
            leq[a * m + a] = 1;
            leq[bot * m + a] = 1;
            leq[a * m + top] = 1;
          }
          for (std::size_t i = 0; i < free_pairs.size(); ++i)
            if ((bits >> i) & 1u) leq[free_pairs[i].first * m + free_pairs[i].second] = 1;
          auto order = analyze_order(m, top, leq);
          if (!order) continue;

          std::vector<Elem> neg(m, 0);
          for (;;) {
            bool feasible = true;
            for (Elem a = 0; a < m && feasible; ++a)
              feasible = order->sup[a * m + neg[a]] == top && order->inf[a * m + neg[a]] == bot;
            if (feasible) {
              // Slots: join, meet, otimes, lol, lolinv in row-major order.
              std::vector<std::vector<Elem>> choices;
              auto push_lattice = [&](const std::vector<Elem>& bound, Elem forced_value,
                                      bool is_join) {
                for (Elem a = 0; a < m; ++a)
                  for (Elem b = 0; b < m; ++b) {
                    if (neg[a] == b) {
                      choices.push_back({forced_value});
                    } else if (bound[a * m + b] != kUndef) {
                      choices.push_back({kUndef, bound[a * m + b]});
                    } else {
                      choices.push_back({kUndef});
                    }
                    (void)is_join;
                  }
              };
              push_lattice(order->sup, top, true);
              push_lattice(order->inf, bot, false);
              for (Elem a = 0; a < m; ++a)
                for (Elem b = 0; b < m; ++b) {
                  if (a == one) choices.push_back({b});
                  else if (b == one) choices.push_back({a});
                  else {
                    std::vector<Elem> all{kUndef};
                    for (Elem v = 0; v < m; ++v) all.push_back(v);
                    choices.push_back(all);
                  }
                }
              std::vector<Elem> all{kUndef};
              for (Elem v = 0; v < m; ++v) all.push_back(v);
              for (int t = 0; t < 2; ++t)
                for (Elem a = 0; a < m; ++a)
                  for (Elem b = 0; b < m; ++b) {
                    (void)a;
                    (void)b;
                    choices.push_back(all);
                  }

              const std::size_t n2 = std::size_t(m) * m;
              for (SlotOdometer od(std::move(choices)); !od.done(); od.advance()) {
                PartialAlgebra alg = PartialAlgebra::empty_tables(m);
                alg.leq = leq;
                alg.bot = bot;
                alg.top = top;
                alg.one = one;
                alg.neg = neg;
                for (std::size_t i = 0; i < n2; ++i) {
                  alg.join[i] = od.value(i);
                  alg.meet[i] = od.value(n2 + i);
                  alg.otimes[i] = od.value(2 * n2 + i);
                  alg.lol[i] = od.value(3 * n2 + i);
                  alg.lolinv[i] = od.value(4 * n2 + i);
                }
                ++result.structures_enumerated;
                result.filters_checked += std::uint64_t{1} << m;
                CheckerVerdict v = check_partial_rba(alg, RefinePolicy::JacobiSerial);
                if (!v.accepted) continue;
                ++result.structures_accepted;

                std::optional<AlgebraCountermodel> found;
                for_each_valuation(alg, vars, [&](const Valuation& mu) {
                  if (mu.eval(goal.antecedent) == kUndef || mu.eval(goal.succedent) == kUndef)
                    return true;
                  for (const Sequent& h : hypotheses)
                    if (satisfies(alg, mu, h) != Truth::True) return true;
                  if (satisfies(alg, mu, goal) != Truth::False) return true;
                  std::map<std::string, Elem> val;
                  for (const std::string& name : vars)
                    val[name] = mu.eval(Formula::var(name));
                  found = AlgebraCountermodel{alg, std::move(val)};
                  return false;
                });
                if (found) {
                  result.model = std::move(found);
                  return result;
                }
              }
            }
            // Advance the negation odometer, last index fastest.
            int i = m - 1;
            while (i >= 0 && neg[i] == m - 1) neg[i--] = 0;
            if (i < 0) break;
            ++neg[i];
          }
        }
      }
    }
  }
  return result;
}

Verdict decide(const std::vector<Sequent>& hypotheses, const Sequent& goal,
               const DecisionConfig& cfg) {
  Verdict out;
  out.bounds = cfg;
  SearchBudget budget;
  budget.max_depth = cfg.prover_depth;
  budget.bunch_cap_factor = cfg.bunch_cap_factor;
  ProveResult pr = prove(goal, hypotheses, budget);
  out.stats.prover_nodes = pr.stats.nodes_expanded;

  if (pr.proved()) {
    std::string why;
    if (!check_proof(*pr.proof, hypotheses, &why))
      throw std::logic_error("decide: search produced an invalid proof: " + why);
    out.kind = Verdict::Kind::Provable;
    out.proof = std::move(pr.proof);
    if (cfg.cross_check) {
      auto model = refute_by_frames(hypotheses, goal, cfg.kmax, &out.stats);
      if (model && verify_countermodel(*model, hypotheses, goal))
        out.soundness_alarm = true;
    }
    return out;
  }

  if (auto model = refute_by_frames(hypotheses, goal, cfg.kmax, &out.stats)) {
    std::string why;
    if (!verify_countermodel(*model, hypotheses, goal, &why))
      throw std::logic_error("decide: refuter produced an invalid countermodel: " + why);
    out.kind = Verdict::Kind::Refuted;
    out.frame_model = std::move(model);
    return out;
  }

  if (cfg.paper_faithful) {
    PaperFaithfulResult pf = decide_paper_faithful(hypotheses, goal, cfg.size_cap);
    out.stats.structures_checked = pf.structures_enumerated;
    out.stats.filters_checked = pf.filters_checked;
    if (pf.model) {
      std::string why;
      if (!verify_countermodel(pf.model->algebra, pf.model->valuation, hypotheses, goal, &why))
        throw std::logic_error("decide: table refuter produced an invalid countermodel: " + why);
      out.kind = Verdict::Kind::Refuted;
      out.algebra_model = std::move(pf.model);
      return out;
    }
  }

  out.kind = Verdict::Kind::Unknown;
  return out;
}

}  // namespace bfnl
