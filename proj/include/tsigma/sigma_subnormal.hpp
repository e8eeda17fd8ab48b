#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsigma/context.hpp"
#include "tsigma/sigma.hpp"

namespace tsigma {

struct WitnessStep {
  bool normal = false;     // lower term normal in upper term
  int factor = 1;          // |upper| / |core of lower in upper|
  std::string block;       // block label when the step is sigma-primary
};

/// A certified chain H = chain[0] <= ... <= chain.back() = G with one
/// justification per consecutive pair.
struct SigmaWitness {
  std::vector<Subgroup> chain;
  std::vector<WitnessStep> steps;
};

/// Reachability analysis of one (group, sigma) pair over the subgroup
/// lattice. Holds the memo tables for sigma-subnormality, the residual, and
/// the T_sigma verdict; build one per analysis and keep it on one thread.
class SigmaAnalysis {
 public:
  SigmaAnalysis(const GroupContext& ctx, SigmaPartition sigma)
      : ctx_(&ctx), sigma_(std::move(sigma)) {}

  const GroupContext& context() const { return *ctx_; }
  const SigmaPartition& sigma() const { return sigma_; }

  /// K -> L is a valid chain step (K properly below L).
  bool step_valid(int k, int l) const {
    const auto& rec = ctx_->step(k, l);
    return rec.normal || factor_primary(rec.factor);
  }

  WitnessStep step_info(int k, int l) const {
    const auto& rec = ctx_->step(k, l);
    WitnessStep s;
    s.normal = rec.normal;
    s.factor = rec.factor;
    if (!rec.normal) s.block = sigma_.block_label(sigma_.blocks_of(rec.factor)[0]);
    return s;
  }

  /// Lattice indices of all sigma-subnormal subgroups of G.
  const IndexSet& sigma_subnormal_set() {
    ensure_reach();
    return reach_;
  }

  bool is_sigma_subnormal(int sub_index) {
    ensure_reach();
    return reach_.test(sub_index);
  }

  /// Shortest witness chain; ties broken by the (order, lex) subgroup key of
  /// each chain term closest to H first.
  std::optional<SigmaWitness> witness(int sub_index) {
    ensure_reach();
    if (!reach_.test(sub_index)) return std::nullopt;
    SigmaWitness w;
    int cur = sub_index;
    w.chain.push_back(ctx_->sub(cur));
    while (cur != ctx_->full_index()) {
      int up = pred_[cur];
      w.steps.push_back(step_info(cur, up));
      w.chain.push_back(ctx_->sub(up));
      cur = up;
    }
    return w;
  }

  /// Sigma-subnormal subgroups of an ambient subgroup, through the same
  /// lattice restricted to subgroups of the ambient.
  IndexSet sigma_subnormal_in(int ambient) {
    if (ambient == ctx_->full_index()) return sigma_subnormal_set();
    auto it = reach_in_.find(ambient);
    if (it != reach_in_.end()) return it->second;
    IndexSet r = bfs_from(ambient);
    reach_in_.emplace(ambient, r);
    return r;
  }

  struct TSigmaResult {
    bool holds = true;
    std::optional<Subgroup> counterexample;  // smallest (order, lex) offender
    std::optional<SigmaWitness> counterexample_witness;
  };

  /// Every sigma-subnormal subgroup is normal in G.
  TSigmaResult t_sigma() {
    ensure_reach();
    TSigmaResult out;
    for (int i = 0; i < ctx_->sub_count(); ++i) {
      if (!reach_.test(i) || ctx_->normal_in_group(i)) continue;
      out.holds = false;
      out.counterexample = ctx_->sub(i);
      out.counterexample_witness = witness(i);
      break;
    }
    return out;
  }

  /// G^{N_sigma}: intersection of all normal subgroups whose quotient is
  /// sigma-nilpotent.
  const Subgroup& residual() {
    if (!residual_) {
      IndexSet acc = ctx_->group().full_set();
      for (int i : ctx_->normal_subgroup_indices()) {
        if (acc.count() == 1) break;
        const QuotientMap& q = ctx_->quotient_by_normal(i);
        if (is_sigma_nilpotent(q.target, sigma_)) acc &= ctx_->sub(i).members;
      }
      residual_ = make_subgroup(ctx_->group(), std::move(acc));
    }
    return *residual_;
  }

 private:
  bool factor_primary(int factor) const {
    if (int(primary_memo_.size()) <= factor) primary_memo_.resize(factor + 1, -1);
    if (primary_memo_[factor] < 0)
      primary_memo_[factor] = is_sigma_primary(factor, sigma_) ? 1 : 0;
    return primary_memo_[factor] == 1;
  }

  /// Level-synchronised BFS downward from the top. A subgroup joins the next
  /// level when some current-level overgroup admits a valid step; the
  /// predecessor is the smallest-key such overgroup.
  IndexSet bfs_from(int top) {
    const int s = ctx_->sub_count();
    IndexSet reached(s);
    std::vector<int> pred(s, -1);
    reached.set(top);
    std::vector<int> level{top};
    while (!level.empty()) {
      std::vector<int> next;
      ctx_->contained_in(top).for_each([&](int k) {
        if (reached.test(k)) return;
        for (int l : level) {
          if (!ctx_->contains(k, l) || k == l) continue;
          if (step_valid(k, l)) {
            pred[k] = l;
            next.push_back(k);
            return;
          }
        }
      });
      for (int k : next) reached.set(k);
      level = std::move(next);
    }
    if (top == ctx_->full_index()) pred_ = std::move(pred);
    return reached;
  }

  void ensure_reach() {
    if (!reach_done_) {
      reach_ = bfs_from(ctx_->full_index());
      reach_done_ = true;
    }
  }

  const GroupContext* ctx_;
  SigmaPartition sigma_;
  bool reach_done_ = false;
  IndexSet reach_;
  std::vector<int> pred_;
  std::map<int, IndexSet> reach_in_;
  std::optional<Subgroup> residual_;
  mutable std::vector<std::int8_t> primary_memo_;
};

/// Decide sigma-subnormality of H in G, with a witness chain on success.
inline std::pair<bool, std::optional<SigmaWitness>> is_sigma_subnormal(
    const GroupContext& ctx, const Subgroup& h, const SigmaPartition& sigma) {
  int idx = ctx.index_of(h.members);
  if (idx < 0) throw ValidationError("subgroup is not in the lattice of " +
                                     ctx.group().name);
  SigmaAnalysis a(ctx, sigma);
  bool ok = a.is_sigma_subnormal(idx);
  return {ok, ok ? a.witness(idx) : std::nullopt};
}

inline Subgroup sigma_nilpotent_residual(const GroupContext& ctx,
                                         const SigmaPartition& sigma) {
  SigmaAnalysis a(ctx, sigma);
  return a.residual();
}

inline std::pair<bool, std::optional<Subgroup>> is_t_sigma(const GroupContext& ctx,
                                                           const SigmaPartition& sigma) {
  SigmaAnalysis a(ctx, sigma);
  auto r = a.t_sigma();
  return {r.holds, r.counterexample};
}

}  // namespace tsigma
