#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tsigma/group.hpp"
#include "tsigma/lattice.hpp"
#include "tsigma/quotient.hpp"
#include "tsigma/structure.hpp"

namespace tsigma {

/// Per-group analysis state: the lattice plus everything about subgroup pairs
/// that does not depend on a sigma partition. A chain step K -> L is decided
/// by (K normal in L) or the primes of |L| / |core_L(K)|, and both are
/// partition-independent, so every sigma analysis of the same group shares
/// this object.
///
/// Lazy caches make the object mutable behind the scenes; confine a context
/// to one thread.
class GroupContext {
 public:
  explicit GroupContext(const FiniteGroup& g, int lattice_cap = kDefaultLatticeCap)
      : g_(&g), lat_(all_subgroups(g, lattice_cap)) {
    const int s = lat_.size();
    contained_in_.assign(s, IndexSet(s));
    for (int j = 0; j < s; ++j) {
      for (int i = 0; i < s; ++i)
        if (lat_.subgroups[i].members.subset_of(lat_.subgroups[j].members))
          contained_in_[j].set(i);
    }
    for (int j = 0; j < s; ++j) {
      contained_in_[j].for_each([&](int i) {
        if (i == j) return;
        StepRec rec;
        rec.normal = invariant_under(g, lat_.subgroups[i].members,
                                     lat_.generators[j]);
        if (rec.normal) {
          rec.factor = lat_.subgroups[j].order / lat_.subgroups[i].order;
        } else {
          IndexSet core = core_under(g, lat_.subgroups[i].members,
                                     lat_.generators[j]);
          rec.factor = lat_.subgroups[j].order / core.count();
        }
        steps_.emplace(key(i, j), rec);
      });
    }
    normalizer_idx_.assign(s, -1);
    cyclic_idx_.assign(g.order(), -1);
    subnormal_.assign(s, -1);
  }

  // The context keeps a pointer to the group; don't feed it a temporary.
  explicit GroupContext(FiniteGroup&&, int = kDefaultLatticeCap) = delete;

  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const FiniteGroup& group() const { return *g_; }
  const Lattice& lattice() const { return lat_; }
  int sub_count() const { return lat_.size(); }
  const Subgroup& sub(int i) const { return lat_.subgroups[i]; }
  int full_index() const { return lat_.full_index; }
  int trivial_index() const { return lat_.trivial_index; }
  int index_of(const IndexSet& members) const { return lat_.index_of(members); }

  bool contains(int i, int j) const { return contained_in_[j].test(i); }
  const IndexSet& contained_in(int j) const { return contained_in_[j]; }

  struct StepRec {
    bool normal = false;
    int factor = 1;  // |L| / |core_L(K)| (index of K when the step is normal)
  };

  /// Requires i properly contained in j.
  const StepRec& step(int i, int j) const { return steps_.at(key(i, j)); }

  bool is_normal_in(int i, int j) const {
    return i == j || steps_.at(key(i, j)).normal;
  }

  bool normal_in_group(int i) const { return is_normal_in(i, full_index()); }

  const std::vector<int>& normal_subgroup_indices() const {
    if (!normal_indices_) {
      std::vector<int> out;
      for (int i = 0; i < sub_count(); ++i)
        if (normal_in_group(i)) out.push_back(i);
      normal_indices_ = std::move(out);
    }
    return *normal_indices_;
  }

  int normalizer_index(int i) const {
    if (normalizer_idx_[i] < 0) {
      Subgroup n = normalizer(*g_, lat_.subgroups[i]);
      normalizer_idx_[i] = lat_.index_of(n.members);
    }
    return normalizer_idx_[i];
  }

  int cyclic_index_of(int elem) const {
    if (cyclic_idx_[elem] < 0) {
      int seed[1] = {elem};
      IndexSet c = closure_of(*g_, std::span<const int>(seed, 1));
      cyclic_idx_[elem] = lat_.index_of(c);
    }
    return cyclic_idx_[elem];
  }

  /// Quotient by a normal subgroup, materialized once and shared.
  const QuotientMap& quotient_by_normal(int i) const {
    auto it = quotients_.find(i);
    if (it == quotients_.end())
      it = quotients_.emplace(i, quotient_group(*g_, lat_.subgroups[i])).first;
    return it->second;
  }

  const std::vector<int>& chief_factor_orders() const {
    if (!chief_orders_) chief_orders_ = chief_series(*g_).factor_orders;
    return *chief_orders_;
  }

  bool subnormal_classical(int i) const {
    if (subnormal_[i] < 0)
      subnormal_[i] = is_subnormal(*g_, lat_.subgroups[i]) ? 1 : 0;
    return subnormal_[i] == 1;
  }

  bool classical_t_group() const {
    if (!classical_t_) {
      bool t = true;
      for (int i = 0; i < sub_count() && t; ++i)
        if (subnormal_classical(i) && !normal_in_group(i)) t = false;
      classical_t_ = t;
    }
    return *classical_t_;
  }

 private:
  static std::uint64_t key(int i, int j) {
    return (std::uint64_t(std::uint32_t(i)) << 32) | std::uint32_t(j);
  }

  const FiniteGroup* g_;
  Lattice lat_;
  std::vector<IndexSet> contained_in_;
  std::unordered_map<std::uint64_t, StepRec> steps_;
  mutable std::vector<int> normalizer_idx_;
  mutable std::vector<int> cyclic_idx_;
  mutable std::map<int, QuotientMap> quotients_;
  mutable std::optional<std::vector<int>> chief_orders_;
  mutable std::optional<std::vector<int>> normal_indices_;
  mutable std::vector<std::int8_t> subnormal_;
  mutable std::optional<bool> classical_t_;
};

}  // namespace tsigma
