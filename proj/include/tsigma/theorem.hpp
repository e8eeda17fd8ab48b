#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tsigma/context.hpp"
#include "tsigma/sigma.hpp"
#include "tsigma/sigma_subnormal.hpp"

namespace tsigma {

namespace detail {

/// Nonempty subsets of `primes`, ordered by (size, lex on the prime list).
inline std::vector<std::vector<int>> prime_subsets(const std::vector<int>& primes) {
  std::vector<std::vector<int>> out;
  int n = int(primes.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(primes[i]);
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace detail

struct RFailure {
  std::vector<int> pi;
  Subgroup hall;
  Subgroup offender;  // subgroup of the Hall subgroup not normal in N_G(hall)
  Subgroup hall_normalizer;
};

struct RSigmaResult {
  bool holds = true;
  std::optional<RFailure> failure;
};

/// Condition R on one block: every subgroup K of every Hall pi-subgroup H,
/// for every nonempty pi inside the block's primes dividing |G|, is normal in
/// N_G(H). Only primes dividing |G| matter: other primes change neither the
/// Hall subgroups nor the condition. Vacuously true when the block misses
/// pi(G).
inline RSigmaResult satisfies_r_sigma(const GroupContext& ctx, int block_id,
                                      const SigmaPartition& sigma) {
  const FiniteGroup& g = ctx.group();
  std::vector<int> primes = sigma.block_primes_of(block_id, g.order());
  RSigmaResult out;
  for (const std::vector<int>& pi : detail::prime_subsets(primes)) {
    int target = part_for_primes(g.order(), pi);
    for (int h = 0; h < ctx.sub_count(); ++h) {
      if (ctx.sub(h).order != target) continue;
      int norm = ctx.normalizer_index(h);
      const std::vector<int>& norm_gens = ctx.lattice().generators[norm];
      bool ok = true;
      ctx.contained_in(h).for_each([&](int k) {
        if (!ok) return;
        if (!invariant_under(g, ctx.sub(k).members, norm_gens)) {
          out.holds = false;
          out.failure = RFailure{pi, ctx.sub(h), ctx.sub(k), ctx.sub(norm)};
          ok = false;
        }
      });
      if (!ok) return out;
    }
  }
  return out;
}

/// O_{sigma_i}(D) for a materialized group D: the join of all normal
/// sigma_i-subgroups, assembled from normal closures of block elements.
inline Subgroup o_sigma(const FiniteGroup& d, int block_id,
                        const SigmaPartition& sigma) {
  IndexSet acc(d.order());
  acc.set(0);
  for (int x = 1; x < d.order(); ++x) {
    std::vector<int> pf = prime_factors(d.element_orders[x]);
    bool in_block = true;
    for (int p : pf)
      if (sigma.block_of(p) != block_id) in_block = false;
    if (!in_block) continue;
    IndexSet seed(d.order());
    seed.set(x);
    IndexSet nc = normal_closure_under(d, seed, d.generators);
    std::vector<int> ncpf = prime_factors(nc.count());
    bool nc_in_block = true;
    for (int p : ncpf)
      if (sigma.block_of(p) != block_id) nc_in_block = false;
    if (nc_in_block) acc |= nc;
  }
  return make_subgroup(d, closure_of(d, acc));
}

namespace detail {

/// Same computation inside a parent group: O_{sigma_i} of the subgroup with
/// the given members and generators.
inline IndexSet o_sigma_members(const FiniteGroup& g, const IndexSet& d_members,
                                std::span<const int> d_gens, int block_id,
                                const SigmaPartition& sigma) {
  IndexSet acc(g.order());
  acc.set(0);
  d_members.for_each([&](int x) {
    if (x == 0) return;
    for (int p : prime_factors(g.element_orders[x]))
      if (sigma.block_of(p) != block_id) return;
    IndexSet seed(g.order());
    seed.set(x);
    IndexSet nc = normal_closure_under(g, seed, d_gens);
    for (int p : prime_factors(nc.count()))
      if (sigma.block_of(p) != block_id) return;
    acc |= nc;
  });
  return closure_of(g, acc);
}

}  // namespace detail

struct Statement3Block {
  std::string label;
  int o_order = 1;
  int hall_count = 0;
  bool o_contained = true;        // O_{sigma_i}(D) lies in every Hall sigma_i-subgroup
  bool complements_found = true;  // each Hall sigma_i-subgroup splits off O normally
};

struct Statement3Result {
  bool i = false;
  bool ii = false;
  bool iii = false;
  int d_order = 1;
  bool d_abelian = false;
  bool d_odd = false;
  bool d_hall = false;
  std::optional<Subgroup> complement;  // a Dedekind complement of D, when found
  std::vector<Statement3Block> blocks;
  bool overall() const { return i && ii && iii; }
};

/// Statement (3) of the characterisation, for D = G^{N_sigma}:
///   (i)  G = D x| M with D an abelian Hall subgroup of odd order and M
///        Dedekind,
///   (ii) every element of G induces a power automorphism on D,
///   (iii) O_{sigma_i}(D) has a normal complement in every Hall
///        sigma_i-subgroup, for each block meeting pi(G).
inline Statement3Result structure_check_statement3(const GroupContext& ctx,
                                                   SigmaAnalysis& analysis) {
  const FiniteGroup& g = ctx.group();
  const SigmaPartition& sigma = analysis.sigma();
  const Subgroup& d = analysis.residual();

  Statement3Result out;
  out.d_order = d.order;
  out.d_abelian = is_abelian_members(g, d.members);
  out.d_odd = d.order % 2 == 1;
  out.d_hall = std::gcd(d.order, g.order() / d.order) == 1;

  int m_order = g.order() / d.order;
  for (int i = 0; i < ctx.sub_count(); ++i) {
    if (ctx.sub(i).order != m_order) continue;
    if ((ctx.sub(i).members & d.members).count() != 1) continue;
    if (is_dedekind_members(g, ctx.lattice(), ctx.sub(i).members,
                            ctx.lattice().generators[i])) {
      out.complement = ctx.sub(i);
      break;
    }
  }
  out.i = out.d_abelian && out.d_odd && out.d_hall && out.complement.has_value();

  out.ii = power_automorphism_on(g, d);

  int d_idx = ctx.index_of(d.members);
  const std::vector<int>& d_gens = ctx.lattice().generators[d_idx];
  out.iii = true;
  for (int b : sigma_of(g, sigma)) {
    Statement3Block blk;
    blk.label = sigma.block_label(b);
    IndexSet o = detail::o_sigma_members(g, d.members, d_gens, b, sigma);
    blk.o_order = o.count();
    int hall_order = part_for_primes(g.order(), sigma.block_primes_of(b, g.order()));
    for (int hi = 0; hi < ctx.sub_count(); ++hi) {
      if (ctx.sub(hi).order != hall_order) continue;
      ++blk.hall_count;
      if (!o.subset_of(ctx.sub(hi).members)) {
        blk.o_contained = false;
        continue;
      }
      bool found = false;
      int want = hall_order / blk.o_order;
      ctx.contained_in(hi).for_each([&](int s) {
        if (found) return;
        if (ctx.sub(s).order != want) return;
        if ((ctx.sub(s).members & o).count() != 1) return;
        if (ctx.is_normal_in(s, hi)) found = true;
      });
      if (!found) blk.complements_found = false;
    }
    if (!blk.o_contained || !blk.complements_found) out.iii = false;
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

/// Robinson's criterion: condition R on every singleton block of the minimal
/// partition.
inline bool robinson_check(const GroupContext& ctx) {
  SigmaPartition minimal = SigmaPartition::minimal();
  for (int p : prime_factors(ctx.group().order()))
    if (!satisfies_r_sigma(ctx, p, minimal).holds) return false;
  return true;
}

/// Per-group record of the three statements plus supporting detail.
struct TheoremVerdict {
  std::string group_name;
  int group_order = 1;
  int group_degree = 1;
  std::string sigma_spec;
  bool sigma_soluble = false;
  bool s1_t_sigma = false;
  bool s2_r_all = false;
  bool s3_structure = false;
  int residual_order = 1;
  bool classical_t = false;
  bool equivalence_ok = true;  // vacuous unless sigma-soluble

  SigmaAnalysis::TSigmaResult s1_detail;
  std::vector<std::pair<std::string, RSigmaResult>> s2_blocks;
  Statement3Result s3_detail;
  double timing_ms = 0.0;
};

inline TheoremVerdict analyze_group(const GroupContext& ctx,
                                    const SigmaPartition& sigma) {
  const FiniteGroup& g = ctx.group();
  TheoremVerdict v;
  v.group_name = g.name;
  v.group_order = g.order();
  v.group_degree = g.degree;
  v.sigma_spec = sigma.spec();
  v.sigma_soluble = is_sigma_soluble_factors(ctx.chief_factor_orders(), sigma);
  v.classical_t = ctx.classical_t_group();

  SigmaAnalysis analysis(ctx, sigma);
  v.s1_detail = analysis.t_sigma();
  v.s1_t_sigma = v.s1_detail.holds;

  v.s2_r_all = true;
  for (int b : sigma_of(g, sigma)) {
    RSigmaResult r = satisfies_r_sigma(ctx, b, sigma);
    if (!r.holds) v.s2_r_all = false;
    v.s2_blocks.emplace_back(sigma.block_label(b), std::move(r));
  }

  v.s3_detail = structure_check_statement3(ctx, analysis);
  v.s3_structure = v.s3_detail.overall();
  v.residual_order = analysis.residual().order;

  v.equivalence_ok = !v.sigma_soluble ||
                     (v.s1_t_sigma == v.s2_r_all && v.s2_r_all == v.s3_structure);
  return v;
}

}  // namespace tsigma
