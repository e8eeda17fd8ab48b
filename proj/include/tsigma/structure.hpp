#pragma once

#include <numeric>
#include <vector>

#include "tsigma/group.hpp"
#include "tsigma/lattice.hpp"
#include "tsigma/primes.hpp"
#include "tsigma/quotient.hpp"

namespace tsigma {

/// [H, H] inside the parent group, from commutators of all member pairs.
inline IndexSet derived_of_members(const FiniteGroup& g, const IndexSet& members) {
  IndexSet comms(g.order());
  std::vector<int> elems = members.members();
  for (int x : elems)
    for (int y : elems) comms.set(g.commutator(x, y));
  return closure_of(g, comms);
}

inline Subgroup derived_subgroup(const FiniteGroup& g) {
  return make_subgroup(g, derived_of_members(g, g.full_set()));
}

inline bool is_abelian_members(const FiniteGroup& g, const IndexSet& members) {
  std::vector<int> elems = members.members();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  return true;
}

inline bool is_abelian(const FiniteGroup& g) {
  for (int a : g.generators)
    for (int b : g.generators)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

namespace detail {

/// Elements of H whose order only uses the given primes, as a candidate for
/// a normal Hall subgroup: when a normal Hall π-subgroup exists it is exactly
/// the set of π-elements, and that set is conjugation-invariant.
inline IndexSet pi_elements(const FiniteGroup& g, const IndexSet& members,
                            const std::vector<int>& primes) {
  IndexSet out(g.order());
  members.for_each([&](int x) {
    int o = g.element_orders[x];
    if (part_for_primes(o, primes) == o) out.set(x);
  });
  return out;
}

/// True iff H has a normal Hall π-subgroup.
inline bool has_normal_hall(const FiniteGroup& g, const IndexSet& members,
                            int sub_order, const std::vector<int>& primes) {
  int target = part_for_primes(sub_order, primes);
  IndexSet cand = pi_elements(g, members, primes);
  if (cand.count() != target) return false;
  return closure_of(g, cand).count() == target;
}

}  // namespace detail

/// Nilpotent iff every Sylow subgroup is normal, i.e. for each prime the
/// p-elements form a subgroup of full p-power order.
inline bool is_nilpotent_members(const FiniteGroup& g, const IndexSet& members) {
  int n = members.count();
  for (int p : prime_factors(n))
    if (!detail::has_normal_hall(g, members, n, {p})) return false;
  return true;
}

inline bool is_nilpotent(const FiniteGroup& g) {
  return is_nilpotent_members(g, g.full_set());
}

/// Derived series reaches the trivial subgroup.
inline bool is_soluble(const FiniteGroup& g) {
  IndexSet cur = g.full_set();
  while (true) {
    IndexSet next = derived_of_members(g, cur);
    if (next == cur) return cur.count() == 1;
    cur = std::move(next);
  }
}

/// Every subgroup is normal.
inline bool is_dedekind(const FiniteGroup& g, const Lattice& lat) {
  for (const Subgroup& h : lat.subgroups)
    if (!is_normal(g, h)) return false;
  return true;
}

/// Dedekind test for a subgroup M <= G, using the parent lattice: every
/// lattice member inside M must be invariant under M's generators.
inline bool is_dedekind_members(const FiniteGroup& g, const Lattice& lat,
                                const IndexSet& m, std::span<const int> m_gens) {
  for (const Subgroup& h : lat.subgroups) {
    if (!h.members.subset_of(m)) continue;
    if (!invariant_under(g, h.members, m_gens)) return false;
  }
  return true;
}

/// G^N as the stable term of the lower central series. [G, K] for normal K is
/// generated by the plain commutators, no extra normal closure needed.
inline Subgroup nilpotent_residual(const FiniteGroup& g) {
  IndexSet cur = g.full_set();
  while (true) {
    IndexSet comms(g.order());
    cur.for_each([&](int x) {
      for (int y = 0; y < g.order(); ++y) comms.set(g.commutator(y, x));
    });
    IndexSet next = closure_of(g, comms);
    if (next == cur) return make_subgroup(g, cur);
    cur = std::move(next);
  }
}

enum class ChiefTieBreak { kSmallestKey, kLargestKey };

/// Ascending chief series from the trivial subgroup to G.
struct ChiefSeries {
  std::vector<Subgroup> terms;
  std::vector<int> factor_orders;
};

/// Built bottom-up: repeatedly pull back a minimal normal subgroup of the
/// current quotient. Factor orders do not depend on the tie-break; the
/// tie-break only fixes which series is reported.
inline ChiefSeries chief_series(const FiniteGroup& g,
                                ChiefTieBreak tie = ChiefTieBreak::kSmallestKey) {
  ChiefSeries out;
  Subgroup cur = trivial_subgroup(g);
  out.terms.push_back(cur);
  while (cur.order < g.order()) {
    QuotientMap q = quotient_group(g, cur);
    std::vector<Subgroup> minimals = minimal_normal_subgroups_direct(q.target);
    const Subgroup* pick = &minimals.front();
    if (tie == ChiefTieBreak::kLargestKey) {
      for (const Subgroup& m : minimals)
        if (subgroup_key_less(*pick, m)) pick = &m;
    }
    Subgroup next = preimage_subgroup(q, *pick);
    out.factor_orders.push_back(next.order / cur.order);
    out.terms.push_back(next);
    cur = std::move(next);
  }
  return out;
}

/// Every element of G maps each cyclic subgroup of D to itself; checked as
/// "every cyclic subgroup of D is normal in G".
inline bool power_automorphism_on(const FiniteGroup& g, const Subgroup& d) {
  bool ok = true;
  d.members.for_each([&](int x) {
    if (!ok) return;
    int cyc[1] = {x};
    IndexSet c = closure_of(g, std::span<const int>(cyc, 1));
    if (!invariant_under(g, c, g.generators)) ok = false;
  });
  return ok;
}

/// Soluble T-group criterion: the nilpotent residual is an abelian Hall
/// subgroup of odd order, the quotient by it is Dedekind, and all its
/// subgroups are normal in G. Subgroups of G/R correspond to subgroups of G
/// above R, so the quotient check runs on the parent lattice.
inline bool gaschutz_check(const FiniteGroup& g, const Lattice& lat) {
  Subgroup r = nilpotent_residual(g);
  if (!is_abelian_members(g, r.members)) return false;
  if (r.order % 2 == 0) return false;
  if (std::gcd(r.order, g.order() / r.order) != 1) return false;
  for (const Subgroup& h : lat.subgroups) {
    if (h.members.subset_of(r.members) && !is_normal(g, h)) return false;
    if (r.members.subset_of(h.members) && !is_normal(g, h)) return false;
  }
  return true;
}

/// Stable term of the descending normal-closure series of H:
/// K_0 = G, K_{i+1} = <H^{K_i}>. H is subnormal iff the series reaches H.
inline IndexSet normal_closure_series_stable(const FiniteGroup& g, const IndexSet& h) {
  IndexSet cur = g.full_set();
  while (true) {
    IndexSet next = normal_closure_under(g, h, cur.members());
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

inline bool is_subnormal(const FiniteGroup& g, const Subgroup& h) {
  return normal_closure_series_stable(g, h.members) == h.members;
}

/// Classical T-group: every subnormal subgroup is normal. Decided through the
/// normal-closure series, independent of the sigma machinery.
inline bool is_t_group(const FiniteGroup& g, const Lattice& lat) {
  for (const Subgroup& h : lat.subgroups)
    if (is_subnormal(g, h) && !is_normal(g, h)) return false;
  return true;
}

}  // namespace tsigma
