#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tsigma/errors.hpp"
#include "tsigma/group.hpp"
#include "tsigma/iset.hpp"
#include "tsigma/primes.hpp"

namespace tsigma {

inline constexpr int kDefaultLatticeCap = 256;

/// An element-subset handle on a parent group, closed under multiplication
/// and inversion.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  IndexSet members;
  int order = 0;

  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool contains(const Subgroup& o) const { return o.members.subset_of(members); }
};

inline Subgroup make_subgroup(const FiniteGroup& g, IndexSet members) {
  Subgroup s;
  s.parent = &g;
  s.order = members.count();
  s.members = std::move(members);
  return s;
}

/// (order, member-set lex) — the tie-break used everywhere.
inline bool subgroup_key_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return IndexSet::lex_less(a.members, b.members);
}

/// Member set of the subgroup generated by `seed` (element indices).
inline IndexSet closure_of(const FiniteGroup& g, std::span<const int> seed) {
  IndexSet out(g.order());
  out.set(0);
  std::vector<int> work{0};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int s : seed) {
      int y = g.mul(x, s);
      if (!out.test(y)) {
        out.set(y);
        work.push_back(y);
      }
    }
  }
  return out;
}

inline IndexSet closure_of(const FiniteGroup& g, const IndexSet& seed) {
  return closure_of(g, std::span<const int>(seed.members()));
}

inline Subgroup generated_subgroup(const FiniteGroup& g, const IndexSet& seed) {
  return make_subgroup(g, closure_of(g, seed));
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  IndexSet s(g.order());
  s.set(0);
  return make_subgroup(g, std::move(s));
}

inline Subgroup full_subgroup(const FiniteGroup& g) {
  return make_subgroup(g, g.full_set());
}

inline IndexSet conjugate_set(const FiniteGroup& g, const IndexSet& s, int by) {
  IndexSet out(g.order());
  s.for_each([&](int x) { out.set(g.conj(x, by)); });
  return out;
}

/// target^c == target for every c in `conjugators`. Invariance under a
/// generating set implies invariance under the generated subgroup.
inline bool invariant_under(const FiniteGroup& g, const IndexSet& target,
                            std::span<const int> conjugators) {
  for (int c : conjugators) {
    bool ok = true;
    target.for_each([&](int x) {
      if (!target.test(g.conj(x, c))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  return invariant_under(g, h.members, g.generators);
}

/// N_G(H) by element scan; contains H, and H is normal in it.
inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  IndexSet out(g.order());
  for (int c = 0; c < g.order(); ++c) {
    bool ok = true;
    h.members.for_each([&](int x) {
      if (!h.members.test(g.conj(x, c))) ok = false;
    });
    if (ok) out.set(c);
  }
  return make_subgroup(g, std::move(out));
}

/// Intersection of all conjugates of `h` under the subgroup generated by
/// `conjugators`; the largest subgroup of h invariant under it.
inline IndexSet core_under(const FiniteGroup& g, const IndexSet& h,
                           std::span<const int> conjugators) {
  std::unordered_set<IndexSet, IndexSetHash> orbit;
  std::vector<IndexSet> work{h};
  orbit.insert(h);
  IndexSet core = h;
  while (!work.empty()) {
    IndexSet cur = std::move(work.back());
    work.pop_back();
    for (int c : conjugators) {
      IndexSet img = conjugate_set(g, cur, c);
      if (orbit.insert(img).second) {
        core &= img;
        work.push_back(std::move(img));
      }
    }
  }
  return core;
}

/// Largest subgroup of H that is normal in G.
inline Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) {
  return make_subgroup(g, core_under(g, h.members, g.generators));
}

/// Smallest subgroup containing `seed` that is invariant under `conjugators`.
inline IndexSet normal_closure_under(const FiniteGroup& g, const IndexSet& seed,
                                     std::span<const int> conjugators) {
  // Close the conjugate orbit of the seed elements first, then take the
  // generated subgroup; the result is conjugation-invariant.
  IndexSet orbit(g.order());
  std::vector<int> work;
  seed.for_each([&](int x) {
    if (!orbit.test(x)) {
      orbit.set(x);
      work.push_back(x);
    }
  });
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int c : conjugators) {
      int y = g.conj(x, c);
      if (!orbit.test(y)) {
        orbit.set(y);
        work.push_back(y);
      }
    }
  }
  return closure_of(g, orbit);
}

/// Minimal normal subgroups without requiring the full lattice: every minimal
/// normal subgroup is the normal closure of any of its nontrivial elements.
inline std::vector<Subgroup> minimal_normal_subgroups_direct(const FiniteGroup& g) {
  std::vector<IndexSet> closures;
  std::unordered_set<IndexSet, IndexSetHash> seen;
  for (int x = 1; x < g.order(); ++x) {
    IndexSet seed(g.order());
    seed.set(x);
    IndexSet nc = normal_closure_under(g, seed, g.generators);
    if (seen.insert(nc).second) closures.push_back(std::move(nc));
  }
  std::vector<Subgroup> out;
  for (const IndexSet& c : closures) {
    bool minimal = true;
    for (const IndexSet& d : closures) {
      if (d != c && d.subset_of(c)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(make_subgroup(g, c));
  }
  std::sort(out.begin(), out.end(), subgroup_key_less);
  return out;
}

/// The complete subgroup lattice, sorted by (order, member-set lex).
struct Lattice {
  const FiniteGroup* parent = nullptr;
  std::vector<Subgroup> subgroups;
  std::vector<std::vector<int>> generators;  // canonical greedy gens per subgroup
  std::unordered_map<IndexSet, int, IndexSetHash> index_by_members;
  int trivial_index = -1;
  int full_index = -1;

  int size() const { return int(subgroups.size()); }
  int index_of(const IndexSet& members) const {
    auto it = index_by_members.find(members);
    return it == index_by_members.end() ? -1 : it->second;
  }
};

namespace detail {

inline std::vector<int> greedy_generators(const FiniteGroup& g, const IndexSet& members) {
  std::vector<int> gens;
  IndexSet closed(g.order());
  closed.set(0);
  int target = members.count();
  if (target == 1) return gens;
  int have = 1;
  for (int e = 0; e < g.order() && have < target; ++e) {
    if (!members.test(e) || closed.test(e)) continue;
    gens.push_back(e);
    closed = closure_of(g, gens);
    have = closed.count();
  }
  return gens;
}

}  // namespace detail

/// Enumerate every subgroup: seed with all cyclic subgroups, then join pairs
/// to a fixpoint, deduplicating by member set.
inline Lattice all_subgroups(const FiniteGroup& g, int cap = kDefaultLatticeCap) {
  if (g.order() > cap)
    throw CapExceededError("lattice of \"" + g.name + "\" (order " +
                               std::to_string(g.order()) + ") exceeds lattice cap " +
                               std::to_string(cap),
                           g.order());

  std::vector<IndexSet> sets;
  std::vector<std::vector<int>> seed_gens;
  std::unordered_map<IndexSet, int, IndexSetHash> index;

  auto add = [&](IndexSet s, std::vector<int> gens) -> int {
    auto it = index.find(s);
    if (it != index.end()) return -1;
    int id = int(sets.size());
    index.emplace(s, id);
    sets.push_back(std::move(s));
    seed_gens.push_back(std::move(gens));
    return id;
  };

  IndexSet triv(g.order());
  triv.set(0);
  add(std::move(triv), {});
  for (int x = 1; x < g.order(); ++x) {
    IndexSet cyc(g.order());
    int y = 0;
    do {
      cyc.set(y);
      y = g.mul(y, x);
    } while (y != 0);
    add(std::move(cyc), {x});
  }

  std::vector<int> queue;
  for (int i = 0; i < int(sets.size()); ++i) queue.push_back(i);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int i = queue[qi];
    for (int j = 0; j < int(sets.size()); ++j) {
      if (i == j) continue;
      if (sets[i].subset_of(sets[j]) || sets[j].subset_of(sets[i])) continue;
      std::vector<int> gens = seed_gens[i];
      gens.insert(gens.end(), seed_gens[j].begin(), seed_gens[j].end());
      IndexSet join = closure_of(g, gens);
      int id = add(std::move(join), std::move(gens));
      if (id >= 0) queue.push_back(id);
    }
  }

  Lattice lat;
  lat.parent = &g;
  for (IndexSet& s : sets) lat.subgroups.push_back(make_subgroup(g, std::move(s)));
  std::sort(lat.subgroups.begin(), lat.subgroups.end(), subgroup_key_less);
  lat.generators.resize(lat.subgroups.size());
  for (int i = 0; i < lat.size(); ++i) {
    lat.index_by_members.emplace(lat.subgroups[i].members, i);
    lat.generators[i] = detail::greedy_generators(g, lat.subgroups[i].members);
  }
  lat.trivial_index = 0;
  lat.full_index = lat.size() - 1;
  return lat;
}

inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Lattice& lat) {
  std::vector<Subgroup> out;
  for (const Subgroup& h : lat.subgroups)
    if (is_normal(g, h)) out.push_back(h);
  return out;
}

/// Nontrivial normal subgroups containing no smaller nontrivial normal subgroup.
inline std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g,
                                                      const Lattice& lat) {
  std::vector<Subgroup> normals = normal_subgroups(g, lat);
  std::vector<Subgroup> out;
  for (const Subgroup& n : normals) {
    if (n.order == 1) continue;
    bool minimal = true;
    for (const Subgroup& m : normals) {
      if (m.order == 1 || m.members == n.members) continue;
      if (m.members.subset_of(n.members)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

/// All H with π(|H|) ⊆ π and π(|G:H|) ∩ π = ∅; equivalently |H| equals the
/// π-part of |G|. May be empty — Hall subgroups need not exist.
inline std::vector<Subgroup> hall_subgroups(const FiniteGroup& g, const Lattice& lat,
                                            const std::vector<int>& pi) {
  int target = part_for_primes(g.order(), pi);
  std::vector<Subgroup> out;
  for (const Subgroup& h : lat.subgroups)
    if (h.order == target) out.push_back(h);
  return out;
}

inline std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, const Lattice& lat,
                                             int p) {
  return hall_subgroups(g, lat, {p});
}

inline std::vector<int> maximal_subgroup_indices(const Lattice& lat) {
  std::vector<int> out;
  int full = lat.full_index;
  for (int i = 0; i < lat.size(); ++i) {
    if (i == full) continue;
    bool maximal = true;
    for (int j = 0; j < lat.size(); ++j) {
      if (j == i || j == full) continue;
      if (lat.subgroups[i].members.subset_of(lat.subgroups[j].members)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

/// Intersection of all maximal proper subgroups.
inline Subgroup frattini(const FiniteGroup& g, const Lattice& lat) {
  IndexSet acc = g.full_set();
  for (int i : maximal_subgroup_indices(lat)) acc &= lat.subgroups[i].members;
  return make_subgroup(g, std::move(acc));
}

}  // namespace tsigma
