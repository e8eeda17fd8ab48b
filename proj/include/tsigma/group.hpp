#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tsigma/errors.hpp"
#include "tsigma/iset.hpp"
#include "tsigma/perm.hpp"

namespace tsigma {

inline constexpr int kDefaultGroupCap = 512;

/// A concrete finite permutation group with complete multiplication and
/// inverse tables. Immutable after construction; element 0 is the identity.
struct FiniteGroup {
  std::string name;
  int degree = 1;
  std::vector<Perm> elements;
  std::vector<std::uint16_t> mul_table;  // order x order, row-major
  std::vector<std::uint16_t> inv_table;
  std::vector<std::uint16_t> element_orders;
  std::vector<int> generators;  // indices into elements

  int order() const { return int(elements.size()); }

  int mul(int i, int j) const {
    return mul_table[std::size_t(i) * elements.size() + std::size_t(j)];
  }
  int inv(int i) const { return inv_table[i]; }

  /// g^-1 * x * g
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }

  /// x^-1 * y^-1 * x * y
  int commutator(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  int power(int x, int k) const {
    int r = 0;
    for (int i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }

  int element_index(const Perm& p) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == p) return int(i);
    return -1;
  }

  IndexSet full_set() const {
    IndexSet s(order());
    for (int i = 0; i < order(); ++i) s.set(i);
    return s;
  }
};

namespace detail {

/// Finish a group whose element list is already fixed (identity at index 0):
/// multiplication/inverse tables, element orders, generator indices.
inline FiniteGroup assemble_group(std::string name, int degree,
                                  std::vector<Perm> elements,
                                  const std::vector<Perm>& gen_perms) {
  if (elements.empty() || !elements[0].is_identity())
    throw ValidationError("internal: identity must be element 0");
  FiniteGroup g;
  g.name = std::move(name);
  g.degree = degree;
  g.elements = std::move(elements);
  const int n = g.order();

  std::unordered_map<Perm, int, PermHash> index;
  index.reserve(n * 2);
  for (int i = 0; i < n; ++i) index.emplace(g.elements[i], i);

  g.mul_table.resize(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto it = index.find(compose(g.elements[i], g.elements[j]));
      if (it == index.end())
        throw ValidationError("element set is not closed under composition");
      g.mul_table[std::size_t(i) * n + j] = std::uint16_t(it->second);
    }
  }

  g.inv_table.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.mul(i, j) == 0) {
        g.inv_table[i] = std::uint16_t(j);
        break;
      }
    }
  }

  g.element_orders.resize(n);
  for (int i = 0; i < n; ++i) {
    int k = 1, y = i;
    while (y != 0) {
      y = g.mul(y, i);
      ++k;
    }
    g.element_orders[i] = std::uint16_t(k);
  }

  for (const Perm& p : gen_perms) {
    auto it = index.find(p);
    if (it == index.end())
      throw ValidationError("generator missing from element list");
    if (std::find(g.generators.begin(), g.generators.end(), it->second) ==
        g.generators.end())
      g.generators.push_back(it->second);
  }
  return g;
}

}  // namespace detail

/// Close a generating set of permutations into a full group.
///
/// Elements end up sorted lexicographically by image sequence, which puts the
/// identity at index 0 and makes the construction deterministic.
inline FiniteGroup build_from_generators(int degree, const std::vector<Perm>& gens,
                                         std::string name,
                                         int cap = kDefaultGroupCap) {
  if (degree < 1) throw ValidationError("degree must be at least 1");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].degree() != degree || !gens[k].is_valid())
      throw ValidationError("generator #" + std::to_string(k) +
                            " is not a permutation of " + std::to_string(degree) +
                            " points");
  }

  std::unordered_map<Perm, int, PermHash> seen;
  std::vector<Perm> todo;
  Perm id = Perm::identity(degree);
  seen.emplace(id, 0);
  todo.push_back(id);
  for (std::size_t next = 0; next < todo.size(); ++next) {
    Perm cur = todo[next];
    for (const Perm& gen : gens) {
      Perm prod = compose(cur, gen);
      if (seen.emplace(prod, int(seen.size())).second) {
        if (int(seen.size()) > cap)
          throw CapExceededError("closure of \"" + name + "\" exceeds order cap " +
                                     std::to_string(cap),
                                 seen.size());
        todo.push_back(std::move(prod));
      }
    }
  }

  std::sort(todo.begin(), todo.end());
  return detail::assemble_group(std::move(name), degree, std::move(todo), gens);
}

/// Smallest k >= 1 with x^k = identity.
inline int element_order(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order()) throw ValidationError("element index out of range");
  return g.element_orders[x];
}

/// A subgroup extracted into a standalone FiniteGroup, with the local-to-parent
/// element index map.
struct MaterializedSubgroup {
  FiniteGroup group;
  std::vector<std::uint16_t> to_parent;

  /// Restrict a parent-indexed set to local indices.
  IndexSet map_from_parent(const IndexSet& parent_set) const {
    IndexSet out(group.order());
    for (int i = 0; i < group.order(); ++i)
      if (parent_set.test(to_parent[i])) out.set(i);
    return out;
  }
  IndexSet map_to_parent(const IndexSet& local_set, int parent_order) const {
    IndexSet out(parent_order);
    local_set.for_each([&](int i) { out.set(to_parent[i]); });
    return out;
  }
};

inline MaterializedSubgroup materialize_subgroup(const FiniteGroup& g,
                                                 const IndexSet& members,
                                                 std::string name) {
  std::vector<Perm> elems;
  members.for_each([&](int i) { elems.push_back(g.elements[i]); });
  std::sort(elems.begin(), elems.end());

  MaterializedSubgroup out;
  out.group = detail::assemble_group(std::move(name), g.degree, std::move(elems), {});
  out.to_parent.resize(out.group.order());
  for (int i = 0; i < out.group.order(); ++i) {
    int pi = g.element_index(out.group.elements[i]);
    out.to_parent[i] = std::uint16_t(pi);
  }
  // Greedy generating set: scan elements, keep any that enlarge the closure.
  IndexSet closed(out.group.order());
  closed.set(0);
  int have = 1;
  for (int e = 1; e < out.group.order() && have < out.group.order(); ++e) {
    if (closed.test(e)) continue;
    out.group.generators.push_back(e);
    std::vector<int> worklist = closed.members();
    closed.set(e);
    worklist.push_back(e);
    while (!worklist.empty()) {
      int x = worklist.back();
      worklist.pop_back();
      for (int gen : out.group.generators) {
        int y = out.group.mul(x, gen);
        if (!closed.test(y)) {
          closed.set(y);
          worklist.push_back(y);
        }
        y = out.group.mul(gen, x);
        if (!closed.test(y)) {
          closed.set(y);
          worklist.push_back(y);
        }
      }
    }
    have = closed.count();
  }
  return out;
}

}  // namespace tsigma
