#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "tsigma/families.hpp"
#include "tsigma/group.hpp"
#include "tsigma/products.hpp"

namespace tsigma {

/// Deterministic built-in corpus: cyclic and dihedral groups, elementary
/// abelians, small symmetric/alternating groups, the quaternion group, a few
/// named semidirect products, and all pairwise direct products that fit under
/// max_order. Isomorphic duplicates are fine; identical construction strings
/// are deduplicated. Products with the trivial group add nothing and are
/// skipped.
inline std::vector<FiniteGroup> corpus_builtin(int max_order,
                                               int cap = kDefaultGroupCap) {
  std::vector<FiniteGroup> base;
  std::unordered_set<std::string> names;
  auto add = [&](FiniteGroup g) {
    if (names.insert(g.name).second) base.push_back(std::move(g));
  };

  for (int n = 1; n <= max_order; ++n) add(make_cyclic(n, cap));
  for (int n = 3; 2 * n <= max_order; ++n) add(make_dihedral(2 * n, cap));
  for (int p : {2, 3, 5, 7}) {
    for (int k = 2;; ++k) {
      long o = 1;
      for (int t = 0; t < k; ++t) o *= p;
      if (o > max_order) break;
      add(make_elementary_abelian(p, k, cap));
    }
  }
  if (max_order >= 6) add(make_symmetric(3, cap));
  if (max_order >= 24) add(make_symmetric(4, cap));
  if (max_order >= 12) add(make_alternating(4, cap));
  if (max_order >= 60) add(make_alternating(5, cap));
  if (max_order >= 8) add(make_quaternion8(cap));
  if (max_order >= 30) add(build_family("prod(sym:3,cyclic:5)", cap));
  if (max_order >= 12) add(build_family("semidirect(cyclic:3,cyclic:4,inv)", cap));
  if (max_order >= 21) add(build_family("semidirect(cyclic:7,cyclic:3,pow:2)", cap));
  if (max_order >= 20) add(build_family("semidirect(cyclic:5,cyclic:4,pow:2)", cap));

  std::vector<FiniteGroup> out = base;
  int nbase = int(base.size());
  for (int i = 0; i < nbase; ++i) {
    if (base[i].order() == 1) continue;
    for (int j = i; j < nbase; ++j) {
      if (base[j].order() == 1) continue;
      if (long(base[i].order()) * base[j].order() > max_order) continue;
      FiniteGroup p = direct_product(base[i], base[j], cap);
      if (names.insert(p.name).second) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace tsigma
