#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsigma/errors.hpp"
#include "tsigma/group.hpp"
#include "tsigma/iset.hpp"

namespace tsigma {

/// A x B acting disjointly on degree(A) + degree(B) points.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  int cap = kDefaultGroupCap) {
  long total = long(a.order()) * b.order();
  if (total > cap)
    throw CapExceededError("direct product order " + std::to_string(total) +
                               " exceeds cap " + std::to_string(cap),
                           std::size_t(total));
  int da = a.degree, db = b.degree;
  std::vector<Perm> gens;
  for (int gi : a.generators) {
    Perm p = Perm::identity(da + db);
    for (int i = 0; i < da; ++i) p.images[i] = a.elements[gi].images[i];
    gens.push_back(std::move(p));
  }
  for (int gi : b.generators) {
    Perm p = Perm::identity(da + db);
    for (int i = 0; i < db; ++i)
      p.images[da + i] = std::uint16_t(da + b.elements[gi].images[i]);
    gens.push_back(std::move(p));
  }
  return build_from_generators(da + db, gens,
                               "prod(" + a.name + "," + b.name + ")", cap);
}

/// Elements acting only on the first factor's points.
inline IndexSet embedded_left_factor(const FiniteGroup& p, int left_degree) {
  IndexSet out(p.order());
  for (int e = 0; e < p.order(); ++e) {
    bool fixes_right = true;
    for (int i = left_degree; i < p.degree; ++i)
      if (p.elements[e].images[i] != i) fixes_right = false;
    if (fixes_right) out.set(e);
  }
  return out;
}

inline IndexSet embedded_right_factor(const FiniteGroup& p, int left_degree) {
  IndexSet out(p.order());
  for (int e = 0; e < p.order(); ++e) {
    bool fixes_left = true;
    for (int i = 0; i < left_degree; ++i)
      if (p.elements[e].images[i] != i) fixes_left = false;
    if (fixes_left) out.set(e);
  }
  return out;
}

/// An automorphism of N given by the images (element indices of N) of N's
/// generators, in generator order.
using AutomorphismSpec = std::vector<int>;

namespace detail {

/// Extend generator images to a full map N -> N by following a BFS spanning
/// tree, then verify the result is an automorphism.
inline std::vector<int> complete_automorphism(const FiniteGroup& n,
                                              const AutomorphismSpec& spec) {
  if (spec.size() != n.generators.size())
    throw ValidationError("automorphism spec must give one image per generator of " +
                          n.name);
  std::vector<int> img(n.order(), -1);
  img[0] = 0;
  std::vector<int> work{0};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (std::size_t k = 0; k < n.generators.size(); ++k) {
      int y = n.mul(x, n.generators[k]);
      if (img[y] < 0) {
        img[y] = n.mul(img[x], spec[k]);
        work.push_back(y);
      }
    }
  }
  std::vector<bool> hit(n.order(), false);
  for (int x = 0; x < n.order(); ++x) {
    if (img[x] < 0 || hit[img[x]])
      throw ValidationError("action image is not an automorphism of " + n.name +
                            " (not bijective)");
    hit[img[x]] = true;
  }
  for (int x = 0; x < n.order(); ++x)
    for (int y = 0; y < n.order(); ++y)
      if (img[n.mul(x, y)] != n.mul(img[x], img[y]))
        throw ValidationError("action image is not an automorphism of " + n.name +
                              " (not multiplicative)");
  return img;
}

}  // namespace detail

/// N x| H for an action of H on N given per H-generator. The action must be a
/// homomorphism into Aut(N); any violation is reported as an error. The
/// product is realized by its regular representation (degree |N|*|H|).
inline FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                                      const std::vector<AutomorphismSpec>& action,
                                      int cap = kDefaultGroupCap) {
  if (action.size() != h.generators.size())
    throw ValidationError("semidirect action must give one automorphism per generator of " +
                          h.name);
  long total = long(n.order()) * h.order();
  if (total > cap)
    throw CapExceededError("semidirect product order " + std::to_string(total) +
                               " exceeds cap " + std::to_string(cap),
                           std::size_t(total));

  std::vector<std::vector<int>> gen_auts;
  for (const AutomorphismSpec& spec : action)
    gen_auts.push_back(detail::complete_automorphism(n, spec));

  // phi_{x*y} = phi_x . phi_y (apply phi_y first), extended along a BFS tree.
  std::vector<std::vector<int>> phi(h.order());
  {
    std::vector<int> id(n.order());
    for (int i = 0; i < n.order(); ++i) id[i] = i;
    phi[0] = std::move(id);
    std::vector<int> work{0};
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (std::size_t k = 0; k < h.generators.size(); ++k) {
        int y = h.mul(x, h.generators[k]);
        if (!phi[y].empty()) continue;
        std::vector<int> m(n.order());
        for (int b = 0; b < n.order(); ++b) m[b] = phi[x][gen_auts[k][b]];
        phi[y] = std::move(m);
        work.push_back(y);
      }
    }
  }
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y) {
      int xy = h.mul(x, y);
      for (int b = 0; b < n.order(); ++b)
        if (phi[xy][b] != phi[x][phi[y][b]])
          throw ValidationError("semidirect action is not a homomorphism from " +
                                h.name + " into Aut(" + n.name + ")");
    }

  // Points are pairs (a, x) = a*|H| + x; (a,x)(b,y) = (a * phi_x(b), x*y).
  const int ho = h.order();
  auto pair_mul = [&](int p, int b, int y) {
    int a = p / ho, x = p % ho;
    return n.mul(a, phi[x][b]) * ho + h.mul(x, y);
  };
  std::vector<Perm> gens;
  int deg = n.order() * ho;
  for (int gi : n.generators) {
    Perm p;
    p.images.resize(deg);
    for (int pt = 0; pt < deg; ++pt) p.images[pt] = std::uint16_t(pair_mul(pt, gi, 0));
    gens.push_back(std::move(p));
  }
  for (int gi : h.generators) {
    Perm p;
    p.images.resize(deg);
    for (int pt = 0; pt < deg; ++pt) p.images[pt] = std::uint16_t(pair_mul(pt, 0, gi));
    gens.push_back(std::move(p));
  }
  return build_from_generators(deg, gens,
                               "semidirect(" + n.name + "," + h.name + ")", cap);
}

/// The embedded copy of N inside a semidirect product built by
/// semidirect_product (regular points are pairs (a, x) = a*|H| + x, and an
/// element's pair is where it sends point 0).
inline IndexSet semidirect_kernel_members(const FiniteGroup& p, int h_order) {
  IndexSet out(p.order());
  for (int e = 0; e < p.order(); ++e)
    if (p.elements[e].images[0] % h_order == 0) out.set(e);
  return out;
}

inline IndexSet semidirect_complement_members(const FiniteGroup& p, int h_order) {
  IndexSet out(p.order());
  for (int e = 0; e < p.order(); ++e)
    if (p.elements[e].images[0] / h_order == 0) out.set(e);
  return out;
}

}  // namespace tsigma
