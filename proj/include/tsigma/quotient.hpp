#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsigma/errors.hpp"
#include "tsigma/group.hpp"
#include "tsigma/lattice.hpp"

namespace tsigma {

/// G -> G/N with the kernel, the materialized quotient, and the fiber map.
/// Coset i of the source is element i of the target.
struct QuotientMap {
  const FiniteGroup* source = nullptr;
  Subgroup kernel;
  FiniteGroup target;
  std::vector<std::uint16_t> fiber;  // source element -> target element (= coset id)
};

/// Build G/N on its coset space, acting on cosets by right multiplication.
/// Cosets are numbered by smallest member index, so the kernel is coset 0.
inline QuotientMap quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n))
    throw ValidationError("quotient kernel is not normal in " + g.name);

  const int order = g.order();
  QuotientMap q;
  q.source = &g;
  q.kernel = n;
  q.fiber.assign(order, std::uint16_t(0xffff));

  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (q.fiber[x] != 0xffff) continue;
    int id = int(reps.size());
    reps.push_back(x);
    n.members.for_each([&](int k) { q.fiber[g.mul(k, x)] = std::uint16_t(id); });
  }

  const int m = int(reps.size());
  std::vector<std::uint16_t> coset_mul(std::size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      coset_mul[std::size_t(a) * m + b] = q.fiber[g.mul(reps[a], reps[b])];

  // Regular action of the quotient on its cosets: element c maps d -> d*c.
  std::vector<Perm> elems(m);
  for (int c = 0; c < m; ++c) {
    elems[c].images.resize(m);
    for (int d = 0; d < m; ++d)
      elems[c].images[d] = coset_mul[std::size_t(d) * m + c];
  }

  std::vector<Perm> gen_perms;
  for (int gen : g.generators) gen_perms.push_back(elems[q.fiber[gen]]);

  q.target = detail::assemble_group(g.name + "/" + std::to_string(n.order), m,
                                    std::move(elems), gen_perms);
  return q;
}

/// Image of H under the projection; equals HN/N.
inline Subgroup image_subgroup(const QuotientMap& q, const Subgroup& h) {
  IndexSet out(q.target.order());
  h.members.for_each([&](int x) { out.set(q.fiber[x]); });
  return make_subgroup(q.target, std::move(out));
}

/// Full preimage of a subgroup of the target; contains the kernel.
inline Subgroup preimage_subgroup(const QuotientMap& q, const Subgroup& k) {
  IndexSet out(q.source->order());
  for (int x = 0; x < q.source->order(); ++x)
    if (k.members.test(q.fiber[x])) out.set(x);
  return make_subgroup(*q.source, std::move(out));
}

}  // namespace tsigma
