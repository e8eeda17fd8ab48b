#pragma once

#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "tsigma/context.hpp"
#include "tsigma/products.hpp"
#include "tsigma/sigma.hpp"
#include "tsigma/sigma_subnormal.hpp"
#include "tsigma/theorem.hpp"

namespace tsigma {

struct LemmaCheck {
  std::string id;
  std::string description;
  long checks = 0;
  long failure_count = 0;
  std::vector<std::string> failures;  // first few, for reporting

  void fail(const std::string& what) {
    ++failure_count;
    if (failures.size() < 25) failures.push_back(what);
  }
  void pass() { ++checks; }
  bool ok() const { return failure_count == 0; }
};

struct LemmaSuiteReport {
  std::string sigma_spec;
  std::vector<LemmaCheck> lemmas;

  bool all_passed() const {
    for (const LemmaCheck& l : lemmas)
      if (!l.ok()) return false;
    return true;
  }
  long total_checks() const {
    long t = 0;
    for (const LemmaCheck& l : lemmas) t += l.checks;
    return t;
  }
  long total_failures() const {
    long t = 0;
    for (const LemmaCheck& l : lemmas) t += l.failure_count;
    return t;
  }
};

/// Executable property suites for the supporting lemmas: closure laws of the
/// sigma-nilpotent class, the residual quotient law, the sigma-subnormality
/// laws (intersection, image, transitivity, Hall cases), Hall theory in
/// soluble groups, and the Dedekind closure facts.
inline LemmaSuiteReport run_lemma_suites(const std::vector<FiniteGroup>& corpus,
                                         const SigmaPartition& sigma,
                                         int lattice_cap = kDefaultLatticeCap) {
  LemmaSuiteReport rep;
  rep.sigma_spec = sigma.spec();

  LemmaCheck nil_products{"nilpotent-class-products",
                          "joins of normal sigma-nilpotent subgroups are sigma-nilpotent"};
  LemmaCheck nil_quotients{"nilpotent-class-quotients",
                           "quotients of sigma-nilpotent groups are sigma-nilpotent"};
  LemmaCheck nil_subgroups{"nilpotent-class-subgroups",
                           "subgroups of sigma-nilpotent groups are sigma-nilpotent"};
  LemmaCheck nil_frattini{"nilpotent-class-frattini",
                          "normal E with E/(E ∩ Φ(G)) sigma-nilpotent is sigma-nilpotent"};
  LemmaCheck nil_subnormal{"nilpotent-all-subnormal",
                           "in a sigma-nilpotent group every subgroup is sigma-subnormal"};
  LemmaCheck res_quotient{"residual-quotient-law",
                          "the residual of G/N is the image of the residual of G"};
  LemmaCheck sn_intersect{"subnormal-intersection",
                          "A sigma-subnormal in G implies A ∩ K sigma-subnormal in K"};
  LemmaCheck sn_image{"subnormal-quotient-image",
                      "images of sigma-subnormal subgroups are sigma-subnormal"};
  LemmaCheck sn_transitive{"subnormal-transitivity",
                           "sigma-subnormal in sigma-subnormal is sigma-subnormal"};
  LemmaCheck sn_hall{"subnormal-hall-normal",
                     "a sigma-subnormal Hall subgroup on whole blocks is normal"};
  LemmaCheck sn_hall_meet{"subnormal-hall-intersection",
                          "A ∩ H is a Hall block-subgroup of sigma-subnormal A"};
  LemmaCheck hall_exist{"hall-soluble-existence",
                        "soluble groups have Hall pi-subgroups of equal order"};
  LemmaCheck hall_conj{"hall-soluble-conjugacy",
                       "Hall pi-subgroups of soluble groups are conjugate"};
  LemmaCheck hall_contain{"hall-soluble-containment",
                          "every pi-subgroup of a soluble group lies in a Hall pi-subgroup"};
  LemmaCheck ded_nilpotent{"dedekind-nilpotent", "Dedekind groups are nilpotent"};
  LemmaCheck ded_product{"dedekind-product",
                         "a coprime product of Dedekind groups is Dedekind"};
  LemmaCheck ded_hereditary{"dedekind-hereditary",
                            "subgroups and quotients of Dedekind groups are Dedekind"};

  std::vector<bool> group_dedekind(corpus.size(), false);
  int max_order = 1;
  for (const FiniteGroup& g : corpus) max_order = std::max(max_order, g.order());

  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const FiniteGroup& g = corpus[gi];
    GroupContext ctx(g, lattice_cap);
    SigmaAnalysis analysis(ctx, sigma);
    const int s = ctx.sub_count();
    auto tag = [&](const std::string& what) {
      return "group=" + g.name + " sigma=" + sigma.spec() + " " + what;
    };

    bool g_signil = is_sigma_nilpotent(g, sigma);
    group_dedekind[gi] = is_dedekind(g, ctx.lattice());

    std::vector<int> normals = ctx.normal_subgroup_indices();
    std::vector<bool> normal_signil(normals.size());
    for (std::size_t a = 0; a < normals.size(); ++a)
      normal_signil[a] =
          is_sigma_nilpotent_members(g, ctx.sub(normals[a]).members, sigma);

    // Products of normal sigma-nilpotent subgroups.
    for (std::size_t a = 0; a < normals.size(); ++a) {
      if (!normal_signil[a]) continue;
      for (std::size_t b = a + 1; b < normals.size(); ++b) {
        if (!normal_signil[b]) continue;
        std::vector<int> gens = ctx.lattice().generators[normals[a]];
        const std::vector<int>& gb = ctx.lattice().generators[normals[b]];
        gens.insert(gens.end(), gb.begin(), gb.end());
        IndexSet join = closure_of(g, gens);
        if (is_sigma_nilpotent_members(g, join, sigma))
          nil_products.pass();
        else
          nil_products.fail(tag("join of normal subgroups of orders " +
                                std::to_string(ctx.sub(normals[a]).order) + "," +
                                std::to_string(ctx.sub(normals[b]).order)));
      }
    }

    if (g_signil) {
      for (int i : normals) {
        const QuotientMap& q = ctx.quotient_by_normal(i);
        if (is_sigma_nilpotent(q.target, sigma))
          nil_quotients.pass();
        else
          nil_quotients.fail(tag("quotient by order " + std::to_string(ctx.sub(i).order)));
      }
      for (int i = 0; i < s; ++i) {
        if (is_sigma_nilpotent_members(g, ctx.sub(i).members, sigma))
          nil_subgroups.pass();
        else
          nil_subgroups.fail(tag("subgroup of order " + std::to_string(ctx.sub(i).order)));
      }
      const IndexSet& reach = analysis.sigma_subnormal_set();
      if (reach.count() == s)
        nil_subnormal.pass();
      else
        nil_subnormal.fail(tag("only " + std::to_string(reach.count()) + " of " +
                               std::to_string(s) + " subgroups sigma-subnormal"));
    }

    // Frattini clause.
    {
      Subgroup phi = frattini(g, ctx.lattice());
      for (int i : normals) {
        MaterializedSubgroup e =
            materialize_subgroup(g, ctx.sub(i).members, g.name + "|E");
        IndexSet ker = e.map_from_parent(phi.members & ctx.sub(i).members);
        QuotientMap q = quotient_group(e.group, make_subgroup(e.group, ker));
        bool quot_nil = is_sigma_nilpotent(q.target, sigma);
        bool e_nil = is_sigma_nilpotent_members(g, ctx.sub(i).members, sigma);
        if (!quot_nil || e_nil)
          nil_frattini.pass();
        else
          nil_frattini.fail(tag("normal subgroup of order " +
                                std::to_string(ctx.sub(i).order)));
      }
    }

    const IndexSet& reach = analysis.sigma_subnormal_set();

    // Intersections: A ∩ K sigma-subnormal in K.
    for (int k = 0; k < s; ++k) {
      IndexSet reach_k = analysis.sigma_subnormal_in(k);
      reach.for_each([&](int a) {
        IndexSet inter = ctx.sub(a).members & ctx.sub(k).members;
        int idx = ctx.index_of(inter);
        if (idx >= 0 && reach_k.test(idx))
          sn_intersect.pass();
        else
          sn_intersect.fail(tag("A order " + std::to_string(ctx.sub(a).order) +
                                " K order " + std::to_string(ctx.sub(k).order)));
      });
    }

    // Transitivity: reach within a sigma-subnormal A stays inside reach.
    reach.for_each([&](int a) {
      IndexSet reach_a = analysis.sigma_subnormal_in(a);
      if (reach_a.subset_of(reach))
        sn_transitive.pass();
      else
        sn_transitive.fail(tag("inside A of order " + std::to_string(ctx.sub(a).order)));
    });

    // Hall sigma-subnormal subgroups on whole blocks are normal.
    reach.for_each([&](int a) {
      int o = ctx.sub(a).order;
      std::vector<int> bo = sigma.blocks_of(o);
      std::vector<int> bi = sigma.blocks_of(g.order() / o);
      bool aligned = true;
      for (int x : bo)
        for (int y : bi)
          if (x == y) aligned = false;
      if (!aligned) return;
      if (ctx.normal_in_group(a))
        sn_hall.pass();
      else
        sn_hall.fail(tag("Hall sigma-subnormal subgroup of order " + std::to_string(o)));
    });

    // A ∩ H for Hall block-subgroups H != 1.
    for (int b : sigma_of(g, sigma)) {
      std::vector<int> bp = sigma.block_primes_of(b, g.order());
      int hall_order = part_for_primes(g.order(), bp);
      if (hall_order == 1) continue;
      for (int h = 0; h < s; ++h) {
        if (ctx.sub(h).order != hall_order) continue;
        reach.for_each([&](int a) {
          int ao = ctx.sub(a).order;
          if (part_for_primes(ao, bp) == 1) return;  // A is a block'-group
          IndexSet inter = ctx.sub(a).members & ctx.sub(h).members;
          int io = inter.count();
          if (io > 1 && io == part_for_primes(ao, bp))
            sn_hall_meet.pass();
          else
            sn_hall_meet.fail(tag("A order " + std::to_string(ao) + " H order " +
                                  std::to_string(hall_order) + " meet " +
                                  std::to_string(io)));
        });
      }
    }

    // Quotient checks share the materialized quotient and its context.
    for (int ni : normals) {
      const QuotientMap& q = ctx.quotient_by_normal(ni);
      GroupContext tctx(q.target, lattice_cap);
      SigmaAnalysis tana(tctx, sigma);

      Subgroup res_image = image_subgroup(q, analysis.residual());
      if (res_image.members == tana.residual().members)
        res_quotient.pass();
      else
        res_quotient.fail(tag("N order " + std::to_string(ctx.sub(ni).order) +
                              ": image order " + std::to_string(res_image.order) +
                              " vs " + std::to_string(tana.residual().order)));

      const IndexSet& treach = tana.sigma_subnormal_set();
      bool all_ok = true;
      reach.for_each([&](int a) {
        Subgroup img = image_subgroup(q, ctx.sub(a));
        int idx = tctx.index_of(img.members);
        if (idx < 0 || !treach.test(idx)) all_ok = false;
      });
      if (all_ok)
        sn_image.pass();
      else
        sn_image.fail(tag("N order " + std::to_string(ctx.sub(ni).order)));

      if (group_dedekind[gi]) {
        if (is_dedekind(q.target, tctx.lattice()))
          ded_hereditary.pass();
        else
          ded_hereditary.fail(tag("quotient by order " +
                                  std::to_string(ctx.sub(ni).order)));
      }
    }

    // Hall theory in soluble groups.
    if (is_soluble(g)) {
      for (const std::vector<int>& pi : detail::prime_subsets(prime_factors(g.order()))) {
        int target = part_for_primes(g.order(), pi);
        std::vector<int> halls;
        for (int h = 0; h < s; ++h)
          if (ctx.sub(h).order == target) halls.push_back(h);
        if (halls.empty()) {
          hall_exist.fail(tag("no Hall subgroup for pi of part " + std::to_string(target)));
          continue;
        }
        hall_exist.pass();

        std::unordered_set<IndexSet, IndexSetHash> orbit;
        std::vector<IndexSet> work{ctx.sub(halls[0]).members};
        orbit.insert(work[0]);
        while (!work.empty()) {
          IndexSet cur = std::move(work.back());
          work.pop_back();
          for (int c : g.generators) {
            IndexSet img = conjugate_set(g, cur, c);
            if (orbit.insert(img).second) work.push_back(img);
          }
        }
        bool conj_ok = orbit.size() == halls.size();
        for (int h : halls)
          if (!orbit.count(ctx.sub(h).members)) conj_ok = false;
        if (conj_ok)
          hall_conj.pass();
        else
          hall_conj.fail(tag("Hall class of order " + std::to_string(target)));

        for (int k = 0; k < s; ++k) {
          int ko = ctx.sub(k).order;
          if (part_for_primes(ko, pi) != ko) continue;
          bool inside = false;
          for (int h : halls)
            if (ctx.contains(k, h)) inside = true;
          if (inside)
            hall_contain.pass();
          else
            hall_contain.fail(tag("pi-subgroup of order " + std::to_string(ko)));
        }
      }
    }

    // Dedekind facts.
    if (group_dedekind[gi]) {
      if (is_nilpotent(g))
        ded_nilpotent.pass();
      else
        ded_nilpotent.fail(tag("Dedekind but not nilpotent"));
      for (int i = 0; i < s; ++i) {
        if (is_dedekind_members(g, ctx.lattice(), ctx.sub(i).members,
                                ctx.lattice().generators[i]))
          ded_hereditary.pass();
        else
          ded_hereditary.fail(tag("subgroup of order " + std::to_string(ctx.sub(i).order)));
      }
    }
  }

  // Coprime products of Dedekind corpus groups stay Dedekind.
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!group_dedekind[i]) continue;
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      if (!group_dedekind[j]) continue;
      long prod = long(corpus[i].order()) * corpus[j].order();
      if (prod > max_order || prod == 1) continue;
      if (std::gcd(corpus[i].order(), corpus[j].order()) != 1) continue;
      FiniteGroup p = direct_product(corpus[i], corpus[j]);
      Lattice plat = all_subgroups(p, lattice_cap);
      if (is_dedekind(p, plat))
        ded_product.pass();
      else
        ded_product.fail("pair " + corpus[i].name + " x " + corpus[j].name);
    }
  }

  rep.lemmas = {nil_products, nil_quotients, nil_subgroups, nil_frattini,
                nil_subnormal, res_quotient,  sn_intersect,  sn_image,
                sn_transitive, sn_hall,       sn_hall_meet,  hall_exist,
                hall_conj,     hall_contain,  ded_nilpotent, ded_product,
                ded_hereditary};
  return rep;
}

}  // namespace tsigma
