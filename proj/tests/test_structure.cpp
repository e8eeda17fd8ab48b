#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "tsigma/corpus.hpp"
#include "tsigma/families.hpp"
#include "tsigma/products.hpp"
#include "tsigma/structure.hpp"

using namespace tsigma;

TEST_CASE("derived subgroups", "[structure]") {
  FiniteGroup c12 = make_cyclic(12);
  CHECK(derived_subgroup(c12).order == 1);
  FiniteGroup s3 = make_symmetric(3);
  Subgroup d3 = derived_subgroup(s3);
  CHECK(d3.order == 3);
  CHECK(is_normal(s3, d3));
  FiniteGroup s4 = make_symmetric(4);
  Subgroup d4 = derived_subgroup(s4);
  CHECK(d4.order == 12);
  // derived series of A5 stabilizes at A5
  FiniteGroup a5 = make_alternating(5);
  CHECK(derived_subgroup(a5).order == 60);
}

TEST_CASE("abelian, nilpotent, soluble", "[structure]") {
  FiniteGroup c6 = make_cyclic(6);
  CHECK(is_abelian(c6));
  CHECK(is_nilpotent(c6));
  CHECK(is_soluble(c6));

  FiniteGroup s3 = make_symmetric(3);
  CHECK_FALSE(is_abelian(s3));
  CHECK_FALSE(is_nilpotent(s3));
  CHECK(is_soluble(s3));

  FiniteGroup a5 = make_alternating(5);
  CHECK_FALSE(is_abelian(a5));
  CHECK_FALSE(is_nilpotent(a5));
  CHECK_FALSE(is_soluble(a5));

  SECTION("normal-Sylow nilpotency agrees with the upper central series") {
    for (const FiniteGroup& g : corpus_builtin(48))
      CHECK(is_nilpotent(g) == oracles::nilpotent_by_upper_central_series(g));
  }
}

TEST_CASE("Dedekind groups", "[structure]") {
  FiniteGroup q8 = make_quaternion8();
  CHECK(is_dedekind(q8, all_subgroups(q8)));
  FiniteGroup c12 = make_cyclic(12);
  CHECK(is_dedekind(c12, all_subgroups(c12)));
  FiniteGroup s3 = make_symmetric(3);
  CHECK_FALSE(is_dedekind(s3, all_subgroups(s3)));

  SECTION("Dedekind implies nilpotent across the corpus") {
    for (const FiniteGroup& g : corpus_builtin(36)) {
      Lattice lat = all_subgroups(g);
      if (is_dedekind(g, lat)) CHECK(is_nilpotent(g));
    }
  }
  SECTION("odd-order Dedekind groups are abelian") {
    for (const FiniteGroup& g : corpus_builtin(60)) {
      if (g.order() % 2 == 0) continue;
      Lattice lat = all_subgroups(g);
      if (is_dedekind(g, lat)) CHECK(is_abelian(g));
    }
  }
}

TEST_CASE("nilpotent residual", "[structure]") {
  FiniteGroup q8 = make_quaternion8();
  CHECK(nilpotent_residual(q8).order == 1);

  FiniteGroup s3 = make_symmetric(3);
  Subgroup r3 = nilpotent_residual(s3);
  CHECK(r3.order == 3);
  CHECK(r3.members == derived_subgroup(s3).members);

  FiniteGroup g = build_family("prod(sym:3,cyclic:5)");
  Subgroup rg = nilpotent_residual(g);
  CHECK(rg.order == 3);
  CHECK(rg.members.subset_of(embedded_left_factor(g, 3)));

  SECTION("lower-central form equals the intersection-of-normals form") {
    for (const FiniteGroup& c : corpus_builtin(48)) {
      GroupContext ctx(c);
      CHECK(nilpotent_residual(c).members ==
            oracles::nilpotent_residual_by_intersection(c, ctx));
    }
  }
}

TEST_CASE("chief series", "[structure]") {
  SECTION("C6 picks the order-2 factor first") {
    FiniteGroup c6 = make_cyclic(6);
    ChiefSeries cs = chief_series(c6);
    REQUIRE(cs.factor_orders.size() == 2);
    CHECK(cs.factor_orders[0] == 2);
    CHECK(cs.factor_orders[1] == 3);
  }
  SECTION("S4 climbs 1 < V4 < A4 < S4") {
    FiniteGroup s4 = make_symmetric(4);
    ChiefSeries cs = chief_series(s4);
    CHECK(cs.factor_orders == std::vector<int>{4, 3, 2});
    for (const Subgroup& t : cs.terms) CHECK(is_normal(s4, t));
  }
  SECTION("a simple group has a single factor") {
    FiniteGroup a5 = make_alternating(5);
    ChiefSeries cs = chief_series(a5);
    CHECK(cs.factor_orders == std::vector<int>{60});
  }
  SECTION("factor multiset does not depend on the tie-break") {
    for (const FiniteGroup& g : corpus_builtin(36)) {
      auto a = chief_series(g, ChiefTieBreak::kSmallestKey).factor_orders;
      auto b = chief_series(g, ChiefTieBreak::kLargestKey).factor_orders;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
  SECTION("consecutive terms have no normal subgroup strictly between") {
    FiniteGroup g = build_family("prod(dihedral:6,cyclic:2)");
    ChiefSeries cs = chief_series(g);
    Lattice lat = all_subgroups(g);
    auto normals = normal_subgroups(g, lat);
    for (std::size_t k = 0; k + 1 < cs.terms.size(); ++k) {
      for (const Subgroup& n : normals) {
        bool above = cs.terms[k].members.subset_of(n.members);
        bool below = n.members.subset_of(cs.terms[k + 1].members);
        if (above && below)
          CHECK((n.order == cs.terms[k].order || n.order == cs.terms[k + 1].order));
      }
    }
  }
}

TEST_CASE("power automorphisms", "[structure]") {
  FiniteGroup s3 = make_symmetric(3);
  CHECK(power_automorphism_on(s3, derived_subgroup(s3)));

  FiniteGroup c12 = make_cyclic(12);
  CHECK(power_automorphism_on(c12, full_subgroup(c12)));

  FiniteGroup s4 = make_symmetric(4);
  Lattice lat = all_subgroups(s4);
  Subgroup v4 = minimal_normal_subgroups(s4, lat)[0];
  CHECK_FALSE(power_automorphism_on(s4, v4));

  SECTION("cyclic-subgroup form agrees with elementwise conjugation") {
    for (const FiniteGroup& g : corpus_builtin(24)) {
      Lattice l = all_subgroups(g);
      for (const Subgroup& d : normal_subgroups(g, l)) {
        bool direct = true;
        d.members.for_each([&](int x) {
          int seed[1] = {x};
          IndexSet cyc = closure_of(g, std::span<const int>(seed, 1));
          for (int y = 0; y < g.order() && direct; ++y)
            if (!cyc.test(g.conj(x, y))) direct = false;
        });
        CHECK(power_automorphism_on(g, d) == direct);
      }
    }
  }
}

TEST_CASE("soluble T-group criterion", "[structure]") {
  FiniteGroup s3 = make_symmetric(3);
  CHECK(gaschutz_check(s3, all_subgroups(s3)));
  FiniteGroup s4 = make_symmetric(4);
  CHECK_FALSE(gaschutz_check(s4, all_subgroups(s4)));
  FiniteGroup q8 = make_quaternion8();
  CHECK(gaschutz_check(q8, all_subgroups(q8)));
  FiniteGroup c30 = make_cyclic(30);
  CHECK(gaschutz_check(c30, all_subgroups(c30)));
}

TEST_CASE("classical subnormality and T-groups", "[structure]") {
  FiniteGroup s3 = make_symmetric(3);
  Lattice l3 = all_subgroups(s3);
  int subnormal_count = 0;
  for (const Subgroup& h : l3.subgroups)
    if (is_subnormal(s3, h)) ++subnormal_count;
  CHECK(subnormal_count == 3);  // 1, A3, S3
  CHECK(is_t_group(s3, l3));

  FiniteGroup s4 = make_symmetric(4);
  Lattice l4 = all_subgroups(s4);
  CHECK_FALSE(is_t_group(s4, l4));

  FiniteGroup a5 = make_alternating(5);
  Lattice l5 = all_subgroups(a5);
  CHECK(is_t_group(a5, l5));  // simple: subnormal = {1, A5}

  SECTION("normal subgroups are subnormal; subnormal subgroups of nilpotent groups are everything") {
    FiniteGroup d8 = make_dihedral(8);
    Lattice l = all_subgroups(d8);
    for (const Subgroup& h : l.subgroups) CHECK(is_subnormal(d8, h));
  }
}
