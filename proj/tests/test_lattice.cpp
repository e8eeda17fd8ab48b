#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "tsigma/corpus.hpp"
#include "tsigma/families.hpp"
#include "tsigma/lattice.hpp"
#include "tsigma/products.hpp"

using namespace tsigma;

namespace {

IndexSet seed_of(const FiniteGroup& g, std::initializer_list<int> idx) {
  IndexSet s(g.order());
  for (int i : idx) s.set(i);
  return s;
}

/// First element index whose permutation is a transposition-type involution.
int first_transposition(const FiniteGroup& g) {
  for (int x = 1; x < g.order(); ++x)
    if (g.element_orders[x] == 2) return x;
  return -1;
}

}  // namespace

TEST_CASE("generated subgroups", "[lattice]") {
  FiniteGroup s3 = make_symmetric(3);
  CHECK(generated_subgroup(s3, seed_of(s3, {0})).order == 1);
  int t = first_transposition(s3);
  CHECK(generated_subgroup(s3, seed_of(s3, {t})).order == 2);
  int t2 = -1;
  for (int x = t + 1; x < 6; ++x)
    if (s3.element_orders[x] == 2) t2 = x;
  CHECK(generated_subgroup(s3, seed_of(s3, {t, t2})).order == 6);
}

TEST_CASE("subgroup enumeration", "[lattice]") {
  SECTION("S3 has 6 subgroups, verified against the small-seed oracle") {
    FiniteGroup s3 = make_symmetric(3);
    Lattice lat = all_subgroups(s3);
    auto oracle = oracles::subgroups_by_small_seeds(s3);
    CHECK(lat.subgroups.size() == 6);
    CHECK(oracle.size() == 6);
  }
  SECTION("C_p has exactly two subgroups") {
    for (int p : {2, 3, 5, 7, 11}) {
      FiniteGroup c = make_cyclic(p);
      CHECK(all_subgroups(c).subgroups.size() == 2);
    }
  }
  SECTION("Q8 has 6 subgroups, all normal") {
    FiniteGroup q = make_quaternion8();
    Lattice lat = all_subgroups(q);
    CHECK(lat.subgroups.size() == 6);
    CHECK(normal_subgroups(q, lat).size() == 6);
  }
  SECTION("lattice is sorted by (order, lex) and bounded by Lagrange") {
    FiniteGroup g = build_family("prod(sym:3,cyclic:5)");
    Lattice lat = all_subgroups(g);
    for (std::size_t i = 1; i < lat.subgroups.size(); ++i)
      CHECK(subgroup_key_less(lat.subgroups[i - 1], lat.subgroups[i]));
    for (const Subgroup& h : lat.subgroups) CHECK(g.order() % h.order == 0);
    CHECK(lat.subgroups.front().order == 1);
    CHECK(lat.subgroups.back().order == g.order());
  }
  SECTION("cap is enforced") {
    FiniteGroup s5 = make_symmetric(5);
    CHECK_THROWS_AS(all_subgroups(s5, 100), CapExceededError);
  }
}

TEST_CASE("normality, normalizers, cores", "[lattice]") {
  FiniteGroup s3 = make_symmetric(3);
  Lattice lat = all_subgroups(s3);
  Subgroup a3;
  Subgroup c2;
  for (const Subgroup& h : lat.subgroups) {
    if (h.order == 3) a3 = h;
    if (h.order == 2 && c2.order == 0) c2 = h;
  }

  SECTION("examples in S3") {
    CHECK(is_normal(s3, a3));
    CHECK_FALSE(is_normal(s3, c2));
    CHECK(is_normal(s3, full_subgroup(s3)));
    CHECK(normalizer(s3, c2).members == c2.members);
    CHECK(normalizer(s3, a3).order == 6);
    CHECK(normal_core(s3, c2).order == 1);
    CHECK(normal_core(s3, a3).members == a3.members);
  }

  SECTION("Sylow 2-subgroups of S4 are self-normalizing") {
    FiniteGroup s4 = make_symmetric(4);
    Lattice l4 = all_subgroups(s4);
    auto syl = sylow_subgroups(s4, l4, 2);
    REQUIRE(syl.size() == 3);
    for (const Subgroup& p : syl) {
      CHECK(p.order == 8);
      CHECK(normalizer(s4, p).members == p.members);
    }
  }

  SECTION("core of the C2 factor inside S3 x C5 is trivial") {
    FiniteGroup g = build_family("prod(sym:3,cyclic:5)");
    int t = first_transposition(g);
    Subgroup c2g = generated_subgroup(g, seed_of(g, {t}));
    CHECK(normal_core(g, c2g).order == 1);
    CHECK_FALSE(is_normal(g, c2g));
  }
}

TEST_CASE("normal and minimal normal subgroups", "[lattice]") {
  SECTION("S3") {
    FiniteGroup s3 = make_symmetric(3);
    Lattice lat = all_subgroups(s3);
    auto normals = normal_subgroups(s3, lat);
    REQUIRE(normals.size() == 3);
    CHECK(normals[0].order == 1);
    CHECK(normals[1].order == 3);
    CHECK(normals[2].order == 6);
    auto minimals = minimal_normal_subgroups(s3, lat);
    REQUIRE(minimals.size() == 1);
    CHECK(minimals[0].order == 3);
  }
  SECTION("elementary abelian 2^2 has three minimal normal subgroups") {
    FiniteGroup e = make_elementary_abelian(2, 2);
    Lattice lat = all_subgroups(e);
    CHECK(minimal_normal_subgroups(e, lat).size() == 3);
  }
  SECTION("A5 is its own unique minimal normal subgroup") {
    FiniteGroup a5 = make_alternating(5);
    Lattice lat = all_subgroups(a5);
    auto minimals = minimal_normal_subgroups(a5, lat);
    REQUIRE(minimals.size() == 1);
    CHECK(minimals[0].order == 60);
  }
  SECTION("direct method agrees with the lattice filter") {
    for (const char* spec : {"sym:4", "dihedral:12", "q8", "elab:2,3",
                             "semidirect(cyclic:5,cyclic:4,pow:2)"}) {
      FiniteGroup g = build_family(spec);
      Lattice lat = all_subgroups(g);
      auto direct = minimal_normal_subgroups_direct(g);
      auto filtered = minimal_normal_subgroups(g, lat);
      REQUIRE(direct.size() == filtered.size());
      for (std::size_t i = 0; i < direct.size(); ++i)
        CHECK(direct[i].members == filtered[i].members);
    }
  }
}

TEST_CASE("Hall and Sylow subgroups", "[lattice]") {
  SECTION("Hall {2,3} in S3 x C5 is exactly the S3 factor") {
    FiniteGroup g = build_family("prod(sym:3,cyclic:5)");
    Lattice lat = all_subgroups(g);
    auto halls = hall_subgroups(g, lat, {2, 3});
    REQUIRE(halls.size() == 1);
    CHECK(halls[0].order == 6);
    CHECK(halls[0].members == embedded_left_factor(g, 3));
  }
  SECTION("Hall for the full prime set is G") {
    FiniteGroup g = make_symmetric(4);
    Lattice lat = all_subgroups(g);
    auto halls = hall_subgroups(g, lat, {2, 3});
    REQUIRE(halls.size() == 1);
    CHECK(halls[0].order == 24);
  }
  SECTION("A5 has no Hall {3,5}-subgroup") {
    FiniteGroup a5 = make_alternating(5);
    Lattice lat = all_subgroups(a5);
    CHECK(hall_subgroups(a5, lat, {3, 5}).empty());
  }
  SECTION("Sylow examples and counting") {
    FiniteGroup s3 = make_symmetric(3);
    Lattice l3 = all_subgroups(s3);
    CHECK(sylow_subgroups(s3, l3, 3).size() == 1);
    CHECK(sylow_subgroups(s3, l3, 2).size() == 3);
    FiniteGroup s4 = make_symmetric(4);
    Lattice l4 = all_subgroups(s4);
    auto syl2 = sylow_subgroups(s4, l4, 2);
    CHECK(syl2.size() == 3);
    for (const Subgroup& p : syl2) CHECK(p.order == 8);
  }
}

TEST_CASE("frattini subgroup", "[lattice]") {
  FiniteGroup s3 = make_symmetric(3);
  CHECK(frattini(s3, all_subgroups(s3)).order == 1);
  FiniteGroup q8 = make_quaternion8();
  Subgroup phi = frattini(q8, all_subgroups(q8));
  CHECK(phi.order == 2);
  // the order-2 subgroup of Q8 is its center
  bool central = true;
  phi.members.for_each([&](int x) {
    for (int y = 0; y < q8.order(); ++y)
      if (q8.mul(x, y) != q8.mul(y, x)) central = false;
  });
  CHECK(central);
  FiniteGroup c7 = make_cyclic(7);
  CHECK(frattini(c7, all_subgroups(c7)).order == 1);
}

TEST_CASE("lattice invariants over a small corpus", "[lattice]") {
  std::vector<FiniteGroup> corpus = corpus_builtin(16);
  for (const FiniteGroup& g : corpus) {
    Lattice lat = all_subgroups(g);
    for (const Subgroup& h : lat.subgroups) {
      Subgroup core = normal_core(g, h);
      Subgroup norm = normalizer(g, h);
      CHECK(core.members.subset_of(h.members));
      CHECK(h.members.subset_of(norm.members));
      CHECK(is_normal(g, core));
      // H is normal in its normalizer
      MaterializedSubgroup nm = materialize_subgroup(g, norm.members, "N");
      IndexSet h_local = nm.map_from_parent(h.members);
      CHECK(invariant_under(nm.group, h_local, nm.group.generators));
    }
    // Sylow counting: n_p ≡ 1 mod p
    for (int p : prime_factors(g.order()))
      CHECK(int(sylow_subgroups(g, lat, p).size()) % p == 1);
  }
}

TEST_CASE("enumeration matches the small-seed oracle at order <= 16", "[lattice]") {
  std::vector<FiniteGroup> corpus = corpus_builtin(16);
  for (const FiniteGroup& g : corpus) {
    Lattice lat = all_subgroups(g);
    auto oracle = oracles::subgroups_by_small_seeds(g);
    std::set<std::vector<int>> a, b;
    for (const Subgroup& h : lat.subgroups) a.insert(h.members.members());
    for (const IndexSet& s : oracle) b.insert(s.members());
    CHECK(a == b);
  }
}
