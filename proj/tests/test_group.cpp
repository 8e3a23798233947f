#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "sanlib/construct.hpp"
#include "sanlib/group.hpp"
#include "sanlib/series.hpp"
#include "test_support.hpp"

using namespace sanlib;
using namespace sanlib::testing;

namespace {

std::vector<Element> raw_table(const FiniteGroup& g) {
  return {g.table().begin(), g.table().end()};
}

GroupMap power(const FiniteGroup& c, std::size_t k) {
  GroupMap m;
  for (Element e = 0; e < c.order(); ++e) m.images.push_back(c.power(e, static_cast<long long>(k)));
  return m;
}

}  // namespace

TEST_CASE("validate accepts constructed groups and reports broken tables") {
  CHECK_FALSE(validate(cyclic(6)));
  CHECK_FALSE(validate(symmetric(3)));

  auto t = raw_table(cyclic(6));
  std::rotate(t.begin() + 6, t.begin() + 7, t.begin() + 12);  // scramble row 1
  const auto v = validate_table(6, t);
  REQUIRE(v);
  CHECK((v->law == "identity" || v->law == "associativity" || v->law == "inverse"));
  CHECK_FALSE(v->describe().empty());
  CHECK_THROWS_AS(FiniteGroup("bad", 6, t), PreconditionError);

  auto out_of_range = raw_table(cyclic(3));
  out_of_range[4] = 7;
  REQUIRE(validate_table(3, out_of_range));
  CHECK(validate_table(3, out_of_range)->law == "range");
  CHECK(validate_table(3, std::vector<Element>(8, 0))->law == "shape");
}

TEST_CASE("S3 from permutation generators is a valid group with the right order") {
  const auto pg = s3_perms();
  CHECK(pg.group.order() == 6);
  CHECK_FALSE(validate(pg.group));
  CHECK(is_isomorphic(pg.group, symmetric(3)));
  CHECK_THROWS_AS(from_permutations("bad", 3, {{0, 0, 1}}), PreconditionError);
}

TEST_CASE("closure") {
  const auto pg = s3_perms();
  const Element c3 = index_of(pg, {1, 2, 0});
  CHECK(gen(pg.group, {c3}).order() == 3);
  CHECK(gen(pg.group, {}).is_trivial());

  const auto q8 = generalized_quaternion(8);
  const Element i = 1, j = 4;
  CHECK(gen(q8, {i, j}).is_whole());
  CHECK_THROWS_AS(gen(q8, {8}), std::out_of_range);
}

TEST_CASE("conjugate_subgroup") {
  const auto pg = s3_perms();
  const auto& g = pg.group;
  const Element t12 = index_of(pg, {1, 0, 2});
  const Element t23 = index_of(pg, {0, 2, 1});
  const Element c = index_of(pg, {1, 2, 0});
  const Subgroup h = gen(g, {t12});
  // The conjugate by a 3-cycle is the subgroup generated by another transposition.
  const Subgroup conj = conjugate_subgroup(h, c);
  CHECK(conj.order() == 2);
  CHECK(conj != h);
  CHECK((conj == gen(g, {t23}) || conj == gen(g, {g.mul(t12, t23)})));
  CHECK(conjugate_subgroup(h, g.identity()) == h);

  const auto q8 = generalized_quaternion(8);
  const Subgroup z = center(q8);
  for (Element x = 0; x < q8.order(); ++x) CHECK(conjugate_subgroup(z, x) == z);
}

TEST_CASE("is_normal and normal_closure") {
  const auto pg = s3_perms();
  const auto& g = pg.group;
  const Subgroup all = whole_group(g);
  const Subgroup a3 = gen(g, {index_of(pg, {1, 2, 0})});
  const Subgroup t = gen(g, {index_of(pg, {1, 0, 2})});
  CHECK(is_normal(a3, all));
  CHECK_FALSE(is_normal(t, all));
  CHECK(is_normal(t, t));
  CHECK(normal_closure(t, all) == all);
  CHECK(normal_closure(a3, all) == a3);
  CHECK_THROWS_AS(is_normal(all, t), PreconditionError);

  const auto d4 = dihedral(8);
  const Element r = 1, s = 4;
  const Subgroup nc = normal_closure(gen(d4, {s}), whole_group(d4));
  CHECK(nc.order() == 4);
  CHECK(nc == gen(d4, {s, d4.mul(r, r)}));
}

TEST_CASE("subnormal_defect") {
  const auto d4 = dihedral(8);
  const Element r = 1, s = 4;
  const Subgroup all = whole_group(d4);
  CHECK(subnormal_defect(gen(d4, {r}), all) == 1);
  CHECK(subnormal_defect(gen(d4, {s}), all) == 2);
  CHECK(subnormal_defect(all, all) == 0);

  const auto pg = s3_perms();
  CHECK_FALSE(subnormal_defect(gen(pg.group, {index_of(pg, {1, 0, 2})})));

  for (std::size_t k : {3u, 4u, 5u}) {
    const auto d = dihedral(std::size_t{1} << k);
    const Element refl = static_cast<Element>(d.order() / 2);
    CHECK(subnormal_defect(gen(d, {refl})) == k - 1);
  }
}

TEST_CASE("defect at most one exactly when normal") {
  for (const auto& g : {dihedral(16), sl23(), symmetric(4), generalized_quaternion(16)}) {
    const auto lattice = all_subgroups(g);
    for (const auto& k : lattice)
      for (const auto& h : lattice) {
        if (!h.is_subset_of(k)) continue;
        const auto d = subnormal_defect(h, k);
        CHECK((d && *d <= 1) == is_normal(h, k));
      }
  }
}

TEST_CASE("centralizer and center") {
  const auto q8 = generalized_quaternion(8);
  const auto all_q8 = q8.all_elements();
  const Subgroup z = centralizer(q8, all_q8, whole_group(q8));
  CHECK(z.elements() == std::vector<Element>{0, 2});
  CHECK(center(q8) == z);

  const auto c12 = cyclic(12);
  CHECK(centralizer(c12, std::vector<Element>{5}, whole_group(c12)).is_whole());

  const auto pg = s3_perms();
  const Element c = index_of(pg, {1, 2, 0});
  CHECK(centralizer(pg.group, std::vector<Element>{c}, whole_group(pg.group)) == gen(pg.group, {c}));
}

TEST_CASE("all_subgroups agrees with subset enumeration on small groups") {
  std::vector<FiniteGroup> groups = {cyclic(1), symmetric(3), generalized_quaternion(8),
                                     dihedral(8), cyclic(12), alternating(4),
                                     elementary_abelian(2, 3), dihedral(12),
                                     generalized_quaternion(16), dihedral(16),
                                     metacyclic(7, 3, 2)};
  for (const auto& g : groups) {
    CAPTURE(g.name());
    const auto lattice = all_subgroups(g);
    const auto oracle = subset_subgroups(g);
    REQUIRE(lattice.size() == oracle.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) CHECK(lattice[i].elements() == oracle[i]);
  }
}

TEST_CASE("all_subgroups counts and cap") {
  CHECK(all_subgroups(symmetric(3)).size() == 6);
  CHECK(all_subgroups(generalized_quaternion(8)).size() == 6);
  CHECK(all_subgroups(cyclic(12)).size() == 6);
  CHECK(all_subgroups(symmetric(4)).size() == 30);
  CHECK(all_subgroups(alternating(5)).size() == 59);
  Limits tight;
  tight.max_subgroup_lattice = 10;
  CHECK_THROWS_AS(all_subgroups(cyclic(12), tight), CapExceeded);
}

TEST_CASE("sylow_subgroup") {
  const auto pg = s3_perms();
  CHECK(sylow_subgroup(pg.group, 3) == gen(pg.group, {index_of(pg, {1, 2, 0})}));
  CHECK(sylow_subgroup(pg.group, 5).is_trivial());
  const auto sl = sylow_subgroup(sl23(), 2);
  CHECK(sl.order() == 8);
  CHECK(is_isomorphic(as_group(sl), generalized_quaternion(8)));
  CHECK(sylow_subgroup(symmetric(5), 2).order() == 8);
  CHECK(sylow_subgroup(symmetric(5), 5).order() == 5);
}

TEST_CASE("quotient") {
  const auto pg = s3_perms();
  const auto q = quotient(gen(pg.group, {index_of(pg, {1, 2, 0})}));
  CHECK(is_isomorphic(q.group, cyclic(2)));
  CHECK(is_homomorphism(pg.group, q.group, q.projection));

  const auto d12 = dihedral(12);
  CHECK(is_isomorphic(quotient(trivial_subgroup(d12)).group, d12));

  const auto d4 = dihedral(8);
  const auto k = quotient(center(d4));
  CHECK(is_isomorphic(k.group, elementary_abelian(2, 2)));
  CHECK(k.representatives.size() == 4);

  // |G| = |N| |G/N| for every normal subgroup, and images of overgroups are subgroups.
  const auto g = symmetric(4);
  for (const auto& n : all_subgroups(g)) {
    if (!is_normal(n)) continue;
    const auto qn = quotient(n);
    CHECK(n.order() * qn.group.order() == g.order());
    for (const auto& h : all_subgroups(g)) {
      if (!n.is_subset_of(h)) continue;
      std::vector<Element> img;
      for (Element e : h.elements()) img.push_back(qn.projection(e));
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      CHECK(img.size() * n.order() == h.order());
      CHECK_NOTHROW(make_subgroup(qn.group, img));
    }
  }
  CHECK_THROWS_AS(quotient(gen(pg.group, {index_of(pg, {1, 0, 2})})), PreconditionError);
}

TEST_CASE("direct_product") {
  CHECK(is_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)));
  CHECK(is_isomorphic(direct_product(cyclic(2), cyclic(2)), elementary_abelian(2, 2)));
  const auto g = direct_product(generalized_quaternion(8), cyclic(3));
  CHECK(g.order() == 24);
  // Index encoding i*|b| + j.
  const auto a = cyclic(4), b = cyclic(3);
  const auto p = direct_product(a, b);
  CHECK(p.mul(1 * 3 + 2, 2 * 3 + 2) == static_cast<Element>(3 * 3 + 1));
  Limits tight;
  tight.max_order = 10;
  CHECK_THROWS_AS(direct_product(cyclic(4), cyclic(3), tight), CapExceeded);
}

TEST_CASE("semidirect_product") {
  const auto c3 = cyclic(3), c2 = cyclic(2), c7 = cyclic(7);
  const auto s3 = semidirect_product(c3, c2, {identity_map(c3), power(c3, 2)});
  CHECK(is_isomorphic(s3, s3_perms().group));

  const auto direct = semidirect_product(c3, c2, {identity_map(c3), identity_map(c3)});
  CHECK(is_isomorphic(direct, direct_product(c3, c2)));

  const auto m21 = semidirect_product(c7, c3, {identity_map(c7), power(c7, 2), power(c7, 4)});
  CHECK(m21.order() == 21);
  CHECK_FALSE(m21.is_abelian());

  // Not a homomorphism: the generator of C2 acting by an automorphism of order 3.
  CHECK_THROWS_AS(semidirect_product(c7, c2, {identity_map(c7), power(c7, 2)}),
                  PreconditionError);
}

TEST_CASE("automorphism_group") {
  CHECK(automorphism_group(cyclic(5)).size() == 4);
  CHECK(automorphism_group(generalized_quaternion(8)).size() == 24);
  CHECK(automorphism_group(cyclic(1)).size() == 1);
  CHECK(automorphism_group(symmetric(3)).size() == 6);
  CHECK(automorphism_group(elementary_abelian(2, 3)).size() == 168);

  const auto autos = automorphism_group(dihedral(8));
  CHECK(autos.size() == 8);
  CHECK(std::find(autos.begin(), autos.end(), identity_map(dihedral(8))) != autos.end());
  for (const auto& f : autos) {
    CHECK(std::find(autos.begin(), autos.end(), inverse_map(f)) != autos.end());
    for (const auto& h : autos)
      CHECK(std::find(autos.begin(), autos.end(), compose(f, h)) != autos.end());
  }
  Limits tight;
  tight.max_morphism_order = 4;
  CHECK_THROWS_AS(automorphism_group(cyclic(5), tight), CapExceeded);
}

TEST_CASE("is_isomorphic") {
  const auto c3 = cyclic(3);
  const auto s3 = semidirect_product(c3, cyclic(2), {identity_map(c3), power(c3, 2)});
  CHECK(is_isomorphic(s3, s3_perms().group));
  CHECK_FALSE(is_isomorphic(cyclic(4), elementary_abelian(2, 2)));
  CHECK_FALSE(is_isomorphic(generalized_quaternion(8), dihedral(8)));
  CHECK_FALSE(is_isomorphic(cyclic(6), cyclic(8)));
  const auto iso = find_isomorphism(dihedral(6), s3);
  REQUIRE(iso);
  CHECK(is_homomorphism(dihedral(6), s3, *iso));
}

TEST_CASE("arithmetic helpers") {
  CHECK(prime_divisors(360) == std::vector<std::size_t>{2, 3, 5});
  CHECK(prime_divisors(1).empty());
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK(p_part(360, 2) == 8);
  CHECK(is_p_power(27, 3));
  CHECK_FALSE(is_p_power(12, 2));
}
