#include <algorithm>

#include "doctest.h"
#include "sanlib/classify.hpp"
#include "sanlib/construct.hpp"
#include "sanlib/series.hpp"
#include "test_support.hpp"

using namespace sanlib;
using namespace sanlib::testing;

namespace {

const CheckItem& item(const ConditionReport& rep, const std::string& id) {
  const auto it = std::find_if(rep.items.begin(), rep.items.end(),
                               [&](const CheckItem& c) { return c.id == id; });
  if (it == rep.items.end()) throw std::invalid_argument("no item " + id);
  return *it;
}

void require_no_fail(const ConditionReport& rep) {
  for (const auto& c : rep.items) {
    CAPTURE(rep.name);
    CAPTURE(c.id);
    CAPTURE(c.detail);
    CHECK(c.verdict != Verdict::fail);
  }
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::pass) == "pass");
  CHECK(to_string(Verdict::fail) == "fail");
  CHECK(to_string(Verdict::vacuous_finite) == "vacuous-finite");
  CHECK(to_string(Verdict::not_applicable) == "not-applicable");
}

TEST_CASE("Dedekind groups") {
  const auto g = direct_product(direct_product(generalized_quaternion(8), cyclic(2)), cyclic(3));
  CHECK(is_dedekind(g));
  const auto ds = dedekind_structure(g);
  REQUIRE(ds.kind == DedekindStructure::Kind::hamiltonian);
  REQUIRE(ds.parts);
  const auto& [q, e, b] = *ds.parts;
  CHECK(is_isomorphic(as_group(q), generalized_quaternion(8)));
  CHECK(is_isomorphic(as_group(e), cyclic(2)));
  CHECK(is_isomorphic(as_group(b), cyclic(3)));
  // The three parts reassemble G as an internal direct product.
  CHECK(intersection(q, e).is_trivial());
  CHECK(intersection(join(q, e), b).is_trivial());
  CHECK(commutator_subgroup(q, e).is_trivial());
  CHECK(commutator_subgroup(q, b).is_trivial());
  CHECK(commutator_subgroup(e, b).is_trivial());
  CHECK(join(join(q, e), b).is_whole());

  CHECK(dedekind_structure(cyclic(12)).kind == DedekindStructure::Kind::abelian);
  for (const auto& h : {dihedral(8), metacyclic(9, 3, 4), symmetric(4)}) {
    CHECK_FALSE(is_dedekind(h));
    CHECK(dedekind_structure(h).kind == DedekindStructure::Kind::not_dedekind);
  }
  CHECK(dedekind_structure(generalized_quaternion(8)).kind == DedekindStructure::Kind::hamiltonian);
  CHECK(dedekind_structure(generalized_quaternion(16)).kind == DedekindStructure::Kind::not_dedekind);
}

TEST_CASE("T-groups") {
  CHECK(is_t_group(symmetric(3)).holds);
  CHECK(is_t_group(generalized_quaternion(8)).holds);
  const auto d4 = dihedral(8);
  const auto t = is_t_group(d4);
  CHECK_FALSE(t.holds);
  REQUIRE(t.witness);
  CHECK(*t.witness == gen(d4, {4}));
  CHECK(subnormal_defect(*t.witness) == 2);
}

TEST_CASE("SAN in both modes with witnesses") {
  const auto q8c3 = direct_product(generalized_quaternion(8), cyclic(3));
  CHECK(is_san(q8c3, SanMode::brute).holds);
  CHECK(is_san(q8c3, SanMode::fast).holds);

  const auto sl = sl23();
  for (auto mode : {SanMode::brute, SanMode::fast}) {
    const auto r = is_san(sl, mode);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->order() == 4);
    CHECK(r.witness->is_subset_of(sylow_subgroup(sl, 2)));
  }

  const auto s4 = symmetric(4);
  const auto r = is_san(s4, SanMode::brute);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->order() == 2);
  CHECK(r.witness->is_subset_of(fitting_subgroup(s4)));
  CHECK_FALSE(is_san(s4, SanMode::fast).holds);

  // Simple groups are vacuously SAN.
  CHECK(is_san(alternating(5), SanMode::brute).holds);
  CHECK(is_san(alternating(5), SanMode::fast).holds);

  Limits tight;
  tight.max_subgroup_lattice = 8;
  CHECK_THROWS_AS(is_san(s4, SanMode::brute, tight), CapExceeded);
  CHECK_NOTHROW(is_san(s4, SanMode::fast, tight));
}

TEST_CASE("a finite group can be SAN without being a T-group") {
  const auto d24 = dihedral(24);
  CHECK(is_san(d24, SanMode::brute).holds);
  const auto t = is_t_group(d24);
  CHECK_FALSE(t.holds);
  REQUIRE(t.witness);
  CHECK(is_isomorphic(as_group(*t.witness), symmetric(3)));
}

TEST_CASE("transitively normal subgroups") {
  const auto pg = s3_perms();
  CHECK(is_transitively_normal(gen(pg.group, {index_of(pg, {1, 2, 0})})).holds);
  CHECK(is_transitively_normal(gen(pg.group, {index_of(pg, {1, 0, 2})})).holds);

  const auto sl = sl23();
  const auto c4 = gen(sl, {first_of_order(sl, 4)});
  const auto r = is_transitively_normal(c4);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->is_whole());
}

TEST_CASE("supersolvability") {
  CHECK(is_supersolvable(symmetric(3)));
  CHECK(is_supersolvable(dihedral(8)));
  CHECK(is_supersolvable(metacyclic(7, 3, 2)));
  CHECK_FALSE(is_supersolvable(symmetric(4)));
  CHECK_FALSE(is_supersolvable(alternating(4)));
  CHECK_FALSE(is_supersolvable(sl23()));
  CHECK_FALSE(is_supersolvable(alternating(5)));
}

TEST_CASE("power automorphisms") {
  const auto q8 = power_automorphisms(generalized_quaternion(8));
  CHECK(q8.maps.size() == 4);
  CHECK(q8.group.order() == 4);
  for (Element e = 1; e < q8.group.order(); ++e) CHECK(q8.group.element_order(e) == 2);
  CHECK(q8.maps.front() == identity_map(generalized_quaternion(8)));

  CHECK(power_automorphisms(cyclic(5)).maps.size() == 4);
  CHECK(is_isomorphic(power_automorphisms(cyclic(5)).group, cyclic(4)));
  CHECK(power_automorphisms(symmetric(3)).maps.size() == 1);

  // Power automorphisms form a subgroup of the automorphism group.
  const auto g = direct_product(generalized_quaternion(8), cyclic(3));
  const auto all = automorphism_group(g);
  const auto pot = power_automorphisms(g);
  for (const auto& f : pot.maps) CHECK(std::find(all.begin(), all.end(), f) != all.end());
  for (const auto& f : pot.maps)
    for (const auto& h : pot.maps)
      CHECK(std::find(pot.maps.begin(), pot.maps.end(), compose(f, h)) != pot.maps.end());
}

TEST_CASE("special rank") {
  CHECK(special_rank(cyclic(12)) == 1);
  CHECK(special_rank(elementary_abelian(2, 3)) == 3);
  CHECK(special_rank(generalized_quaternion(8)) == 2);
  CHECK(special_rank(symmetric(4)) == 2);
}

TEST_CASE("classification report") {
  const auto rep = classify(sl23());
  CHECK(rep.order == 24);
  CHECK(rep.prime_spectrum == std::vector<std::size_t>{2, 3});
  CHECK_FALSE(rep.is_san);
  CHECK(rep.san_witness);
  CHECK(rep.is_solvable);
  CHECK_FALSE(rep.is_nilpotent);
  CHECK(rep.baer_radical_order == 8);
  CHECK(rep.fitting_order == 8);
  CHECK(rep.nilpotent_residual_order == 8);

  const auto q = classify(generalized_quaternion(8));
  CHECK(q.is_dedekind);
  CHECK(q.is_t_group);
  CHECK(q.is_san);
  CHECK_FALSE(q.is_abelian);
}

TEST_CASE("implications between the predicates on the catalog") {
  for (const auto& g : catalog(60)) {
    CAPTURE(g.name());
    const auto r = classify(g);
    if (r.is_abelian) CHECK(r.is_dedekind);
    if (r.is_dedekind) CHECK(r.is_san);
    if (r.is_t_group) CHECK(r.is_san);
    if (r.is_san && r.is_solvable) {
      CHECK(r.is_supersolvable);
      const Subgroup all = whole_group(g);
      CHECK(commutator_subgroup(all, all).is_subset_of(baer_radical(g)));
    }
    if (r.is_san && r.is_nilpotent)
      for (std::size_t p : r.prime_spectrum)
        if (p != 2) CHECK(sylow_subgroup(g, p).is_abelian());
  }
}

TEST_CASE("theorem A report") {
  const auto m21 = metacyclic(7, 3, 2);
  const auto rep = theorem_a_report(m21);
  CHECK(rep.applicable);
  require_no_fail(rep);
  CHECK(item(rep, "x").verdict == Verdict::vacuous_finite);
  CHECK(item(rep, "xi").verdict == Verdict::vacuous_finite);
  CHECK(item(rep, "iii").verdict == Verdict::pass);
  CHECK(baer_radical(m21).order() == 7);
  CHECK(nilpotent_residual(m21).order() == 7);

  const auto q = theorem_a_report(generalized_quaternion(8));
  CHECK(q.applicable);
  require_no_fail(q);

  const auto sl = theorem_a_report(sl23());
  CHECK_FALSE(sl.applicable);
  CHECK_FALSE(sl.gate_reason.empty());
  REQUIRE(sl.items.size() == 1);
  CHECK(sl.items[0].verdict == Verdict::not_applicable);
  REQUIRE(sl.items[0].witnesses.size() == 1);
  CHECK(sl.items[0].witnesses[0].subgroup.order() == 4);

  const auto a5 = theorem_a_report(alternating(5));
  CHECK_FALSE(a5.applicable);
  CHECK(a5.gate_reason.find("solvable") != std::string::npos);
}

TEST_CASE("theorem A conditions and the converse") {
  for (const auto& g : catalog(48)) {
    CAPTURE(g.name());
    const auto conv = theorem_a_converse(g);
    CHECK(conv.ok());
    if (is_solvable(g).solvable && is_san(g, SanMode::brute).holds)
      CHECK(conv.conditions_hold);
  }
  // S4 and SL(2,3) are solvable but violate the conditions.
  CHECK(theorem_a_conditions(symmetric(4)).any_fail());
  CHECK(theorem_a_conditions(sl23()).any_fail());
}

TEST_CASE("corollary A2") {
  const auto m21 = metacyclic(7, 3, 2);
  const auto rep = corollary_a2_report(m21);
  require_no_fail(rep);
  const auto comps = complements(nilpotent_residual(m21));
  CHECK(comps.size() == 7);
  CHECK(all_conjugate(comps));
  for (const auto& s : comps) CHECK(s.order() == 3);

  const auto m20 = corollary_a2_report(metacyclic(5, 4, 2));
  require_no_fail(m20);
  CHECK(item(m20, "vi").verdict == Verdict::pass);

  require_no_fail(corollary_a2_report(direct_product(generalized_quaternion(8), cyclic(3))));
  require_no_fail(corollary_a2_report(san_family({{7, 7}}, 3, 3)));

  CHECK_THROWS_AS(corollary_a2_report(generalized_quaternion(8)), PreconditionError);
  CHECK_THROWS_AS(corollary_a2_report(sl23()), PreconditionError);
}

TEST_CASE("complements and conjugacy") {
  // S3 x C2 is D12; the residual C3 is complemented by its three Klein four-subgroups.
  const auto g = direct_product(symmetric(3), cyclic(2));
  const auto comps = complements(nilpotent_residual(g));
  CHECK(comps.size() == 3);
  CHECK(all_conjugate(comps));
  CHECK(all_conjugate({}));

  // The trivial subgroup has G as its only complement.
  const auto c = complements(trivial_subgroup(cyclic(6)));
  REQUIRE(c.size() == 1);
  CHECK(c[0].is_whole());

  // Two non-conjugate subgroups of the same order.
  const auto v = elementary_abelian(2, 2);
  CHECK_FALSE(all_conjugate({gen(v, {1}), gen(v, {2})}));
}

TEST_CASE("corollary A3") {
  for (const auto& g : {metacyclic(7, 3, 2), metacyclic(5, 4, 2)}) {
    CAPTURE(g.name());
    const auto rep = corollary_a3_report(g);
    require_no_fail(rep);
    for (const char* id : {"i", "ii", "iii", "iv"}) CHECK(item(rep, id).verdict == Verdict::pass);
    CHECK(item(rep, "v-odd").verdict == Verdict::not_applicable);
    CHECK(item(rep, "v-two").verdict == Verdict::vacuous_finite);
  }
  CHECK_THROWS_AS(corollary_a3_report(cyclic(15)), PreconditionError);
  CHECK_THROWS_AS(corollary_a3_report(symmetric(4)), PreconditionError);

  // C7 x| C9 with a central C3: P is abelian, P/C_P(Q) has order 3.
  const auto wide = corollary_a3_report(san_family({{7}}, 3, 3, 9));
  require_no_fail(wide);
  CHECK(item(wide, "iv").verdict == Verdict::pass);
}
