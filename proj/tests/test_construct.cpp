#include <algorithm>
#include <set>

#include "doctest.h"
#include "sanlib/classify.hpp"
#include "sanlib/construct.hpp"
#include "sanlib/series.hpp"
#include "test_support.hpp"

using namespace sanlib;
using namespace sanlib::testing;

namespace {

bool contains_isomorphic(const std::vector<FiniteGroup>& list, const FiniteGroup& g) {
  return std::any_of(list.begin(), list.end(), [&](const FiniteGroup& h) {
    return h.order() == g.order() && is_isomorphic(h, g);
  });
}

std::size_t count_isomorphic(const std::vector<FiniteGroup>& list, const FiniteGroup& g) {
  return static_cast<std::size_t>(std::count_if(list.begin(), list.end(), [&](const FiniteGroup& h) {
    return h.order() == g.order() && is_isomorphic(h, g);
  }));
}

}  // namespace

TEST_CASE("classical families") {
  const auto q8 = generalized_quaternion(8);
  CHECK(count_of_order(q8, 2) == 1);
  CHECK(center(q8).order() == 2);
  CHECK(count_of_order(dihedral(8), 2) == 5);
  CHECK(symmetric(3).order() == 6);
  CHECK(symmetric(5).order() == 120);
  CHECK(alternating(4).order() == 12);
  CHECK(alternating(5).order() == 60);
  CHECK(sl23().order() == 24);
  CHECK(count_of_order(sl23(), 2) == 1);
  CHECK(elementary_abelian(3, 3).order() == 27);
  CHECK(is_isomorphic(abelian({{2, 3}}), cyclic(6)));
  CHECK(abelian({{2, 4, 4}}).order() == 32);

  for (const auto& g : {q8, dihedral(20), symmetric(4), alternating(5), sl23(), abelian({{3, 9}})})
    CHECK_FALSE(validate(g));

  CHECK_THROWS_AS(symmetric(6), PreconditionError);
  CHECK_THROWS_AS(dihedral(7), PreconditionError);
  CHECK_THROWS_AS(generalized_quaternion(12), PreconditionError);
  Limits tight;
  tight.max_order = 100;
  CHECK_THROWS_AS(abelian({{11, 11}}, tight), CapExceeded);
}

TEST_CASE("metacyclic") {
  const auto m21 = metacyclic(7, 3, 2);
  CHECK(m21.order() == 21);
  CHECK_FALSE(m21.is_abelian());

  const auto m243 = metacyclic(27, 9, 4);
  CHECK(m243.order() == 243);
  CHECK(commutator_subgroup(whole_group(m243), whole_group(m243)).order() == 9);

  const auto m20 = metacyclic(5, 4, 2);
  CHECK(m20.order() == 20);
  // The derived subgroup is the cyclic normal factor <b>.
  for (const auto& [g, q] : {std::pair{m21, 7}, std::pair{m20, 5}}) {
    const Subgroup all = whole_group(g);
    CHECK(commutator_subgroup(all, all) == sylow_subgroup(g, q));
  }
  CHECK_THROWS_AS(metacyclic(7, 2, 2), PreconditionError);
  CHECK_THROWS_AS(metacyclic(9, 3, 3), PreconditionError);
}

TEST_CASE("generalized dihedral") {
  CHECK(is_isomorphic(generalized_dihedral({{5}}, std::nullopt), dihedral(10)));
  CHECK(is_isomorphic(generalized_dihedral({{4}}, Element{2}), generalized_quaternion(8)));
  CHECK(is_isomorphic(generalized_dihedral({{8}}, Element{4}), generalized_quaternion(16)));

  const auto g54 = generalized_dihedral({{3, 9}}, std::nullopt);
  CHECK(g54.order() == 54);
  CHECK(is_san(g54, SanMode::brute).holds);
  CHECK(is_san(g54, SanMode::fast).holds);

  // With a^2 = t every element outside B has square t and order 4.
  const auto b = abelian({{2, 6}});
  const Element t = first_of_order(b, 2);
  const auto dic = generalized_dihedral({{2, 6}}, t);
  CHECK(dic.order() == 24);
  std::optional<Subgroup> base;
  for (const auto& s : all_subgroups(dic))
    if (s.order() == 12 && s.is_abelian() && is_isomorphic(as_group(s), b)) base = s;
  REQUIRE(base);
  std::set<Element> squares;
  for (Element x = 0; x < dic.order(); ++x) {
    if (base->contains(x)) continue;
    CHECK(dic.element_order(x) == 4);
    squares.insert(dic.mul(x, x));
  }
  CHECK(squares.size() == 1);

  CHECK_THROWS_AS(generalized_dihedral({{6}}, Element{1}), PreconditionError);
}

TEST_CASE("san_family") {
  const auto big = san_family({{7, 7}}, 3, 3);
  CHECK(big.order() == 147);
  CHECK(is_san(big, SanMode::brute).holds);
  CHECK(is_isomorphic(san_family({{7}}, 3, 3), metacyclic(7, 3, 2)));
  CHECK(is_isomorphic(san_family({{5}}, 2, 4), metacyclic(5, 4, 2)));
  // Kernel of the action: C9 acting through a quotient of order 3.
  CHECK(san_family({{7}}, 3, 3, 9).order() == 63);
  CHECK_THROWS_AS(san_family({{7}}, 5, 5), PreconditionError);
  CHECK_THROWS_AS(san_family({{6}}, 5, 5), PreconditionError);
  CHECK_THROWS_AS(san_family({{7}}, 7, 7), PreconditionError);

  for (const auto& g : {san_family({{7}}, 3, 3), san_family({{13}}, 2, 4), san_family({{5, 25}}, 2, 4)}) {
    CAPTURE(g.name());
    CHECK(is_san(g, SanMode::fast).holds);
    const auto rep = theorem_a_report(g);
    CHECK(rep.applicable);
    CHECK_FALSE(rep.any_fail());
  }
}

TEST_CASE("catalog contents") {
  const auto one = catalog(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].order() == 1);

  const auto eight = catalog(8);
  CHECK(count_isomorphic(eight, generalized_quaternion(8)) == 1);
  CHECK(count_isomorphic(eight, dihedral(8)) == 1);
  // Groups of order at most 8: 1,1,1,2,1,2,1,5.
  CHECK(eight.size() == 14);

  const auto c24 = catalog(24);
  for (std::size_t n = 1; n <= 24; ++n) CHECK(contains_isomorphic(c24, cyclic(n)));
  for (const auto& g : {dihedral(8), generalized_quaternion(8), symmetric(3), symmetric(4),
                        alternating(4), sl23(), metacyclic(7, 3, 2),
                        direct_product(generalized_quaternion(8), cyclic(2))})
    CHECK(contains_isomorphic(c24, g));

  for (std::size_t i = 0; i < c24.size(); ++i) {
    CHECK_FALSE(validate(c24[i]));
    if (i) CHECK(c24[i - 1].order() <= c24[i].order());
    for (std::size_t j = i + 1; j < c24.size() && c24[j].order() == c24[i].order(); ++j)
      CHECK_FALSE(is_isomorphic(c24[i], c24[j]));
  }
}

TEST_CASE("catalog is deterministic") {
  const auto a = catalog(64), b = catalog(64);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name() == b[i].name());
    CHECK(std::equal(a[i].table().begin(), a[i].table().end(), b[i].table().begin(), b[i].table().end()));
  }
}
