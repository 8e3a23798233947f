#include "doctest.h"
#include "sanlib/construct.hpp"
#include "sanlib/sweep.hpp"

using namespace sanlib;

TEST_CASE("check names") {
  for (auto c : {SweepCheck::san_equivalence, SweepCheck::implications, SweepCheck::theorem_a,
                 SweepCheck::oracles})
    CHECK(parse_sweep_check(to_string(c)) == c);
  CHECK_FALSE(parse_sweep_check("nonsense"));
}

TEST_CASE("lattice defects match the dihedral chain lengths") {
  const auto d16 = dihedral(16);
  const auto lattice = all_subgroups(d16);
  const auto defects = lattice_subnormal_defects(lattice);
  REQUIRE(defects.size() == lattice.size());
  CHECK(defects.back() == 0u);
  for (std::size_t i = 0; i < lattice.size(); ++i) CHECK(defects[i] == subnormal_defect(lattice[i]));

  const auto s4 = all_subgroups(symmetric(4));
  const auto sd = lattice_subnormal_defects(s4);
  std::size_t not_subnormal = 0;
  for (const auto& d : sd) not_subnormal += !d;
  CHECK(not_subnormal > 0);
}

TEST_CASE("every suite is clean on a small catalog and independent of jobs") {
  const auto groups = catalog(32);
  for (auto check : {SweepCheck::san_equivalence, SweepCheck::implications, SweepCheck::theorem_a,
                     SweepCheck::oracles}) {
    CAPTURE(to_string(check));
    const auto one = sweep(groups, check, 1);
    const auto three = sweep(groups, check, 3);
    REQUIRE(one.size() == groups.size());
    REQUIRE(three.size() == groups.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CAPTURE(one[i].group);
      CHECK(one[i].group == groups[i].name());
      CHECK(one[i].ok);
      CHECK(one[i].violations.empty());
      CHECK(one[i].violations == three[i].violations);
      CHECK(one[i].notes == three[i].notes);
    }
  }
}

TEST_CASE("the implications suite notes SAN groups that are not T-groups") {
  const auto out = run_check(SweepCheck::implications, dihedral(24));
  CHECK(out.ok);
  CHECK(std::find(out.notes.begin(), out.notes.end(), "SAN but not T") != out.notes.end());
}

TEST_CASE("errors inside a check become violations") {
  Limits tight;
  tight.max_subgroup_lattice = 4;
  const auto out = run_check(SweepCheck::san_equivalence, symmetric(4), tight);
  CHECK_FALSE(out.ok);
  REQUIRE(out.violations.size() == 1);
  CHECK(out.violations[0].rfind("error: ", 0) == 0);
  CHECK(sweep({}, SweepCheck::oracles, 4).empty());
}
