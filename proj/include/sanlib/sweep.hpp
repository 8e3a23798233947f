#pragma once

// Invariant suites evaluated over lists of groups, optionally in parallel.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sanlib/group.hpp"

namespace sanlib {

enum class SweepCheck {
  san_equivalence,  // brute and fast SAN agree
  implications,     // predicate implications and their consequences
  theorem_a,        // Theorem A both directions plus Corollaries A2/A3
  oracles,          // subnormality and radicals against lattice searches
};

std::string_view to_string(SweepCheck c);
std::optional<SweepCheck> parse_sweep_check(std::string_view name);

struct SweepOutcome {
  std::string group;
  std::size_t order = 0;
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

SweepOutcome run_check(SweepCheck check, const FiniteGroup& g, const Limits& limits = {});

/// Results are in input order and do not depend on `jobs`.
std::vector<SweepOutcome> sweep(const std::vector<FiniteGroup>& groups, SweepCheck check,
                                std::size_t jobs = 1, const Limits& limits = {});

/// Defect of every lattice member found by breadth-first search down the
/// "is a normal subgroup of" relation from G (nullopt: not subnormal).
std::vector<std::optional<std::size_t>> lattice_subnormal_defects(const std::vector<Subgroup>& lattice);

}  // namespace sanlib
