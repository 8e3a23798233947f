#pragma once

// Group predicates (Dedekind, T, SAN, supersolvable, transitive normality),
// power automorphisms and the structure-theorem condition reports.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sanlib/group.hpp"

namespace sanlib {

enum class Verdict { pass, fail, vacuous_finite, not_applicable };
std::string_view to_string(Verdict v);

struct NamedSubgroup {
  std::string role;
  Subgroup subgroup;
};

/// One numbered item of a condition report.
struct CheckItem {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::pass;
  std::string detail;
  std::vector<NamedSubgroup> witnesses;
};

/// A predicate outcome; the witness explains a false answer.
struct PredicateResult {
  bool holds = true;
  std::optional<Subgroup> witness;
};

// Dedekind groups -------------------------------------------------------------

/// Every subgroup normal (brute force over the lattice).
bool is_dedekind(const FiniteGroup& g, const Limits& limits = {});
bool is_dedekind(const std::vector<Subgroup>& lattice);

struct DedekindParts {
  Subgroup q;  // quaternion of order 8
  Subgroup e;  // elementary abelian 2-group
  Subgroup b;  // abelian of odd order
};

struct DedekindStructure {
  enum class Kind { abelian, hamiltonian, not_dedekind };
  Kind kind = Kind::not_dedekind;
  std::optional<DedekindParts> parts;  // set for hamiltonian
};

/// Structural recognition Q × E × B, cross-checked against is_dedekind.
/// Throws std::logic_error if the two paths disagree.
DedekindStructure dedekind_structure(const FiniteGroup& g, const Limits& limits = {});

// Subnormality predicates -------------------------------------------------------

/// Every subnormal subgroup is normal; the witness is the least failing one.
PredicateResult is_t_group(const FiniteGroup& g, const Limits& limits = {});
PredicateResult is_t_group(const std::vector<Subgroup>& lattice);

enum class SanMode { brute, fast };

/// Every subnormal abelian subgroup is normal.
/// brute: scan the lattice; fast: every cyclic subgroup of the Baer radical
/// is normal. Witnesses are least in canonical order within their scan.
PredicateResult is_san(const FiniteGroup& g, SanMode mode, const Limits& limits = {});
PredicateResult is_san_brute(const std::vector<Subgroup>& lattice);

/// h is normal in every subgroup in which it is subnormal; the witness is
/// the least such overgroup S in which h is not normal.
PredicateResult is_transitively_normal(const Subgroup& h, const Limits& limits = {});

/// A chain of normal subgroups of G with cyclic factors, built greedily.
bool is_supersolvable(const FiniteGroup& g);

struct PowerAutomorphisms {
  std::vector<GroupMap> maps;  // sorted, identity first
  FiniteGroup group;           // maps[i] ∘ maps[j] is element i*j
};

PowerAutomorphisms power_automorphisms(const FiniteGroup& g, const Limits& limits = {});

/// Largest, over the subgroups of g, of the least number of generators.
std::size_t special_rank(const FiniteGroup& g, const Limits& limits = {});

// Summary record ------------------------------------------------------------------

struct ClassificationReport {
  std::string group_name;
  std::size_t order = 0;
  std::vector<std::size_t> prime_spectrum;
  bool is_abelian = false;
  bool is_dedekind = false;
  bool is_t_group = false;
  bool is_san = false;
  bool is_supersolvable = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::size_t baer_radical_order = 0;
  std::size_t fitting_order = 0;
  std::size_t nilpotent_residual_order = 0;
  std::optional<Subgroup> t_witness;
  std::optional<Subgroup> san_witness;
};

/// Brute-force predicates when the order is within the lattice cap; above
/// it the SAN verdict comes from the fast mode and T is not decided (false,
/// with no witness).
ClassificationReport classify(const FiniteGroup& g, const Limits& limits = {});

// Theorem and corollary reports ----------------------------------------------------

struct ConditionReport {
  std::string name;
  bool applicable = false;
  std::string gate_reason;  // why not applicable
  std::vector<CheckItem> items;

  bool any_fail() const;
};

/// Gated on solvable ∧ SAN; items i..ix in finite form, x and xi
/// vacuous-finite. The gate failure carries the SAN witness if any.
ConditionReport theorem_a_report(const FiniteGroup& g, const Limits& limits = {});

/// The finite conditions of the structure theorem evaluated without the SAN
/// gate (solvable groups only, otherwise not applicable).
ConditionReport theorem_a_conditions(const FiniteGroup& g, const Limits& limits = {});

struct ConverseCheck {
  bool conditions_hold = false;
  bool san = false;
  bool ok() const { return !conditions_hold || san; }
};
ConverseCheck theorem_a_converse(const FiniteGroup& g, const Limits& limits = {});

/// Requires solvable, SAN and at least two prime divisors; throws
/// PreconditionError otherwise.
ConditionReport corollary_a2_report(const FiniteGroup& g, const Limits& limits = {});

/// Requires SAN, solvable, not nilpotent and exactly two prime divisors.
ConditionReport corollary_a3_report(const FiniteGroup& g, const Limits& limits = {});

/// All S with G = R·S and R ∩ S = 1, in canonical order.
std::vector<Subgroup> complements(const Subgroup& r, const Limits& limits = {});
/// Whether all listed subgroups are conjugate to the first.
bool all_conjugate(const std::vector<Subgroup>& subgroups);

}  // namespace sanlib
