#pragma once

// Characteristic series and radicals of finite groups.
//
// The locally nilpotent radical and residual of the infinite theory are
// modelled by their finite counterparts: the Fitting subgroup and the
// nilpotent residual.

#include <optional>
#include <string_view>
#include <vector>

#include "sanlib/group.hpp"

namespace sanlib {

enum class SeriesKind { upper_central, lower_central, derived, g_central, g_chief };

std::string_view to_string(SeriesKind k);

/// Terms are distinct; ascending kinds increase strictly, descending kinds
/// decrease strictly, and the last term is the stable one.
struct SeriesRecord {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  bool stabilized = true;

  const Subgroup& last() const { return terms.back(); }
  /// Number of proper steps.
  std::size_t length() const { return terms.size() - 1; }
};

SeriesRecord upper_central_series(const FiniteGroup& g);
Subgroup hypercenter(const FiniteGroup& g);

/// Descending series inside h: h, [h,h]... or h, [h,h], [[h,h],h]...
SeriesRecord lower_central_series(const Subgroup& h);
SeriesRecord lower_central_series(const FiniteGroup& g);
SeriesRecord derived_series(const Subgroup& h);
SeriesRecord derived_series(const FiniteGroup& g);

struct Nilpotency {
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // meaningful when nilpotent
};
struct Solvability {
  bool solvable = false;
  std::size_t derived_length = 0;  // meaningful when solvable
};

Nilpotency is_nilpotent(const Subgroup& h);
Nilpotency is_nilpotent(const FiniteGroup& g);
Solvability is_solvable(const Subgroup& h);
Solvability is_solvable(const FiniteGroup& g);

/// Smallest normal subgroup with nilpotent quotient.
Subgroup nilpotent_residual(const FiniteGroup& g);
/// Largest normal p-subgroup: intersection of the conjugates of a Sylow
/// p-subgroup.
Subgroup p_core(const FiniteGroup& g, std::size_t p);
/// Product of the p-cores over the primes dividing |G|.
Subgroup fitting_subgroup(const FiniteGroup& g);
/// Subgroup generated by the cyclic subnormal subgroups (by definition, not
/// via the Fitting subgroup).
Subgroup baer_radical(const FiniteGroup& g);

/// Whether G centralizes upper/lower (both G-invariant, lower ⊆ upper).
bool is_g_central_factor(const Subgroup& upper, const Subgroup& lower);

/// Upper G-central series of a normal subgroup a:
/// A_{i+1}/A_i = elements of A/A_i centralized by G.
SeriesRecord g_central_series(const Subgroup& a);
Subgroup g_hypercenter_of(const Subgroup& a);

struct ChiefFactor {
  Subgroup lower;
  Subgroup upper;
  bool central;
};

/// A chain 1 = C_0 < ... < C_m = a of G-invariant subgroups with minimal
/// steps; each step is the least (by order, then canonically) minimal
/// G-invariant overgroup. Requires a normal in its parent.
std::vector<ChiefFactor> g_chief_factors(const Subgroup& a);
/// All G-chief factors of a eccentric.
bool is_g_hypereccentric(const Subgroup& a);

struct ZgDecomposition {
  Subgroup central_part;    // upper G-hypercenter of A
  Subgroup eccentric_part;  // maximal G-hypereccentric G-invariant subgroup
  bool used_fallback = false;
};

/// A = central ⊕ eccentric, or nullopt when A has no such decomposition.
/// Requires a abelian and normal in its parent.
std::optional<ZgDecomposition> zg_decomposition(const Subgroup& a,
                                                const Limits& limits = {});

/// Set of primes dividing the order of a subgroup.
std::vector<std::size_t> prime_spectrum(const Subgroup& h);
std::vector<std::size_t> prime_spectrum(std::size_t order);

}  // namespace sanlib
