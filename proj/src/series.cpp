#include "sanlib/series.hpp"

#include <algorithm>

#include "detail.hpp"

namespace sanlib {

std::string_view to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::upper_central: return "upper-central";
    case SeriesKind::lower_central: return "lower-central";
    case SeriesKind::derived: return "derived";
    case SeriesKind::g_central: return "g-central";
    case SeriesKind::g_chief: return "g-chief";
  }
  return "?";
}

namespace {

void require_normal(const Subgroup& a, const char* what) {
  if (!is_normal(a))
    throw PreconditionError(std::string(what) + ": subgroup is not normal");
}

// Elements x of `within` with [x, y] ∈ mod for every y in `by`.
Subgroup centralizing_mod(const Subgroup& within, const Subgroup& by,
                          const Subgroup& mod) {
  const auto& g = within.parent();
  const auto gens = by.generators();
  std::vector<Element> v;
  for (Element x : within.elements()) {
    bool ok = true;
    for (Element y : gens)
      if (!mod.contains(g.commutator(x, y))) {
        ok = false;
        break;
      }
    if (ok) v.push_back(x);
  }
  return Subgroup(g, std::move(v));
}

}  // namespace

SeriesRecord upper_central_series(const FiniteGroup& g) {
  const Subgroup all = whole_group(g);
  SeriesRecord s{SeriesKind::upper_central, {trivial_subgroup(g)}, true};
  for (;;) {
    Subgroup next = centralizing_mod(all, all, s.last());
    if (next == s.last()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

Subgroup hypercenter(const FiniteGroup& g) { return upper_central_series(g).last(); }

SeriesRecord lower_central_series(const Subgroup& h) {
  SeriesRecord s{SeriesKind::lower_central, {h}, true};
  for (;;) {
    Subgroup next = commutator_subgroup(s.last(), h);
    if (next == s.last()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

SeriesRecord lower_central_series(const FiniteGroup& g) {
  return lower_central_series(whole_group(g));
}

SeriesRecord derived_series(const Subgroup& h) {
  SeriesRecord s{SeriesKind::derived, {h}, true};
  for (;;) {
    Subgroup next = commutator_subgroup(s.last(), s.last());
    if (next == s.last()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

SeriesRecord derived_series(const FiniteGroup& g) {
  return derived_series(whole_group(g));
}

Nilpotency is_nilpotent(const Subgroup& h) {
  const auto s = lower_central_series(h);
  if (!s.last().is_trivial()) return {false, 0};
  return {true, s.length()};
}

Nilpotency is_nilpotent(const FiniteGroup& g) { return is_nilpotent(whole_group(g)); }

Solvability is_solvable(const Subgroup& h) {
  const auto s = derived_series(h);
  if (!s.last().is_trivial()) return {false, 0};
  return {true, s.length()};
}

Solvability is_solvable(const FiniteGroup& g) { return is_solvable(whole_group(g)); }

Subgroup nilpotent_residual(const FiniteGroup& g) {
  return lower_central_series(g).last();
}

Subgroup p_core(const FiniteGroup& g, std::size_t p) {
  const Subgroup all = whole_group(g);
  const Subgroup sylow = sylow_subgroup(all, p);
  if (sylow.is_trivial()) return sylow;
  const auto gens = all.generators();
  std::vector<Subgroup> orbit{sylow};
  Subgroup core = sylow;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Element x : gens) {
      Subgroup c = conjugate_subgroup(orbit[i], x);
      if (std::find(orbit.begin(), orbit.end(), c) != orbit.end()) continue;
      core = intersection(core, c);
      orbit.push_back(std::move(c));
    }
  }
  return core;
}

Subgroup fitting_subgroup(const FiniteGroup& g) {
  Subgroup f = trivial_subgroup(g);
  for (std::size_t p : prime_divisors(g.order())) f = join(f, p_core(g, p));
  return f;
}

Subgroup baer_radical(const FiniteGroup& g) {
  const Subgroup all = whole_group(g);
  std::vector<char> decided(g.order(), 0);
  std::vector<Element> gens;
  for (Element x = 1; x < g.order(); ++x) {
    if (decided[x]) continue;
    const Subgroup c = cyclic_subgroup(g, x);
    const bool sn = subnormal_defect(c, all).has_value();
    // Generators of the same cyclic subgroup share the verdict.
    for (Element y : c.elements())
      if (g.element_order(y) == c.order()) decided[y] = 1;
    if (sn) gens.push_back(x);
  }
  return closure(g, gens);
}

bool is_g_central_factor(const Subgroup& upper, const Subgroup& lower) {
  return commutes_modulo(upper, whole_group(upper.parent()), lower);
}

SeriesRecord g_central_series(const Subgroup& a) {
  require_normal(a, "g_central_series");
  const auto& g = a.parent();
  const Subgroup all = whole_group(g);
  SeriesRecord s{SeriesKind::g_central, {trivial_subgroup(g)}, true};
  for (;;) {
    Subgroup next = centralizing_mod(a, all, s.last());
    if (next == s.last()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

Subgroup g_hypercenter_of(const Subgroup& a) { return g_central_series(a).last(); }

std::vector<ChiefFactor> g_chief_factors(const Subgroup& a) {
  require_normal(a, "g_chief_factors");
  const auto& g = a.parent();
  const Subgroup all = whole_group(g);
  std::vector<ChiefFactor> out;
  Subgroup cur = trivial_subgroup(g);
  while (cur != a) {
    std::optional<Subgroup> best;
    // Every G-invariant overgroup of cur contains one of these candidates,
    // so one of least order is minimal.
    for (Element x : a.elements()) {
      if (cur.contains(x)) continue;
      Element one[] = {x};
      Subgroup m = normal_closure(join(cur, one), all);
      if (!best || m < *best) best = std::move(m);
    }
    const bool central = is_g_central_factor(*best, cur);
    out.push_back({cur, *best, central});
    cur = *best;
  }
  return out;
}

bool is_g_hypereccentric(const Subgroup& a) {
  for (const auto& f : g_chief_factors(a))
    if (f.central) return false;
  return true;
}

std::optional<ZgDecomposition> zg_decomposition(const Subgroup& a,
                                                const Limits& limits) {
  require_normal(a, "zg_decomposition");
  if (!a.is_abelian()) throw PreconditionError("zg_decomposition: subgroup is not abelian");
  const auto& g = a.parent();
  const Subgroup all = whole_group(g);
  const Subgroup central = g_hypercenter_of(a);

  auto decomposes = [&](const Subgroup& ecc) {
    return intersection(central, ecc).is_trivial() &&
           central.order() * ecc.order() == a.order() &&
           is_g_hypereccentric(ecc);
  };

  Subgroup ecc = a;
  for (;;) {
    Subgroup next = commutator_subgroup(ecc, all);
    if (next == ecc) break;
    ecc = std::move(next);
  }
  if (decomposes(ecc)) return ZgDecomposition{central, ecc, false};

  if (g.order() > std::min<std::size_t>(128, limits.max_subgroup_lattice))
    return std::nullopt;
  std::optional<Subgroup> best;
  for (const auto& s : all_subgroups(g, limits)) {
    if (!s.is_subset_of(a) || !is_normal(s, all)) continue;
    if (!is_g_hypereccentric(s)) continue;
    if (!best || best->order() < s.order()) best = s;
  }
  if (best && decomposes(*best)) return ZgDecomposition{central, *best, true};
  return std::nullopt;
}

std::vector<std::size_t> prime_spectrum(std::size_t order) {
  return prime_divisors(order);
}

std::vector<std::size_t> prime_spectrum(const Subgroup& h) {
  return prime_divisors(h.order());
}

}  // namespace sanlib
