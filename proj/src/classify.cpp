#include "sanlib/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "sanlib/construct.hpp"
#include "sanlib/series.hpp"

namespace sanlib {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous_finite: return "vacuous-finite";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

bool ConditionReport::any_fail() const {
  return std::any_of(items.begin(), items.end(),
                     [](const CheckItem& c) { return c.verdict == Verdict::fail; });
}

namespace {

// Least (canonical order) cyclic subgroup of h that is not normal in G.
std::optional<Subgroup> non_normal_cyclic(const Subgroup& h) {
  const auto& g = h.parent();
  const Subgroup all = whole_group(g);
  std::vector<char> seen(g.order(), 0);
  std::optional<Subgroup> worst;
  for (Element x : h.elements()) {
    if (seen[x]) continue;
    Subgroup c = cyclic_subgroup(g, x);
    for (Element y : c.elements())
      if (g.element_order(y) == c.order()) seen[y] = 1;
    if (!is_normal(c, all) && (!worst || c < *worst)) worst = std::move(c);
  }
  return worst;
}

// Subgroup generated by the elements whose order is coprime to p.
Subgroup p_prime_part(const Subgroup& h, std::size_t p) {
  const auto& g = h.parent();
  std::vector<Element> gens;
  for (Element x : h.elements())
    if (g.element_order(x) % p != 0) gens.push_back(x);
  return closure(g, gens);
}

bool is_cyclic(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

std::string primes_text(const std::vector<std::size_t>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::to_string(ps[i]);
  return s + "}";
}

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

// The image of a subgroup of `within` inside as_group(within).
Subgroup relative(const Subgroup& s, const Subgroup& within, const FiniteGroup& as) {
  std::vector<Element> idx;
  const auto& el = within.elements();
  for (Element x : s.elements())
    idx.push_back(static_cast<Element>(std::lower_bound(el.begin(), el.end(), x) - el.begin()));
  return make_subgroup(as, std::move(idx));
}

PredicateResult san_verdict(const FiniteGroup& g, const Limits& limits) {
  if (g.order() <= limits.max_subgroup_lattice)
    return is_san_brute(all_subgroups(g, limits));
  return is_san(g, SanMode::fast, limits);
}

}  // namespace

// Dedekind ---------------------------------------------------------------------

bool is_dedekind(const std::vector<Subgroup>& lattice) {
  if (lattice.empty()) return true;
  const Subgroup all = whole_group(lattice.front().parent());
  return std::all_of(lattice.begin(), lattice.end(),
                     [&](const Subgroup& s) { return is_normal(s, all); });
}

bool is_dedekind(const FiniteGroup& g, const Limits& limits) {
  if (g.is_abelian()) return true;
  return is_dedekind(all_subgroups(g, limits));
}

namespace {

std::optional<DedekindParts> hamiltonian_parts(const FiniteGroup& g) {
  const Subgroup s2 = sylow_subgroup(g, 2);
  std::optional<Element> i, j;
  for (Element x : s2.elements()) {
    if (g.element_order(x) != 4) continue;
    if (!i) {
      i = x;
    } else if (g.mul(*i, x) != g.mul(x, *i)) {
      j = x;
      break;
    }
  }
  if (!i || !j) return std::nullopt;
  const Element ij[] = {*i, *j};
  Subgroup q = closure(g, ij);
  if (q.order() != 8 || !is_isomorphic(as_group(q), generalized_quaternion(8))) return std::nullopt;

  // E: greedy complement to <i^2> inside Z(S2).
  const Subgroup z2 = centralizer(s2, s2);
  const Element minus_one = g.mul(*i, *i);
  Subgroup e = trivial_subgroup(g);
  Subgroup e_with = cyclic_subgroup(g, minus_one);
  for (Element z : z2.elements()) {
    if (e_with.contains(z)) continue;
    const Element one[] = {z};
    e = join(e, one);
    e_with = join(e_with, one);
  }
  Subgroup b = p_prime_part(whole_group(g), 2);

  for (Element x : e.elements())
    if (g.element_order(x) > 2) return std::nullopt;
  if (!b.is_abelian() || b.order() % 2 == 0) return std::nullopt;
  const Subgroup parts[] = {q, e, b};
  for (int a = 0; a < 3; ++a)
    for (int c = a + 1; c < 3; ++c) {
      if (!intersection(parts[a], parts[c]).is_trivial()) return std::nullopt;
      if (!commutes_modulo(parts[a], parts[c], trivial_subgroup(g))) return std::nullopt;
    }
  if (q.order() * e.order() * b.order() != g.order()) return std::nullopt;
  return DedekindParts{std::move(q), std::move(e), std::move(b)};
}

}  // namespace

DedekindStructure dedekind_structure(const FiniteGroup& g, const Limits& limits) {
  if (g.is_abelian()) return {DedekindStructure::Kind::abelian, std::nullopt};
  const bool brute = is_dedekind(g, limits);
  auto parts = hamiltonian_parts(g);
  if (brute != parts.has_value())
    throw std::logic_error("dedekind_structure: lattice and structural recognition disagree on " +
                           g.name());
  if (!parts) return {DedekindStructure::Kind::not_dedekind, std::nullopt};
  return {DedekindStructure::Kind::hamiltonian, std::move(parts)};
}

// Subnormality predicates ----------------------------------------------------------

PredicateResult is_t_group(const std::vector<Subgroup>& lattice) {
  if (lattice.empty()) return {};
  const Subgroup all = whole_group(lattice.front().parent());
  for (const auto& s : lattice) {
    if (is_normal(s, all)) continue;
    if (subnormal_defect(s, all)) return {false, s};
  }
  return {};
}

PredicateResult is_t_group(const FiniteGroup& g, const Limits& limits) {
  if (g.is_abelian()) return {};
  return is_t_group(all_subgroups(g, limits));
}

PredicateResult is_san_brute(const std::vector<Subgroup>& lattice) {
  if (lattice.empty()) return {};
  const Subgroup all = whole_group(lattice.front().parent());
  for (const auto& s : lattice) {
    if (!s.is_abelian() || is_normal(s, all)) continue;
    if (subnormal_defect(s, all)) return {false, s};
  }
  return {};
}

PredicateResult is_san(const FiniteGroup& g, SanMode mode, const Limits& limits) {
  if (g.is_abelian()) return {};
  if (mode == SanMode::brute) return is_san_brute(all_subgroups(g, limits));
  auto w = non_normal_cyclic(baer_radical(g));
  if (w) return {false, std::move(w)};
  return {};
}

PredicateResult is_transitively_normal(const Subgroup& h, const Limits& limits) {
  for (const auto& s : all_subgroups(h.parent(), limits)) {
    if (!h.is_subset_of(s)) continue;
    if (is_normal(h, s)) continue;
    if (subnormal_defect(h, s)) return {false, s};
  }
  return {};
}

bool is_supersolvable(const FiniteGroup& g) {
  const Subgroup all = whole_group(g);
  Subgroup cur = trivial_subgroup(g);
  while (!cur.is_whole()) {
    bool grown = false;
    for (Element x = 1; x < g.order() && !grown; ++x) {
      if (cur.contains(x)) continue;
      const Element one[] = {x};
      Subgroup m = join(cur, one);
      if (is_normal(m, all)) {
        cur = std::move(m);
        grown = true;
      }
    }
    if (!grown) return false;
  }
  return true;
}

PowerAutomorphisms power_automorphisms(const FiniteGroup& g, const Limits& limits) {
  auto maps = power_automorphism_maps(g, limits);
  const std::size_t n = maps.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const GroupMap c = compose(maps[a], maps[b]);
      const auto it = std::lower_bound(
          maps.begin(), maps.end(), c,
          [](const GroupMap& x, const GroupMap& y) { return x.images < y.images; });
      if (it == maps.end() || *it != c)
        throw std::logic_error("power_automorphisms: not closed under composition");
      table[a * n + b] = static_cast<Element>(it - maps.begin());
    }
  FiniteGroup pot("Pot(" + g.name() + ")", n, std::move(table), limits);
  return {std::move(maps), std::move(pot)};
}

std::size_t special_rank(const FiniteGroup& g, const Limits& limits) {
  const auto lattice = all_subgroups(g, limits);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  for (std::size_t i = 0; i < lattice.size(); ++i) index.emplace(lattice[i].mask(), i);
  // rank[i] = least number of generators of lattice[i]; the lattice is sorted
  // by order, so every proper subgroup is settled before its overgroups.
  std::vector<std::size_t> rank(lattice.size(), SIZE_MAX);
  rank[0] = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (Element x = 1; x < g.order(); ++x) {
      if (lattice[i].contains(x)) continue;
      const Element one[] = {x};
      const std::size_t j = index.at(join(lattice[i], one).mask());
      rank[j] = std::min(rank[j], rank[i] + 1);
    }
  }
  return *std::max_element(rank.begin(), rank.end());
}

ClassificationReport classify(const FiniteGroup& g, const Limits& limits) {
  ClassificationReport r;
  r.group_name = g.name();
  r.order = g.order();
  r.prime_spectrum = prime_divisors(g.order());
  r.is_abelian = g.is_abelian();
  r.is_nilpotent = is_nilpotent(g).nilpotent;
  r.is_solvable = is_solvable(g).solvable;
  r.is_supersolvable = is_supersolvable(g);
  r.baer_radical_order = baer_radical(g).order();
  r.fitting_order = fitting_subgroup(g).order();
  r.nilpotent_residual_order = nilpotent_residual(g).order();
  if (g.order() <= limits.max_subgroup_lattice) {
    const auto lattice = all_subgroups(g, limits);
    r.is_dedekind = r.is_abelian || is_dedekind(lattice);
    const auto t = is_t_group(lattice);
    r.is_t_group = t.holds;
    r.t_witness = t.witness;
    const auto s = is_san_brute(lattice);
    r.is_san = s.holds;
    r.san_witness = s.witness;
  } else {
    const auto s = is_san(g, SanMode::fast, limits);
    r.is_san = s.holds;
    r.san_witness = s.witness;
    r.is_dedekind = r.is_abelian;
  }
  return r;
}

// Theorem A ---------------------------------------------------------------------------

namespace {

std::vector<CheckItem> theorem_a_items(const FiniteGroup& g, const Limits& limits) {
  const Subgroup all = whole_group(g);
  const Subgroup b = baer_radical(g);
  const Subgroup l = fitting_subgroup(g);
  const Subgroup r = nilpotent_residual(g);
  const Subgroup z = hypercenter(g);
  const auto pi_g = prime_divisors(g.order());
  const auto pi_r = prime_divisors(r.order());
  std::vector<CheckItem> items;

  {
    CheckItem c{"i", "B is Dedekind, every subgroup of B is normal in G, G/B is abelian", Verdict::pass, "", {}};
    const auto w = non_normal_cyclic(b);
    const Subgroup derived = commutator_subgroup(all, all);
    const bool quotient_abelian = derived.is_subset_of(b);
    bool dedekind = true;
    if (!b.is_abelian()) {
      const FiniteGroup bg = as_group(b, "B");
      dedekind = bg.order() > limits.max_subgroup_lattice
                     ? !non_normal_cyclic(whole_group(bg)).has_value()
                     : is_dedekind(bg, limits);
    }
    c.verdict = verdict_of(!w && quotient_abelian && dedekind);
    c.detail = "|B| = " + std::to_string(b.order()) + "; G/B residual finiteness holds at finite order";
    c.witnesses.push_back({"B", b});
    if (w) c.witnesses.push_back({"non-normal cyclic subgroup of B", *w});
    if (!quotient_abelian) c.witnesses.push_back({"[G,G]", derived});
    items.push_back(std::move(c));
  }
  {
    CheckItem c{"ii",
                "R <= B, R is G-hypereccentric, G/R is nilpotent, 2 not in Pi(R), "
                "Pi(R) and Pi(L/R) disjoint",
                Verdict::pass, "", {}};
    const bool inside = r.is_subset_of(b);
    const bool eccentric = is_g_hypereccentric(r);
    const bool quotient_nilpotent = is_nilpotent(quotient(r).group).nilpotent;
    const bool no_two = std::find(pi_r.begin(), pi_r.end(), 2) == pi_r.end();
    const auto pi_lr = prime_divisors(l.order() / r.order());
    const bool coprime = disjoint(pi_r, pi_lr);
    c.verdict = verdict_of(inside && eccentric && quotient_nilpotent && no_two && coprime);
    c.detail = "Pi(R) = " + primes_text(pi_r) + ", Pi(L/R) = " + primes_text(pi_lr);
    c.witnesses.push_back({"R", r});
    items.push_back(std::move(c));
  }
  {
    CheckItem c{"iii", "C_G(R) = L", Verdict::pass, "", {}};
    const Subgroup cr = centralizer(r, all);
    c.verdict = verdict_of(cr == l);
    c.witnesses.push_back({"C_G(R)", cr});
    c.witnesses.push_back({"L", l});
    items.push_back(std::move(c));
  }
  {
    CheckItem c{"iv", "for odd p the Sylow p-subgroups of G are nilpotent", Verdict::pass, "", {}};
    bool ok = true;
    for (std::size_t p : pi_g) {
      if (p == 2) continue;
      const Subgroup s = sylow_subgroup(g, p);
      if (!is_nilpotent(s).nilpotent) {
        ok = false;
        c.witnesses.push_back({"Sylow " + std::to_string(p), s});
      }
    }
    c.verdict = verdict_of(ok);
    items.push_back(std::move(c));
  }
  {
    CheckItem c{"v", "for odd p the Sylow p-subgroups of B and L coincide and are abelian",
                Verdict::pass, "", {}};
    bool ok = true;
    for (std::size_t p : pi_g) {
      if (p == 2) continue;
      const Subgroup bp = sylow_subgroup(b, p);
      const Subgroup lp = sylow_subgroup(l, p);
      if (bp != lp || !lp.is_abelian()) {
        ok = false;
        c.witnesses.push_back({"B_" + std::to_string(p), bp});
        c.witnesses.push_back({"L_" + std::to_string(p), lp});
      }
    }
    c.verdict = verdict_of(ok);
    items.push_back(std::move(c));
  }
  {
    CheckItem c{"vi", "L = R x (L meet Z), Z the hypercenter", Verdict::pass,
                "torsion parts are the whole groups at finite order", {}};
    const Subgroup lz = intersection(l, z);
    c.verdict = verdict_of(join(r, lz) == l && intersection(r, lz).is_trivial());
    c.witnesses.push_back({"Z", z});
    c.witnesses.push_back({"L meet Z", lz});
    items.push_back(std::move(c));
  }
  {
    CheckItem c{"vii", "the Sylow 2-subgroup of G is nilpotent, L = B and the Sylow 2-subgroup of L is Dedekind",
                Verdict::pass, "", {}};
    const Subgroup l2 = sylow_subgroup(l, 2);
    bool l2_dedekind = true;
    if (!l2.is_abelian()) l2_dedekind = is_dedekind(as_group(l2, "L_2"), limits);
    const bool g2_nilpotent = is_nilpotent(sylow_subgroup(g, 2)).nilpotent;
    c.verdict = verdict_of(g2_nilpotent && l == b && l2_dedekind);
    c.detail = std::string("Sylow 2-subgroup of L is ") + (l2.is_abelian() ? "abelian" : "nonabelian Dedekind");
    c.witnesses.push_back({"L_2", l2});
    items.push_back(std::move(c));
  }
  {
    CheckItem c{"viii", "B_p lies in the hypercenter for every p not in Pi(R)", Verdict::pass, "", {}};
    bool ok = true;
    for (std::size_t p : prime_divisors(b.order())) {
      if (std::find(pi_r.begin(), pi_r.end(), p) != pi_r.end()) continue;
      const Subgroup bp = sylow_subgroup(b, p);
      if (!bp.is_subset_of(z)) {
        ok = false;
        c.witnesses.push_back({"B_" + std::to_string(p), bp});
      }
    }
    c.verdict = verdict_of(ok);
    items.push_back(std::move(c));
  }
  {
    CheckItem c{"ix", "the upper central series of G/R reaches G/R", Verdict::pass, "", {}};
    const auto q = quotient(r).group;
    const auto nil = is_nilpotent(q);
    c.verdict = verdict_of(nil.nilpotent);
    if (nil.nilpotent) c.detail = "class of G/R is " + std::to_string(nil.nilpotency_class);
    items.push_back(std::move(c));
  }
  items.push_back({"x", "structure of a non-nilpotent Sylow 2-subgroup of G", Verdict::vacuous_finite,
                   "requires elements of unbounded order", {}});
  items.push_back({"xi", "structure of a non-nilpotent Sylow 2-subgroup of L", Verdict::vacuous_finite,
                   "requires elements of unbounded order", {}});
  return items;
}

}  // namespace

ConditionReport theorem_a_report(const FiniteGroup& g, const Limits& limits) {
  ConditionReport rep{"theorem-a", false, "", {}};
  if (!is_solvable(g).solvable) {
    rep.gate_reason = "not solvable";
    return rep;
  }
  const auto san = san_verdict(g, limits);
  if (!san.holds) {
    rep.gate_reason = "not SAN";
    rep.items.push_back({"gate", "every subnormal abelian subgroup is normal", Verdict::not_applicable,
                         "witness is subnormal, abelian and not normal", {{"SAN witness", *san.witness}}});
    return rep;
  }
  rep.applicable = true;
  rep.items = theorem_a_items(g, limits);
  return rep;
}

ConditionReport theorem_a_conditions(const FiniteGroup& g, const Limits& limits) {
  ConditionReport rep{"theorem-a-conditions", false, "", {}};
  if (!is_solvable(g).solvable) {
    rep.gate_reason = "not solvable";
    return rep;
  }
  rep.applicable = true;
  rep.items = theorem_a_items(g, limits);
  return rep;
}

ConverseCheck theorem_a_converse(const FiniteGroup& g, const Limits& limits) {
  const auto rep = theorem_a_conditions(g, limits);
  ConverseCheck c;
  c.conditions_hold = rep.applicable && !rep.any_fail();
  c.san = san_verdict(g, limits).holds;
  return c;
}

// Complements ------------------------------------------------------------------------

std::vector<Subgroup> complements(const Subgroup& r, const Limits& limits) {
  const auto& g = r.parent();
  if (!is_normal(r)) throw PreconditionError("complements: subgroup is not normal");
  if (r.is_trivial()) return {whole_group(g)};
  if (r.is_whole()) return {trivial_subgroup(g)};
  std::vector<Subgroup> out;
  const std::size_t want = g.order() / r.order();
  for (auto& s : all_subgroups(g, limits))
    if (s.order() == want && intersection(s, r).is_trivial()) out.push_back(std::move(s));
  return out;
}

bool all_conjugate(const std::vector<Subgroup>& subgroups) {
  if (subgroups.empty()) return true;
  const auto& first = subgroups.front();
  const auto& g = first.parent();
  std::vector<Subgroup> orbit{first};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Element x : whole_group(g).generators()) {
      Subgroup c = conjugate_subgroup(orbit[i], x);
      if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) orbit.push_back(std::move(c));
    }
  return std::all_of(subgroups.begin(), subgroups.end(), [&](const Subgroup& s) {
    return std::find(orbit.begin(), orbit.end(), s) != orbit.end();
  });
}

// Corollary A2 -----------------------------------------------------------------------------

ConditionReport corollary_a2_report(const FiniteGroup& g, const Limits& limits) {
  if (!is_solvable(g).solvable) throw PreconditionError("corollary A2: group is not solvable");
  auto primes = prime_divisors(g.order());
  if (primes.size() < 2) throw PreconditionError("corollary A2: fewer than two prime divisors");
  if (!san_verdict(g, limits).holds) throw PreconditionError("corollary A2: group is not SAN");
  std::sort(primes.rbegin(), primes.rend());  // p_1 > ... > p_k
  const std::size_t k = primes.size();

  ConditionReport rep{"corollary-a2", true, "", {}};
  const Subgroup all = whole_group(g);
  const Subgroup b = baer_radical(g);
  const Subgroup r = nilpotent_residual(g);
  const auto qb = quotient(b);

  {
    CheckItem c{"i", "every subgroup of B is normal in G and C_G(B) <= B", Verdict::pass, "", {}};
    const auto w = non_normal_cyclic(b);
    const Subgroup cb = centralizer(b, all);
    c.verdict = verdict_of(!w && cb.is_subset_of(b));
    c.witnesses.push_back({"C_G(B)", cb});
    if (w) c.witnesses.push_back({"non-normal cyclic subgroup of B", *w});
    rep.items.push_back(std::move(c));
  }
  {
    CheckItem c{"ii", "G/B is abelian", Verdict::pass, "", {}};
    c.verdict = verdict_of(qb.group.is_abelian());
    c.detail = "|G/B| = " + std::to_string(qb.group.order());
    rep.items.push_back(std::move(c));
  }
  auto rank_of = [&](std::size_t p) {
    const Subgroup s = sylow_subgroup(qb.group, p);
    return special_rank(as_group(s), limits);
  };
  {
    CheckItem c{"iii", "B contains the Sylow p_1-subgroup; rank of the Sylow p_j-subgroup of G/B is at most j-1",
                Verdict::pass, "", {}};
    const Subgroup s1 = sylow_subgroup(g, primes[0]);
    bool ok = s1.is_subset_of(b);
    c.detail = "p_1 = " + std::to_string(primes[0]);
    for (std::size_t j = 2; j + 1 <= k; ++j) {
      const std::size_t rank = rank_of(primes[j - 1]);
      c.detail += "; rank at p_" + std::to_string(j) + " = " + std::to_string(rank);
      ok = ok && rank <= j - 1;
    }
    c.verdict = verdict_of(ok);
    rep.items.push_back(std::move(c));
  }
  {
    CheckItem c{"iv", "rank of the Sylow p_k-subgroup of G/B is at most k-1 (k when p_k = 2)",
                Verdict::pass, "", {}};
    const std::size_t pk = primes.back();
    const std::size_t rank = rank_of(pk);
    const std::size_t bound = pk == 2 ? k : k - 1;
    c.verdict = verdict_of(rank <= bound);
    c.detail = "rank " + std::to_string(rank) + ", bound " + std::to_string(bound);
    rep.items.push_back(std::move(c));
  }
  const auto comps = complements(r, limits);
  {
    CheckItem c{"v", "G = R x| S with S nilpotent and its 2'-part nilpotent", Verdict::pass, "", {}};
    if (comps.empty()) {
      c.verdict = Verdict::fail;
      c.detail = "no complement to R";
    } else {
      const Subgroup& s = comps.front();
      const bool nil = is_nilpotent(s).nilpotent && is_nilpotent(p_prime_part(s, 2)).nilpotent;
      c.verdict = verdict_of(nil);
      c.witnesses.push_back({"S", s});
    }
    c.witnesses.push_back({"R", r});
    rep.items.push_back(std::move(c));
  }
  {
    CheckItem c{"vi", "all complements of R are conjugate", Verdict::pass, "", {}};
    c.verdict = verdict_of(!comps.empty() && all_conjugate(comps));
    c.detail = std::to_string(comps.size()) + " complements";
    rep.items.push_back(std::move(c));
  }
  return rep;
}

// Corollary A3 ----------------------------------------------------------------------------------

ConditionReport corollary_a3_report(const FiniteGroup& g, const Limits& limits) {
  const auto primes = prime_divisors(g.order());
  if (primes.size() != 2) throw PreconditionError("corollary A3: need exactly two prime divisors");
  if (!is_solvable(g).solvable) throw PreconditionError("corollary A3: group is not solvable");
  if (is_nilpotent(g).nilpotent) throw PreconditionError("corollary A3: group is nilpotent");
  if (!san_verdict(g, limits).holds) throw PreconditionError("corollary A3: group is not SAN");
  const std::size_t p = primes[0], q = primes[1];

  ConditionReport rep{"corollary-a3", true, "", {}};
  const Subgroup all = whole_group(g);
  const Subgroup qs = sylow_subgroup(g, q);
  const Subgroup ps = sylow_subgroup(g, p);
  const Subgroup b = baer_radical(g);

  {
    CheckItem c{"i", "the Sylow q-subgroup Q is abelian and G = Q x| P", Verdict::pass, "", {}};
    c.verdict = verdict_of(qs.is_abelian() && is_normal(qs, all) &&
                           intersection(qs, ps).is_trivial() &&
                           qs.order() * ps.order() == g.order());
    c.witnesses.push_back({"Q", qs});
    c.witnesses.push_back({"P", ps});
    rep.items.push_back(std::move(c));
  }
  {
    CheckItem c{"ii", "the Sylow p-subgroups are conjugate", Verdict::pass, "", {}};
    std::vector<Subgroup> sylows;
    for (auto& s : all_subgroups(g, limits))
      if (s.order() == ps.order()) sylows.push_back(std::move(s));
    c.verdict = verdict_of(all_conjugate(sylows));
    c.detail = std::to_string(sylows.size()) + " Sylow " + std::to_string(p) + "-subgroups";
    rep.items.push_back(std::move(c));
  }
  {
    CheckItem c{"iii", "p divides q - 1", Verdict::pass, "", {}};
    c.verdict = verdict_of((q - 1) % p == 0);
    c.detail = "p = " + std::to_string(p) + ", q = " + std::to_string(q);
    rep.items.push_back(std::move(c));
  }
  const Subgroup cpq = centralizer(qs, ps);
  {
    CheckItem c{"iv", "P/C_P(Q) is cyclic and C_P(Q) x Q is the Baer radical", Verdict::pass, "", {}};
    const FiniteGroup pg = as_group(ps, "P");
    const auto factor = quotient(relative(cpq, ps, pg)).group;
    const bool cyclic_factor = is_cyclic(factor);
    const bool direct = intersection(cpq, qs).is_trivial() &&
                        commutes_modulo(cpq, qs, trivial_subgroup(g)) && join(cpq, qs) == b;
    c.verdict = verdict_of(cyclic_factor && direct);
    c.detail = "|P/C_P(Q)| = " + std::to_string(factor.order());
    c.witnesses.push_back({"C_P(Q)", cpq});
    c.witnesses.push_back({"B", b});
    rep.items.push_back(std::move(c));
  }
  {
    CheckItem c{"v-odd", "if p is odd and P is nonabelian then P is nilpotent", Verdict::not_applicable, "", {}};
    if (p != 2 && !ps.is_abelian()) c.verdict = verdict_of(is_nilpotent(ps).nilpotent);
    else c.detail = p == 2 ? "p = 2" : "P is abelian";
    rep.items.push_back(std::move(c));
  }
  rep.items.push_back({"v-two", "structure of a non-Dedekind Sylow 2-subgroup P", Verdict::vacuous_finite,
                       "requires elements of unbounded order in C_P(Q)", {}});
  return rep;
}

}  // namespace sanlib
