#include "sanlib/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <thread>

#include "sanlib/classify.hpp"
#include "sanlib/series.hpp"

namespace sanlib {

std::string_view to_string(SweepCheck c) {
  switch (c) {
    case SweepCheck::san_equivalence: return "san-equivalence";
    case SweepCheck::implications: return "implications";
    case SweepCheck::theorem_a: return "theorem-a";
    case SweepCheck::oracles: return "oracles";
  }
  return "?";
}

std::optional<SweepCheck> parse_sweep_check(std::string_view name) {
  for (auto c : {SweepCheck::san_equivalence, SweepCheck::implications, SweepCheck::theorem_a,
                 SweepCheck::oracles})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

std::vector<std::optional<std::size_t>> lattice_subnormal_defects(
    const std::vector<Subgroup>& lattice) {
  std::vector<std::optional<std::size_t>> dist(lattice.size());
  if (lattice.empty()) return dist;
  const std::size_t top = lattice.size() - 1;  // sorted by order, G is last
  dist[top] = 0;
  std::deque<std::size_t> queue{top};
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t h = 0; h < lattice.size(); ++h) {
      if (dist[h] || lattice[h].order() >= lattice[k].order()) continue;
      if (!lattice[h].is_subset_of(lattice[k]) || !is_normal(lattice[h], lattice[k])) continue;
      dist[h] = *dist[k] + 1;
      queue.push_back(h);
    }
  }
  return dist;
}

namespace {

std::string describe(const Subgroup& s) {
  std::string out = "order " + std::to_string(s.order()) + " {";
  for (std::size_t i = 0; i < s.elements().size(); ++i)
    out += (i ? "," : "") + std::to_string(s.elements()[i]);
  return out + "}";
}

void san_equivalence(const FiniteGroup& g, const Limits& limits, SweepOutcome& out) {
  const auto brute = is_san_brute(all_subgroups(g, limits));
  const auto fast = is_san(g, SanMode::fast, limits);
  out.notes.push_back(std::string("san = ") + (brute.holds ? "true" : "false"));
  if (brute.holds != fast.holds)
    out.violations.push_back(std::string("brute SAN = ") + (brute.holds ? "true" : "false") +
                             " but fast SAN = " + (fast.holds ? "true" : "false"));
}

void implications(const FiniteGroup& g, const Limits& limits, SweepOutcome& out) {
  const auto lattice = all_subgroups(g, limits);
  const bool abelian = g.is_abelian();
  const bool dedekind = is_dedekind(lattice);
  const bool t = is_t_group(lattice).holds;
  const bool san = is_san_brute(lattice).holds;
  const bool solvable = is_solvable(g).solvable;
  const bool nilpotent = is_nilpotent(g).nilpotent;
  auto require = [&](bool cond, const std::string& what) {
    if (!cond) out.violations.push_back(what);
  };
  require(!abelian || dedekind, "abelian but not Dedekind");
  require(!dedekind || san, "Dedekind but not SAN");
  require(!t || san, "T-group but not SAN");
  if (san && solvable) {
    require(is_supersolvable(g), "solvable SAN but not supersolvable");
    const Subgroup all = whole_group(g);
    require(commutator_subgroup(all, all).is_subset_of(baer_radical(g)),
            "solvable SAN but G/B not abelian");
    for (std::size_t p : prime_divisors(g.order()))
      if (p != 2)
        require(is_nilpotent(sylow_subgroup(g, p)).nilpotent,
                "solvable SAN but Sylow " + std::to_string(p) + "-subgroup not nilpotent");
  }
  if (san && nilpotent)
    for (std::size_t p : prime_divisors(g.order()))
      if (p != 2)
        require(sylow_subgroup(g, p).is_abelian(),
                "nilpotent SAN but Sylow " + std::to_string(p) + "-subgroup not abelian");
  if (san && !t) out.notes.push_back("SAN but not T");
}

void theorem_a(const FiniteGroup& g, const Limits& limits, SweepOutcome& out) {
  const auto rep = theorem_a_report(g, limits);
  for (const auto& item : rep.items)
    if (item.verdict == Verdict::fail)
      out.violations.push_back("theorem A item " + item.id + " fails: " + item.statement);
  if (!theorem_a_converse(g, limits).ok())
    out.violations.push_back("finite theorem A conditions hold but group is not SAN");
  if (!rep.applicable) {
    out.notes.push_back("theorem A not applicable: " + rep.gate_reason);
    return;
  }
  out.notes.push_back("theorem A applicable");
  const auto primes = prime_divisors(g.order());
  if (primes.size() > 1) {
    const auto a2 = corollary_a2_report(g, limits);
    for (const auto& item : a2.items)
      if (item.verdict == Verdict::fail)
        out.violations.push_back("corollary A2 item " + item.id + " fails: " + item.statement);
  }
  if (primes.size() == 2 && !is_nilpotent(g).nilpotent) {
    const auto a3 = corollary_a3_report(g, limits);
    for (const auto& item : a3.items)
      if (item.verdict == Verdict::fail)
        out.violations.push_back("corollary A3 item " + item.id + " fails: " + item.statement);
  }
  // Every subgroup of Z(B) that is normal in G has a Z(G)-decomposition.
  const Subgroup b = baer_radical(g);
  const Subgroup zb = centralizer(b, b);
  const Subgroup all = whole_group(g);
  for (const auto& s : all_subgroups(g, limits)) {
    if (!s.is_subset_of(zb) || !is_normal(s, all)) continue;
    const auto dec = zg_decomposition(s, limits);
    if (!dec) {
      out.violations.push_back("no Z(G)-decomposition for normal subgroup " + describe(s) +
                               " of Z(B)");
      continue;
    }
    if (dec->central_part != g_hypercenter_of(s) || !is_normal(dec->eccentric_part, all))
      out.violations.push_back("inconsistent Z(G)-decomposition of " + describe(s));
  }
}

void oracles(const FiniteGroup& g, const Limits& limits, SweepOutcome& out) {
  if (auto v = validate(g)) out.violations.push_back("invalid table: " + v->describe());
  const auto lattice = all_subgroups(g, limits);
  const Subgroup all = whole_group(g);
  const auto defects = lattice_subnormal_defects(lattice);
  std::vector<Subgroup> normals;
  for (const auto& s : lattice)
    if (is_normal(s, all)) normals.push_back(s);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& h = lattice[i];
    const auto d = subnormal_defect(h, all);
    if (d != defects[i])
      out.violations.push_back("subnormal defect of " + describe(h) + " differs from lattice search");
    if ((d && *d <= 1) != is_normal(h, all))
      out.violations.push_back("defect at most one disagrees with normality for " + describe(h));
    const Subgroup nc = normal_closure(h, all);
    bool minimal = is_normal(nc, all) && h.is_subset_of(nc);
    for (const auto& n : normals)
      if (h.is_subset_of(n) && !nc.is_subset_of(n)) minimal = false;
    if (!minimal) out.violations.push_back("normal closure of " + describe(h) + " is not minimal");
  }
  if (baer_radical(g) != fitting_subgroup(g))
    out.violations.push_back("Baer radical differs from Fitting subgroup");
  const Subgroup r = nilpotent_residual(g);
  if (!r.is_trivial())
    for (const auto& n : normals)
      if (is_nilpotent(quotient(n).group).nilpotent && !r.is_subset_of(n))
        out.violations.push_back("nilpotent residual not inside " + describe(n));
  const auto top = quotient(hypercenter(g)).group;
  if (!center(top).is_trivial())
    out.violations.push_back("G modulo its hypercenter has nontrivial center");
}

}  // namespace

SweepOutcome run_check(SweepCheck check, const FiniteGroup& g, const Limits& limits) {
  SweepOutcome out;
  out.group = g.name();
  out.order = g.order();
  try {
    switch (check) {
      case SweepCheck::san_equivalence: san_equivalence(g, limits, out); break;
      case SweepCheck::implications: implications(g, limits, out); break;
      case SweepCheck::theorem_a: theorem_a(g, limits, out); break;
      case SweepCheck::oracles: oracles(g, limits, out); break;
    }
  } catch (const std::exception& e) {
    out.violations.push_back(std::string("error: ") + e.what());
  }
  out.ok = out.violations.empty();
  return out;
}

std::vector<SweepOutcome> sweep(const std::vector<FiniteGroup>& groups, SweepCheck check,
                                std::size_t jobs, const Limits& limits) {
  std::vector<SweepOutcome> results(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++)
      results[i] = run_check(check, groups[i], limits);
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(groups.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace sanlib
