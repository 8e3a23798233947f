#include <algorithm>
#include <unordered_map>

#include "detail.hpp"
#include "sanlib/group.hpp"

namespace sanlib {

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.max_subgroup_lattice)
    throw CapExceeded("all_subgroups: order " + std::to_string(g.order()) +
                      " exceeds cap " +
                      std::to_string(limits.max_subgroup_lattice));

  std::vector<detail::Growing> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto insert = [&](detail::Growing&& h) {
    if (index.emplace(h.mask, found.size()).second) found.push_back(std::move(h));
  };

  insert(detail::Growing(g));
  // Every subgroup is generated by elements of prime-power order, so those
  // cyclic subgroups are the only extension steps needed.
  std::vector<Element> extenders;
  for (Element x = 1; x < g.order(); ++x) {
    detail::Growing c(g);
    detail::extend(g, c, x);
    const bool fresh = !index.contains(c.mask);
    insert(std::move(c));
    if (fresh && prime_divisors(g.element_order(x)).size() == 1)
      extenders.push_back(x);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element x : extenders) {
      if (found[i].mask.test(x)) continue;
      detail::Growing k = found[i];
      detail::extend(g, k, x);
      insert(std::move(k));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& h : found) out.push_back(detail::finish(g, std::move(h)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> subgroups_within(const std::vector<Subgroup>& lattice,
                                       const Subgroup& h) {
  std::vector<Subgroup> out;
  for (const auto& s : lattice)
    if (s.is_subset_of(h)) out.push_back(s);
  return out;
}

Subgroup sylow_subgroup(const Subgroup& h, std::size_t p) {
  if (!is_prime(p)) throw PreconditionError("sylow_subgroup: p is not prime");
  const auto& g = h.parent();
  const std::size_t target = p_part(h.order(), p);
  Subgroup cur = trivial_subgroup(g);
  while (cur.order() < target) {
    const Subgroup n = normalizer(cur, h);
    bool grown = false;
    for (Element x : n.elements()) {
      if (cur.contains(x)) continue;
      if (!cur.contains(g.power(x, static_cast<long long>(p)))) continue;
      Element one[] = {x};
      cur = join(cur, one);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow_subgroup: no p-element in normalizer");
  }
  return cur;
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::size_t p) {
  return sylow_subgroup(whole_group(g), p);
}

}  // namespace sanlib
