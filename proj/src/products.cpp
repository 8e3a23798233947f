#include <algorithm>

#include "detail.hpp"
#include "sanlib/group.hpp"

namespace sanlib {

Quotient quotient(const Subgroup& n) {
  const auto& g = n.parent();
  if (!is_normal(n)) throw PreconditionError("quotient: subgroup is not normal");
  const std::size_t none = g.order();
  std::vector<std::size_t> coset(g.order(), none);
  std::vector<Element> reps;
  for (Element e = 0; e < g.order(); ++e) {
    if (coset[e] != none) continue;
    for (Element x : n.elements()) coset[g.mul(e, x)] = reps.size();
    reps.push_back(e);
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = static_cast<Element>(coset[g.mul(reps[i], reps[j])]);
  GroupMap proj;
  proj.images.reserve(g.order());
  for (std::size_t c : coset) proj.images.push_back(static_cast<Element>(c));
  FiniteGroup q(g.name() + "/N" + std::to_string(n.order()), m, std::move(table));
  return Quotient{std::move(q), std::move(proj), std::move(reps)};
}

FiniteGroup as_group(const Subgroup& h, std::string name) {
  const auto& g = h.parent();
  const auto& el = h.elements();
  const std::size_t m = el.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element p = g.mul(el[i], el[j]);
      table[i * m + j] = static_cast<Element>(
          std::lower_bound(el.begin(), el.end(), p) - el.begin());
    }
  if (name.empty()) name = g.name() + "[" + std::to_string(m) + "]";
  return FiniteGroup(std::move(name), m, std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           const Limits& limits) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > limits.max_order)
    throw CapExceeded("direct_product: order " + std::to_string(n) +
                      " exceeds cap " + std::to_string(limits.max_order));
  std::vector<Element> table(n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Element>(
          a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb));
  return FiniteGroup(a.name() + "x" + b.name(), n, std::move(table), limits);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<GroupMap>& action,
                               const Limits& limits) {
  const std::size_t nn = n.order(), nh = h.order(), total = nn * nh;
  if (total > limits.max_order)
    throw CapExceeded("semidirect_product: order " + std::to_string(total) +
                      " exceeds cap " + std::to_string(limits.max_order));
  if (action.size() != nh)
    throw PreconditionError("semidirect_product: action must list one map per element");
  for (const auto& f : action)
    if (!is_automorphism(n, f))
      throw PreconditionError("semidirect_product: action contains a non-automorphism");
  for (Element x = 0; x < nh; ++x)
    for (Element y = 0; y < nh; ++y)
      if (action[h.mul(x, y)] != compose(action[x], action[y]))
        throw PreconditionError(
            "semidirect_product: action is not a homomorphism at (" +
            std::to_string(x) + ", " + std::to_string(y) + ")");
  std::vector<Element> table(total * total);
  for (Element i = 0; i < total; ++i) {
    const Element a = i / nh, x = i % nh;
    for (Element j = 0; j < total; ++j) {
      const Element b = j / nh, y = j % nh;
      table[i * total + j] =
          static_cast<Element>(n.mul(a, action[x](b)) * nh + h.mul(x, y));
    }
  }
  return FiniteGroup(n.name() + ":" + h.name(), total, std::move(table), limits);
}

}  // namespace sanlib
