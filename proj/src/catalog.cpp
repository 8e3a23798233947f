#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "sanlib/construct.hpp"
#include "sanlib/series.hpp"

namespace sanlib {

namespace {

// Invariant factor lists d1 | d2 | ... | dk with k >= 2 and product <= max.
void abelian_specs(std::size_t max, std::vector<std::size_t>& cur,
                   std::vector<AbelianSpec>& out) {
  std::size_t prod = 1;
  for (std::size_t c : cur) prod *= c;
  if (cur.size() >= 2) out.push_back(AbelianSpec{cur});
  if (cur.empty()) {
    for (std::size_t d = 2; d * d <= max; ++d) {
      cur.push_back(d);
      abelian_specs(max, cur, out);
      cur.pop_back();
    }
    return;
  }
  for (std::size_t d = cur.back(); prod * d <= max; d += cur.back()) {
    cur.push_back(d);
    abelian_specs(max, cur, out);
    cur.pop_back();
  }
}

struct Fingerprint {
  std::size_t order;
  bool abelian;
  std::vector<std::pair<std::size_t, std::size_t>> order_profile;
  std::size_t center_order;
  std::size_t derived_order;
  std::vector<std::size_t> class_sizes;  // centralizer sizes, sorted
  auto tie() const {
    return std::tie(order, abelian, order_profile, center_order, derived_order, class_sizes);
  }
  bool operator<(const Fingerprint& o) const { return tie() < o.tie(); }
};

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f{g.order(), g.is_abelian(), {}, 0, 0, {}};
  std::map<std::size_t, std::size_t> prof;
  for (std::size_t o : g.element_orders()) ++prof[o];
  f.order_profile.assign(prof.begin(), prof.end());
  if (!g.is_abelian()) {
    f.center_order = center(g).order();
    f.derived_order = commutator_subgroup(whole_group(g), whole_group(g)).order();
    for (Element x = 0; x < g.order(); ++x) {
      std::size_t c = 0;
      for (Element y = 0; y < g.order(); ++y) c += g.mul(x, y) == g.mul(y, x);
      f.class_sizes.push_back(c);
    }
    std::sort(f.class_sizes.begin(), f.class_sizes.end());
  }
  return f;
}

}  // namespace

std::vector<FiniteGroup> catalog(std::size_t max_order, const Limits& limits) {
  if (max_order > limits.max_order)
    throw CapExceeded("catalog: max_order " + std::to_string(max_order) + " exceeds cap");
  const std::size_t n = max_order;
  std::vector<FiniteGroup> base;
  auto add = [&](std::size_t order, const std::function<FiniteGroup()>& make) {
    if (order >= 1 && order <= n) base.push_back(make());
  };

  for (std::size_t k = 1; k <= n; ++k) add(k, [k] { return cyclic(k); });
  add(6, [] { return symmetric(3); });
  add(8, [] { return generalized_quaternion(8); });
  add(12, [] { return alternating(4); });
  add(24, [] { return symmetric(4); });
  add(24, [] { return sl23(); });
  add(60, [] { return alternating(5); });
  add(120, [] { return symmetric(5); });

  std::vector<AbelianSpec> specs;
  std::vector<std::size_t> cur;
  abelian_specs(n, cur, specs);
  for (const auto& s : specs) {
    std::size_t order = 1;
    for (std::size_t c : s.cyclic_orders) order *= c;
    const bool elementary =
        std::all_of(s.cyclic_orders.begin(), s.cyclic_orders.end(),
                    [&](std::size_t c) { return c == s.cyclic_orders.front(); }) &&
        is_prime(s.cyclic_orders.front());
    if (elementary)
      add(order, [&] { return elementary_abelian(s.cyclic_orders.front(), s.cyclic_orders.size()); });
    else
      add(order, [&] { return abelian(s, limits); });
  }
  for (std::size_t k = 6; k <= n; k += 2) add(k, [k] { return dihedral(k); });
  for (std::size_t k = 16; k <= n; k *= 2) add(k, [k] { return generalized_quaternion(k); });
  for (std::size_t k = 3; 4 * k <= n; ++k)  // dicyclic groups of order 4k
    add(4 * k, [k, &limits] {
      return generalized_dihedral(AbelianSpec{{2 * k}}, static_cast<Element>(k), limits);
    });
  for (const auto& s : specs) {
    if (s.cyclic_orders.size() != 2) continue;
    std::size_t order = 2 * s.cyclic_orders[0] * s.cyclic_orders[1];
    add(order, [&] { return generalized_dihedral(s, std::nullopt, limits); });
  }
  for (std::size_t q = 3; 2 * q <= n; ++q) {
    for (std::size_t m = 2; q * m <= n; ++m) {
      for (std::size_t r = 2; r < q; ++r) {
        if (multiplicative_order(r, q) == m) {
          add(q * m, [=] { return metacyclic(q, m, r); });
          break;
        }
      }
    }
  }
  // Scalar-action families Q ⋊ C_{p^k}.
  for (std::size_t q = 3; q <= n; ++q) {
    if (!is_prime(q)) continue;
    const std::vector<AbelianSpec> shapes{
        {{q}}, {{q, q}}, {{q * q}}, {{q, q * q}}, {{q, q, q}}};
    for (const auto& shape : shapes) {
      std::size_t qorder = 1, exponent = 1;
      for (std::size_t c : shape.cyclic_orders) {
        qorder *= c;
        exponent = std::max(exponent, c);
      }
      if (qorder > n) continue;
      for (std::size_t p : prime_divisors(q - 1)) {
        for (std::size_t act = p; (q - 1) % act == 0; act *= p) {
          for (std::size_t cyc = act; qorder * cyc <= n; cyc *= p) {
            if (shape.cyclic_orders.size() == 1 && shape.cyclic_orders[0] == q && cyc == act)
              continue;  // metacyclic family already has these
            add(qorder * cyc, [&, p, act, cyc] { return san_family(shape, p, act, cyc, limits); });
          }
        }
      }
    }
  }

  // Direct products of pairs with at least one nonabelian factor; products
  // of abelian groups are already listed by invariant factors.
  const std::size_t base_count = base.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    for (std::size_t j = i; j < base_count; ++j) {
      const auto& a = base[i];
      const auto& b = base[j];
      if (a.order() < 2 || b.order() < 2) continue;
      if (a.order() * b.order() > n) continue;
      if (a.is_abelian() && b.is_abelian()) continue;
      base.push_back(direct_product(a, b, limits));
    }
  }

  std::stable_sort(base.begin(), base.end(), [](const FiniteGroup& x, const FiniteGroup& y) {
    return x.order() < y.order();
  });

  std::vector<FiniteGroup> out;
  std::map<Fingerprint, std::vector<std::size_t>> buckets;
  for (auto& g : base) {
    if (g.order() > limits.max_morphism_order) {
      out.push_back(std::move(g));
      continue;
    }
    auto& bucket = buckets[fingerprint(g)];
    bool dup = false;
    for (std::size_t idx : bucket)
      if (is_isomorphic(out[idx], g, limits)) {
        dup = true;
        break;
      }
    if (dup) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace sanlib
