#include "sanlib/construct.hpp"

#include <array>
#include <map>
#include <numeric>

namespace sanlib {

namespace {

std::string abelian_name(const AbelianSpec& s) {
  std::string out;
  for (std::size_t i = 0; i < s.cyclic_orders.size(); ++i)
    out += (i ? "xC" : "C") + std::to_string(s.cyclic_orders[i]);
  return out;
}

std::size_t spec_order(const AbelianSpec& s) {
  std::size_t n = 1;
  for (std::size_t c : s.cyclic_orders) n *= c;
  return n;
}

// Automorphism x -> x^r of an abelian group.
GroupMap power_map(const FiniteGroup& g, long long r) {
  GroupMap f;
  f.images.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) f.images.push_back(g.power(x, r));
  return f;
}

// action[k] = generator-action^k for a cyclic acting group of order n.
std::vector<GroupMap> cyclic_action(const GroupMap& gen, std::size_t n) {
  std::vector<GroupMap> out;
  GroupMap cur{std::vector<Element>(gen.images.size())};
  std::iota(cur.images.begin(), cur.images.end(), Element{0});
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(cur);
    cur = compose(gen, cur);
  }
  return out;
}

}  // namespace

PermutationGroup from_permutations(std::string name, std::size_t degree,
                                   const std::vector<Permutation>& generators,
                                   const Limits& limits) {
  for (const auto& p : generators) {
    if (p.size() != degree)
      throw PreconditionError("permutation has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto x : p) {
      if (x >= degree || hit[x])
        throw PreconditionError("generator is not a permutation");
      hit[x] = 1;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  auto product = [](const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      Permutation e = product(elems[i], s);
      if (index.contains(e)) continue;
      if (elems.size() >= limits.max_order)
        throw CapExceeded("permutation group exceeds order cap " +
                          std::to_string(limits.max_order));
      index.emplace(e, static_cast<Element>(elems.size()));
      elems.push_back(std::move(e));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = index.at(product(elems[i], elems[j]));
  return {FiniteGroup(std::move(name), n, std::move(table), limits), std::move(elems)};
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic: order must be positive");
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>((i + j) % n);
  return FiniteGroup("C" + std::to_string(n), n, std::move(t));
}

FiniteGroup abelian(const AbelianSpec& spec, const Limits& limits) {
  if (spec.cyclic_orders.empty())
    throw PreconditionError("abelian: need at least one cyclic factor");
  for (std::size_t c : spec.cyclic_orders)
    if (c < 2) throw PreconditionError("abelian: cyclic orders must be >= 2");
  const std::size_t n = spec_order(spec);
  if (n > limits.max_order)
    throw CapExceeded("abelian: order " + std::to_string(n) + " exceeds cap");
  const auto& ords = spec.cyclic_orders;
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t a = i, b = j, r = 0, place = 1;
      for (std::size_t k = ords.size(); k-- > 0;) {
        r += ((a % ords[k] + b % ords[k]) % ords[k]) * place;
        place *= ords[k];
        a /= ords[k];
        b /= ords[k];
      }
      t[i * n + j] = static_cast<Element>(r);
    }
  return FiniteGroup(abelian_name(spec), n, std::move(t), limits);
}

FiniteGroup elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p) || k == 0)
    throw PreconditionError("elementary_abelian: need prime p and k >= 1");
  return abelian(AbelianSpec{std::vector<std::size_t>(k, p)})
      .renamed("C" + std::to_string(p) + "^" + std::to_string(k));
}

FiniteGroup dihedral(std::size_t order) {
  if (order < 4 || order % 2)
    throw PreconditionError("dihedral: order must be even and >= 4");
  const std::size_t n = order / 2;
  // r^i s^a * r^j s^b = r^(i + (-1)^a j) s^(a+b)
  std::vector<Element> t(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % n, a = x / n, j = y % n, b = y / n;
      const std::size_t e = a ? (i + n - j) % n : (i + j) % n;
      t[x * order + y] = static_cast<Element>(e + n * ((a + b) % 2));
    }
  return FiniteGroup("D" + std::to_string(order), order, std::move(t));
}

FiniteGroup generalized_quaternion(std::size_t order) {
  if (order < 8 || !is_p_power(order, 2))
    throw PreconditionError("generalized_quaternion: order must be 2^m, m >= 3");
  const std::size_t n = order / 2;
  // x^i y^a * x^j y^b = x^(i + (-1)^a j) y^(a+b), y^2 = x^(n/2)
  std::vector<Element> t(order * order);
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t i = u % n, a = u / n, j = v % n, b = v / n;
      std::size_t e = a ? (i + n - j) % n : (i + j) % n;
      std::size_t s = a + b;
      if (s == 2) {
        e = (e + n / 2) % n;
        s = 0;
      }
      t[u * order + v] = static_cast<Element>(e + n * s);
    }
  return FiniteGroup("Q" + std::to_string(order), order, std::move(t));
}

FiniteGroup symmetric(std::size_t n) {
  if (n < 1 || n > 5) throw PreconditionError("symmetric: need 1 <= n <= 5");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens = {swap, cycle};
  }
  return from_permutations("S" + std::to_string(n), n, gens).group;
}

FiniteGroup alternating(std::size_t n) {
  if (n < 1 || n > 5) throw PreconditionError("alternating: need 1 <= n <= 5");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) {  // 3-cycles (1 2 k)
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0u);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return from_permutations("A" + std::to_string(n), n, gens).group;
}

FiniteGroup sl23() {
  using M = std::array<int, 4>;
  auto mul = [](const M& a, const M& b) {
    return M{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
             (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
  };
  const std::vector<M> gens{M{1, 1, 0, 1}, M{1, 0, 1, 1}};
  std::vector<M> elems{M{1, 0, 0, 1}};
  std::map<M, Element> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : gens) {
      M e = mul(elems[i], s);
      if (index.emplace(e, static_cast<Element>(elems.size())).second) elems.push_back(e);
    }
  const std::size_t n = elems.size();
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = index.at(mul(elems[i], elems[j]));
  return FiniteGroup("SL(2,3)", n, std::move(t));
}

std::size_t multiplicative_order(std::size_t r, std::size_t modulus) {
  if (modulus == 1) return 1;
  if (std::gcd(r, modulus) != 1) return 0;
  std::size_t x = r % modulus, k = 1;
  while (x != 1 % modulus) {
    x = x * r % modulus;
    ++k;
  }
  return k;
}

FiniteGroup metacyclic(std::size_t q_power, std::size_t m, std::size_t r) {
  if (q_power < 1 || m < 1) throw PreconditionError("metacyclic: orders must be positive");
  if (std::gcd(r, q_power) != 1)
    throw PreconditionError("metacyclic: r is not a unit modulo q_power");
  if (multiplicative_order(r, q_power) != m)
    throw PreconditionError("metacyclic: r has multiplicative order " +
                            std::to_string(multiplicative_order(r, q_power)) +
                            ", expected " + std::to_string(m));
  const FiniteGroup b = cyclic(q_power), a = cyclic(m);
  auto action = cyclic_action(power_map(b, static_cast<long long>(r)), m);
  return semidirect_product(b, a, action)
      .renamed("M(" + std::to_string(q_power) + "," + std::to_string(m) + "," +
               std::to_string(r) + ")");
}

FiniteGroup generalized_dihedral(const AbelianSpec& spec,
                                 std::optional<Element> square,
                                 const Limits& limits) {
  const FiniteGroup b = abelian(spec, limits);
  const GroupMap inversion = power_map(b, -1);
  if (!square) {
    return semidirect_product(b, cyclic(2), cyclic_action(inversion, 2), limits)
        .renamed("Dih(" + abelian_name(spec) + ")");
  }
  const Element t = *square;
  if (t >= b.order() || b.element_order(t) != 2)
    throw PreconditionError("generalized_dihedral: designated element is not an involution");
  const FiniteGroup big = semidirect_product(b, cyclic(4), cyclic_action(inversion, 4), limits);
  // (t^-1, a0^2) = (t, a0^2) is central of order 2.
  const Element z = t * 4 + 2;
  Quotient q = quotient(cyclic_subgroup(big, z));
  return q.group.renamed("Dic(" + abelian_name(spec) + ";" + std::to_string(t) + ")");
}

FiniteGroup san_family(const AbelianSpec& q_spec, std::size_t p,
                       std::size_t action_order, std::size_t cyclic_order,
                       const Limits& limits) {
  if (q_spec.cyclic_orders.empty())
    throw PreconditionError("san_family: empty q_spec");
  const auto q_primes = prime_divisors(q_spec.cyclic_orders.front());
  if (q_primes.size() != 1)
    throw PreconditionError("san_family: q_spec orders must be prime powers");
  const std::size_t q = q_primes.front();
  std::size_t exponent = 1;
  for (std::size_t c : q_spec.cyclic_orders) {
    if (c < 2 || !is_p_power(c, q))
      throw PreconditionError("san_family: q_spec orders must be powers of one prime");
    exponent = std::max(exponent, c);
  }
  if (!is_prime(p) || p == q) throw PreconditionError("san_family: p must be a prime other than q");
  if (cyclic_order == 0) cyclic_order = action_order;
  if (!is_p_power(action_order, p) || !is_p_power(cyclic_order, p) ||
      cyclic_order % action_order != 0)
    throw PreconditionError("san_family: action_order and cyclic_order must be powers of p, "
                            "action_order dividing cyclic_order");
  std::size_t r = 0;
  for (std::size_t c = 1; c < exponent + 1 && r == 0; ++c)
    if (multiplicative_order(c, exponent) == action_order) r = c;
  if (r == 0)
    throw PreconditionError("san_family: no unit of order " + std::to_string(action_order) +
                            " modulo " + std::to_string(exponent));
  const FiniteGroup qg = abelian(q_spec, limits);
  auto action = cyclic_action(power_map(qg, static_cast<long long>(r)), cyclic_order);
  std::string name = "SAN(" + abelian_name(q_spec) + ";C" + std::to_string(cyclic_order) +
                     ",r=" + std::to_string(r) + ")";
  return semidirect_product(qg, cyclic(cyclic_order), action, limits).renamed(std::move(name));
}

}  // namespace sanlib
