#include "sanlib/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "detail.hpp"

namespace sanlib {

std::string Violation::describe() const {
  std::ostringstream os;
  os << law << " law violated";
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i)
      os << (i ? ", " : "") << witness[i];
    os << ")";
  }
  return os.str();
}

namespace {

// Submagma generators for Light's associativity test: a set whose closure
// under the table is everything.
std::vector<Element> magma_generators(std::size_t n,
                                      std::span<const Element> t) {
  std::vector<char> in(n, 0);
  std::vector<Element> members;
  std::vector<Element> gens;
  auto add = [&](Element e) {
    std::vector<Element> work{e};
    in[e] = 1;
    while (!work.empty()) {
      Element x = work.back();
      work.pop_back();
      members.push_back(x);
      for (std::size_t k = 0; k < members.size(); ++k) {
        Element y = members[k];
        for (Element z : {t[x * n + y], t[y * n + x]}) {
          if (!in[z]) {
            in[z] = 1;
            work.push_back(z);
          }
        }
      }
    }
  };
  for (Element e = 0; e < n; ++e) {
    if (!in[e]) {
      gens.push_back(e);
      add(e);
    }
  }
  return gens;
}

}  // namespace

std::optional<Violation> validate_table(std::size_t n,
                                        std::span<const Element> t) {
  if (n == 0 || t.size() != n * n)
    return Violation{"shape", {static_cast<Element>(t.size())}};
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t[k] >= n)
      return Violation{"range", {static_cast<Element>(k / n),
                                 static_cast<Element>(k % n)}};
  for (Element j = 0; j < n; ++j) {
    if (t[j] != j) return Violation{"identity", {0, j}};
    if (t[j * n] != j) return Violation{"identity", {j, 0}};
  }
  for (Element i = 0; i < n; ++i) {
    bool found = false;
    for (Element j = 0; j < n && !found; ++j) found = t[i * n + j] == 0;
    if (!found) return Violation{"inverse", {i}};
  }
  // Light's test: (xa)y = x(ay) for a in a generating set of the magma.
  for (Element a : magma_generators(n, t)) {
    for (Element x = 0; x < n; ++x) {
      Element xa = t[x * n + a];
      for (Element y = 0; y < n; ++y) {
        if (t[xa * n + y] != t[x * n + t[a * n + y]])
          return Violation{"associativity", {x, a, y}};
      }
    }
  }
  return std::nullopt;
}

FiniteGroup::FiniteGroup(std::string name, std::size_t order,
                         std::vector<Element> table, const Limits& limits) {
  if (order > limits.max_order)
    throw CapExceeded("group order " + std::to_string(order) +
                      " exceeds cap " + std::to_string(limits.max_order));
  if (auto v = validate_table(order, table))
    throw PreconditionError("not a group: " + v->describe());
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->order = order;
  d->table = std::move(table);
  d->inverse.assign(order, 0);
  d->orders.assign(order, 1);
  const auto& t = d->table;
  for (Element i = 0; i < order; ++i)
    for (Element j = 0; j < order; ++j)
      if (t[i * order + j] == 0) {
        d->inverse[i] = j;
        break;
      }
  for (Element i = 1; i < order; ++i) {
    std::size_t k = 1;
    for (Element x = i; x != 0; x = t[x * order + i]) ++k;
    d->orders[i] = k;
  }
  d->orders[0] = 1;
  d->abelian = true;
  for (Element i = 0; i < order && d->abelian; ++i)
    for (Element j = i + 1; j < order; ++j)
      if (t[i * order + j] != t[j * order + i]) {
        d->abelian = false;
        break;
      }
  d_ = std::move(d);
}

Element FiniteGroup::power(Element a, long long k) const {
  const long long n = static_cast<long long>(element_order(a));
  k %= n;
  if (k < 0) k += n;
  Element r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<Element> FiniteGroup::all_elements() const {
  std::vector<Element> v(order());
  std::iota(v.begin(), v.end(), Element{0});
  return v;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return FiniteGroup(std::move(d));
}

std::optional<Violation> validate(const FiniteGroup& g) {
  if (auto v = validate_table(g.order(), g.table())) return v;
  for (Element i = 0; i < g.order(); ++i) {
    if (g.mul(i, g.inv(i)) != 0) return Violation{"inverse", {i}};
    std::size_t k = 1;
    Element x = i;
    while (x != 0) {
      x = g.mul(x, i);
      ++k;
    }
    if (k != g.element_order(i)) return Violation{"order", {i}};
  }
  return std::nullopt;
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// Subgroup --------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)),
      elements_(std::move(elements)),
      mask_(parent_.order()) {
  for (Element e : elements_) mask_.set(e);
}

bool Subgroup::is_subset_of(const Subgroup& o) const {
  if (order() > o.order()) return false;
  const auto& a = mask_.words();
  const auto& b = o.mask_.words();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool Subgroup::is_abelian() const {
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (parent_.mul(gens[i], gens[j]) != parent_.mul(gens[j], gens[i]))
        return false;
  return true;
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> cand = elements_;
  std::stable_sort(cand.begin(), cand.end(), [&](Element a, Element b) {
    return parent_.element_order(a) > parent_.element_order(b);
  });
  detail::Growing h(parent_);
  for (Element x : cand) {
    if (h.elements.size() == elements_.size()) break;
    detail::extend(parent_, h, x);
  }
  return h.gens;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (order() != o.order()) return order() < o.order();
  return elements_ < o.elements_;
}

// Maps ------------------------------------------------------------------------

bool is_homomorphism(const FiniteGroup& s, const FiniteGroup& t,
                     const GroupMap& f) {
  if (f.images.size() != s.order()) return false;
  for (Element x : f.images)
    if (x >= t.order()) return false;
  for (Element i = 0; i < s.order(); ++i)
    for (Element j = 0; j < s.order(); ++j)
      if (f(s.mul(i, j)) != t.mul(f(i), f(j))) return false;
  return true;
}

bool is_automorphism(const FiniteGroup& g, const GroupMap& f) {
  if (f.images.size() != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (Element x : f.images) {
    if (x >= g.order() || hit[x]) return false;
    hit[x] = 1;
  }
  return is_homomorphism(g, g, f);
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  GroupMap r;
  r.images.reserve(inner.images.size());
  for (Element x : inner.images) r.images.push_back(outer(x));
  return r;
}

GroupMap inverse_map(const GroupMap& f) {
  GroupMap r{std::vector<Element>(f.images.size(), 0)};
  for (Element i = 0; i < f.images.size(); ++i) r.images[f.images[i]] = i;
  return r;
}

GroupMap identity_map(const FiniteGroup& g) { return GroupMap{g.all_elements()}; }

std::size_t map_order(const GroupMap& f) {
  GroupMap id{std::vector<Element>(f.images.size())};
  std::iota(id.images.begin(), id.images.end(), Element{0});
  GroupMap cur = f;
  std::size_t k = 1;
  while (cur != id) {
    cur = compose(f, cur);
    ++k;
  }
  return k;
}

// Basic subgroup operations -------------------------------------------------

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const FiniteGroup& g) {
  return Subgroup(g, g.all_elements());
}

Subgroup closure(const FiniteGroup& g, std::span<const Element> seed) {
  for (Element e : seed) detail::require_range(g, e);
  detail::Growing h(g);
  for (Element e : seed) detail::extend(g, h, e);
  return detail::finish(g, std::move(h));
}

Subgroup cyclic_subgroup(const FiniteGroup& g, Element x) {
  detail::require_range(g, x);
  std::vector<Element> v{0};
  for (Element y = x; y != 0; y = g.mul(y, x)) v.push_back(y);
  std::sort(v.begin(), v.end());
  return Subgroup(g, std::move(v));
}

Subgroup join(const Subgroup& h, std::span<const Element> extra) {
  const auto& g = h.parent();
  for (Element e : extra) detail::require_range(g, e);
  detail::Growing w(h);
  for (Element e : extra) detail::extend(g, w, e);
  return detail::finish(g, std::move(w));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a, b);
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  const auto gens = b.generators();
  return join(a, gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a, b);
  std::vector<Element> v;
  for (Element e : a.elements())
    if (b.contains(e)) v.push_back(e);
  return Subgroup(a.parent(), std::move(v));
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> elements) {
  for (Element e : elements) detail::require_range(g, e);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup s(g, std::move(elements));
  if (s.elements().empty() || s.elements().front() != 0)
    throw PreconditionError("element set does not contain the identity");
  for (Element x : s.elements())
    for (Element y : s.elements())
      if (!s.contains(g.mul(x, y)))
        throw PreconditionError("element set is not closed under the product");
  return s;
}

Subgroup conjugate_subgroup(const Subgroup& h, Element x) {
  const auto& g = h.parent();
  detail::require_range(g, x);
  std::vector<Element> v;
  v.reserve(h.order());
  for (Element e : h.elements()) v.push_back(g.conj(e, x));
  std::sort(v.begin(), v.end());
  return Subgroup(g, std::move(v));
}

bool is_normal(const Subgroup& h, const Subgroup& k) {
  detail::require_subset(h, k);
  const auto& g = h.parent();
  const auto hg = h.generators();
  for (Element x : k.generators())
    for (Element y : hg)
      if (!h.contains(g.conj(y, x))) return false;
  return true;
}

bool is_normal(const Subgroup& h) { return is_normal(h, whole_group(h.parent())); }

Subgroup normal_closure(const Subgroup& h, const Subgroup& k) {
  detail::require_subset(h, k);
  const auto& g = h.parent();
  const auto kg = k.generators();
  detail::Growing n(h);
  for (std::size_t i = 0; i < n.gens.size(); ++i) {
    for (Element x : kg) {
      Element c = g.conj(n.gens[i], x);
      if (!n.mask.test(c)) detail::extend(g, n, c);
    }
  }
  return detail::finish(g, std::move(n));
}

std::optional<std::size_t> subnormal_defect(const Subgroup& h,
                                            const Subgroup& k) {
  detail::require_subset(h, k);
  if (h == k) return 0;
  Subgroup cur = k;
  for (std::size_t i = 1;; ++i) {
    Subgroup next = normal_closure(h, cur);
    if (next == h) return i;
    if (next == cur) return std::nullopt;
    cur = std::move(next);
  }
}

std::optional<std::size_t> subnormal_defect(const Subgroup& h) {
  return subnormal_defect(h, whole_group(h.parent()));
}

Subgroup centralizer(const FiniteGroup& g, std::span<const Element> m,
                     const Subgroup& within) {
  if (!within.parent().same_as(g))
    throw PreconditionError("centralizer: subgroup of a different group");
  for (Element e : m) detail::require_range(g, e);
  const auto gens = closure(g, m).generators();
  std::vector<Element> v;
  for (Element x : within.elements()) {
    bool ok = true;
    for (Element y : gens)
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) v.push_back(x);
  }
  return Subgroup(g, std::move(v));
}

Subgroup centralizer(const Subgroup& m, const Subgroup& within) {
  detail::require_same_parent(m, within);
  return centralizer(m.parent(), m.generators(), within);
}

Subgroup center(const FiniteGroup& g) {
  const auto all = whole_group(g);
  return centralizer(all, all);
}

Subgroup normalizer(const Subgroup& h, const Subgroup& within) {
  detail::require_same_parent(h, within);
  const auto& g = h.parent();
  const auto hg = h.generators();
  std::vector<Element> v;
  for (Element x : within.elements()) {
    bool ok = true;
    for (Element y : hg)
      if (!h.contains(g.conj(y, x))) {
        ok = false;
        break;
      }
    if (ok) v.push_back(x);
  }
  return Subgroup(g, std::move(v));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a, b);
  const auto& g = a.parent();
  detail::Growing w(g);
  for (Element x : a.elements())
    for (Element y : b.elements()) detail::extend(g, w, g.commutator(x, y));
  return detail::finish(g, std::move(w));
}

bool commutes_modulo(const Subgroup& a, const Subgroup& b,
                     const Subgroup& modulo) {
  const auto& g = a.parent();
  for (Element x : a.elements())
    for (Element y : b.elements())
      if (!modulo.contains(g.commutator(x, y))) return false;
  return true;
}

// Arithmetic ------------------------------------------------------------------

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> r;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) r.push_back(n);
  return r;
}

std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_power(std::size_t n, std::size_t p) { return p_part(n, p) == n; }

}  // namespace sanlib
