#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "detail.hpp"
#include "sanlib/group.hpp"

namespace sanlib {

namespace {

using Invariant = std::array<std::size_t, 3>;

// (element order, centralizer size, number of square roots)
std::vector<Invariant> element_invariants(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Invariant> inv(n, Invariant{0, 0, 0});
  for (Element x = 0; x < n; ++x) {
    inv[x][0] = g.element_order(x);
    std::size_t c = 0;
    for (Element y = 0; y < n; ++y) c += g.mul(x, y) == g.mul(y, x);
    inv[x][1] = c;
    ++inv[g.mul(x, x)][2];
  }
  return inv;
}

class MorphismSearch {
 public:
  enum class Mode { first, all };

  MorphismSearch(const FiniteGroup& a, const FiniteGroup& b,
                 std::function<bool(Element, Element)> admissible)
      : a_(a), b_(b), admissible_(std::move(admissible)) {
    inv_a_ = element_invariants(a_);
    inv_b_ = a_.same_as(b_) ? inv_a_ : element_invariants(b_);
    std::map<Invariant, std::size_t> freq;
    for (const auto& v : inv_b_) ++freq[v];
    // Rare invariants first, then large orders: fewer branches near the root.
    std::vector<Element> order = a_.all_elements();
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
      const auto fx = freq[inv_a_[x]], fy = freq[inv_a_[y]];
      if (fx != fy) return fx < fy;
      return a_.element_order(x) > a_.element_order(y);
    });
    detail::Growing h(a_);
    for (Element x : order) {
      if (h.elements.size() == a_.order()) break;
      detail::extend(a_, h, x);
    }
    gens_ = h.gens;
    build_stages();
  }

  std::vector<GroupMap> run(Mode mode) {
    mode_ = mode;
    img_.assign(a_.order(), 0);
    used_.assign(b_.order(), 0);
    used_[0] = 1;
    found_.clear();
    search(0);
    return std::move(found_);
  }

 private:
  struct Stage {
    std::vector<std::array<Element, 3>> tree;    // (element, parent, gen)
    std::vector<std::array<Element, 2>> checks;  // (element, gen)
  };

  void build_stages() {
    const std::size_t n = a_.order();
    std::vector<char> reached(n, 0);
    std::vector<Element> members{0};
    reached[0] = 1;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      Stage st;
      const std::size_t old = members.size();
      for (std::size_t q = 0; q < members.size(); ++q) {
        for (std::size_t s = 0; s <= i; ++s) {
          const Element e = a_.mul(members[q], gens_[s]);
          if (reached[e]) continue;
          reached[e] = 1;
          members.push_back(e);
          st.tree.push_back({e, members[q], static_cast<Element>(s)});
        }
      }
      std::vector<std::vector<char>> tree_edge(n, std::vector<char>(i + 1, 0));
      for (const auto& t : st.tree) tree_edge[t[1]][t[2]] = 1;
      for (std::size_t q = 0; q < members.size(); ++q)
        for (std::size_t s = 0; s <= i; ++s) {
          if (q < old && s < i) continue;
          if (tree_edge[members[q]][s]) continue;
          st.checks.push_back({members[q], static_cast<Element>(s)});
        }
      stages_.push_back(std::move(st));
    }
  }

  void search(std::size_t i) {
    if (mode_ == Mode::first && !found_.empty()) return;
    if (i == stages_.size()) {
      found_.push_back(GroupMap{img_});
      return;
    }
    const Element gen = gens_[i];
    const auto& st = stages_[i];
    for (Element cand = 0; cand < b_.order(); ++cand) {
      if (used_[cand] || inv_b_[cand] != inv_a_[gen]) continue;
      if (admissible_ && !admissible_(gen, cand)) continue;
      std::size_t assigned = 0;
      bool ok = true;
      for (const auto& t : st.tree) {
        const Element im = b_.mul(img_[t[1]], t[2] == i ? cand : img_[gens_[t[2]]]);
        if (used_[im] || inv_b_[im] != inv_a_[t[0]]) {
          ok = false;
          break;
        }
        img_[t[0]] = im;
        used_[im] = 1;
        ++assigned;
      }
      if (ok) {
        for (const auto& c : st.checks) {
          if (img_[a_.mul(c[0], gens_[c[1]])] !=
              b_.mul(img_[c[0]], img_[gens_[c[1]]])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) search(i + 1);
      for (std::size_t k = 0; k < assigned; ++k) used_[img_[st.tree[k][0]]] = 0;
      if (mode_ == Mode::first && !found_.empty()) return;
    }
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::function<bool(Element, Element)> admissible_;
  std::vector<Invariant> inv_a_, inv_b_;
  std::vector<Element> gens_;
  std::vector<Stage> stages_;
  Mode mode_ = Mode::first;
  std::vector<Element> img_;
  std::vector<char> used_;
  std::vector<GroupMap> found_;
};

void require_morphism_cap(const FiniteGroup& g, const Limits& limits,
                          const char* what) {
  if (g.order() > limits.max_morphism_order)
    throw CapExceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(limits.max_morphism_order));
}

std::map<std::size_t, std::size_t> order_profile(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> m;
  for (std::size_t o : g.element_orders()) ++m[o];
  return m;
}

}  // namespace

std::vector<GroupMap> automorphism_group(const FiniteGroup& g,
                                         const Limits& limits) {
  require_morphism_cap(g, limits, "automorphism_group");
  auto maps = MorphismSearch(g, g, {}).run(MorphismSearch::Mode::all);
  std::sort(maps.begin(), maps.end(),
            [](const GroupMap& x, const GroupMap& y) { return x.images < y.images; });
  return maps;
}

std::optional<GroupMap> find_isomorphism(const FiniteGroup& a,
                                         const FiniteGroup& b,
                                         const Limits& limits) {
  require_morphism_cap(a, limits, "is_isomorphic");
  require_morphism_cap(b, limits, "is_isomorphic");
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian())
    return std::nullopt;
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  auto inv_a = element_invariants(a), inv_b = element_invariants(b);
  std::sort(inv_a.begin(), inv_a.end());
  std::sort(inv_b.begin(), inv_b.end());
  if (inv_a != inv_b) return std::nullopt;
  auto maps = MorphismSearch(a, b, {}).run(MorphismSearch::Mode::first);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                   const Limits& limits) {
  require_morphism_cap(a, limits, "is_isomorphic");
  require_morphism_cap(b, limits, "is_isomorphic");
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) return false;
  // Finite abelian groups are determined by how many elements have each order.
  if (a.is_abelian()) return order_profile(a) == order_profile(b);
  return find_isomorphism(a, b, limits).has_value();
}

std::vector<GroupMap> power_automorphism_maps(const FiniteGroup& g,
                                              const Limits& limits) {
  require_morphism_cap(g, limits, "power_automorphisms");
  const std::size_t n = g.order();
  std::vector<ElementSet> powers;
  powers.reserve(n);
  for (Element x = 0; x < n; ++x) powers.push_back(cyclic_subgroup(g, x).mask());
  auto maps = MorphismSearch(g, g, [&](Element x, Element y) {
                return powers[x].test(y);
              }).run(MorphismSearch::Mode::all);
  std::vector<GroupMap> out;
  for (auto& f : maps) {
    bool power = true;
    for (Element x = 0; x < n && power; ++x) power = powers[x].test(f(x));
    if (power) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const GroupMap& x, const GroupMap& y) { return x.images < y.images; });
  return out;
}

}  // namespace sanlib
