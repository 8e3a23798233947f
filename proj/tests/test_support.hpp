#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sanlib/construct.hpp"
#include "sanlib/group.hpp"

namespace sanlib::testing {

// Every subgroup found by trying all subsets that contain the identity.
// Only sensible for orders up to about 24.
inline std::vector<std::vector<Element>> subset_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 24) throw std::invalid_argument("subset_subgroups: order too large");
  std::vector<std::vector<Element>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    const std::uint64_t full = (mask << 1) | 1u;
    std::vector<Element> elems;
    for (Element e = 0; e < n; ++e)
      if ((full >> e) & 1u) elems.push_back(e);
    bool closed = true;
    for (Element a : elems) {
      for (Element b : elems)
        if (!((full >> g.mul(a, b)) & 1u)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(elems);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline std::size_t count_of_order(const FiniteGroup& g, std::size_t k) {
  std::size_t c = 0;
  for (Element e = 0; e < g.order(); ++e)
    if (g.element_order(e) == k) ++c;
  return c;
}

inline Element first_of_order(const FiniteGroup& g, std::size_t k) {
  for (Element e = 0; e < g.order(); ++e)
    if (g.element_order(e) == k) return e;
  throw std::invalid_argument("no element of that order");
}

inline Subgroup gen(const FiniteGroup& g, std::vector<Element> seed) {
  return closure(g, seed);
}

// Element index of a permutation inside a permutation group.
inline Element index_of(const PermutationGroup& pg, const Permutation& p) {
  const auto it = std::find(pg.elements.begin(), pg.elements.end(), p);
  if (it == pg.elements.end()) throw std::invalid_argument("permutation not in group");
  return static_cast<Element>(it - pg.elements.begin());
}

// S3 acting on {0, 1, 2}, with its permutation images.
inline PermutationGroup s3_perms() {
  return from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}});
}

}  // namespace sanlib::testing
