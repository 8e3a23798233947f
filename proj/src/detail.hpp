#pragma once

#include "sanlib/group.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace sanlib::detail {

/// Working form of a subgroup while it is being grown.
struct Growing {
  std::vector<Element> elements;  // unsorted
  ElementSet mask;
  std::vector<Element> gens;

  explicit Growing(const FiniteGroup& g) : elements{0}, mask(g.order()) {
    mask.set(0);
  }
  Growing(const Subgroup& h)
      : elements(h.elements()), mask(h.mask()), gens(h.generators()) {}
};

/// Dimino step: replaces `h` by <h, x>.
inline void extend(const FiniteGroup& g, Growing& h, Element x) {
  if (h.mask.test(x)) return;
  const std::vector<Element> base = h.elements;
  h.gens.push_back(x);
  std::vector<Element> reps;
  auto add_coset = [&](Element r) {
    for (Element b : base) {
      Element e = g.mul(b, r);
      h.mask.set(e);
      h.elements.push_back(e);
    }
    reps.push_back(r);
  };
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Element s : h.gens) {
      Element e = g.mul(reps[i], s);
      if (!h.mask.test(e)) add_coset(e);
    }
  }
}

inline Subgroup finish(const FiniteGroup& g, Growing&& h) {
  std::vector<Element> v = std::move(h.elements);
  std::sort(v.begin(), v.end());
  return Subgroup(g, std::move(v));
}

inline void require_range(const FiniteGroup& g, Element e) {
  if (e >= g.order())
    throw std::out_of_range("element index " + std::to_string(e) +
                            " out of range for group of order " +
                            std::to_string(g.order()));
}

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_as(b.parent()))
    throw PreconditionError("subgroups belong to different groups");
}

inline void require_subset(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  if (!h.is_subset_of(k))
    throw PreconditionError("subgroup of order " + std::to_string(h.order()) +
                            " is not contained in subgroup of order " +
                            std::to_string(k.order()));
}

}  // namespace sanlib::detail
