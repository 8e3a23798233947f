#pragma once

// Finite groups given by dense Cayley tables, their subgroups and the
// subnormality engine the rest of the library builds on.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sanlib {

using Element = std::uint32_t;

/// Size caps for the brute-force parts of the library.
struct Limits {
  std::size_t max_order = 2000;           // any table
  std::size_t max_subgroup_lattice = 512; // all_subgroups and friends
  std::size_t max_morphism_order = 256;   // automorphisms, isomorphism
  std::size_t max_dimension = 64;         // structure algebras
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A law of the group axioms that a table fails, with witness indices.
struct Violation {
  std::string law;  // "shape", "range", "identity", "inverse", "associativity"
  std::vector<Element> witness;
  std::string describe() const;
};

/// Checks a raw table (row-major, order*order entries) against the group
/// axioms with identity fixed at index 0.
std::optional<Violation> validate_table(std::size_t order,
                                        std::span<const Element> table);

/// Immutable group with identity at index 0. Copies share the table.
class FiniteGroup {
 public:
  /// Throws PreconditionError if the table is not a group.
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
              const Limits& limits = {});

  std::size_t order() const { return d_->order; }
  const std::string& name() const { return d_->name; }
  Element identity() const { return 0; }

  Element mul(Element a, Element b) const {
    return d_->table[static_cast<std::size_t>(a) * d_->order + b];
  }
  Element inv(Element a) const { return d_->inverse[a]; }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  /// x^-1 a x
  Element conj(Element a, Element x) const { return mul(mul(inv(x), a), x); }
  Element power(Element a, long long k) const;

  std::size_t element_order(Element a) const { return d_->orders[a]; }
  std::span<const Element> table() const { return d_->table; }
  std::span<const Element> inverse() const { return d_->inverse; }
  std::span<const std::size_t> element_orders() const { return d_->orders; }

  bool is_abelian() const { return d_->abelian; }
  std::vector<Element> all_elements() const;

  /// Same underlying table (identity of shared storage, not isomorphism).
  bool same_as(const FiniteGroup& o) const { return d_ == o.d_; }
  FiniteGroup renamed(std::string name) const;

 private:
  struct Data {
    std::string name;
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::size_t> orders;
    bool abelian = false;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

std::optional<Violation> validate(const FiniteGroup& g);

/// Dense membership set over the elements of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  bool test(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  std::size_t universe() const { return n_; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  bool operator==(const ElementSet&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

/// Subgroup in canonical form: strictly increasing element indices.
class Subgroup {
 public:
  /// Trusted constructor: `elements` must already be a sorted subgroup.
  Subgroup(FiniteGroup parent, std::vector<Element> elements);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element e) const { return mask_.test(e); }
  const ElementSet& mask() const { return mask_; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return elements_.size() == parent_.order(); }
  bool is_subset_of(const Subgroup& o) const;
  bool is_abelian() const;

  /// Small generating set, chosen greedily (largest element order first).
  std::vector<Element> generators() const;

  bool operator==(const Subgroup& o) const {
    return parent_.same_as(o.parent_) && elements_ == o.elements_;
  }
  /// Canonical order: by size, then lexicographically by elements.
  bool operator<(const Subgroup& o) const;

 private:
  FiniteGroup parent_;
  std::vector<Element> elements_;
  ElementSet mask_;
};

/// Group homomorphism stored as the image of every source element.
struct GroupMap {
  std::vector<Element> images;
  Element operator()(Element e) const { return images[e]; }
  bool operator==(const GroupMap&) const = default;
};

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     const GroupMap& map);
bool is_automorphism(const FiniteGroup& g, const GroupMap& map);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
GroupMap inverse_map(const GroupMap& bijection);
GroupMap identity_map(const FiniteGroup& g);
std::size_t map_order(const GroupMap& automorphism);

// Subgroup machinery --------------------------------------------------------

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
/// Smallest subgroup containing seed. Throws std::out_of_range on bad index.
Subgroup closure(const FiniteGroup& g, std::span<const Element> seed);
Subgroup cyclic_subgroup(const FiniteGroup& g, Element x);
/// Subgroup generated by h and the extra elements.
Subgroup join(const Subgroup& h, std::span<const Element> extra);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Regards `elements` (any order) as a subgroup; throws if not closed.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> elements);

/// x^-1 H x
Subgroup conjugate_subgroup(const Subgroup& h, Element x);
/// Requires h ⊆ k.
bool is_normal(const Subgroup& h, const Subgroup& k);
bool is_normal(const Subgroup& h);
/// Smallest normal subgroup of k containing h. Requires h ⊆ k.
Subgroup normal_closure(const Subgroup& h, const Subgroup& k);
/// Least n with a chain h = H_n ◁ ... ◁ H_0 = k, or nullopt if h is not
/// subnormal in k. Requires h ⊆ k.
std::optional<std::size_t> subnormal_defect(const Subgroup& h,
                                            const Subgroup& k);
std::optional<std::size_t> subnormal_defect(const Subgroup& h);
Subgroup centralizer(const FiniteGroup& g, std::span<const Element> m,
                     const Subgroup& within);
Subgroup centralizer(const Subgroup& m, const Subgroup& within);
Subgroup center(const FiniteGroup& g);
Subgroup normalizer(const Subgroup& h, const Subgroup& within);
/// [a, b] = <[x, y] : x in a, y in b>
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
/// Whether [x, y] lies in `modulo` for all x in a, y in b.
bool commutes_modulo(const Subgroup& a, const Subgroup& b,
                     const Subgroup& modulo);

/// Every subgroup exactly once, sorted canonically. Cyclic extension.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    const Limits& limits = {});
/// Subgroups of g contained in h.
std::vector<Subgroup> subgroups_within(const std::vector<Subgroup>& lattice,
                                       const Subgroup& h);

/// Sylow p-subgroup grown inside normalizers (trivial when p ∤ |G|).
Subgroup sylow_subgroup(const FiniteGroup& g, std::size_t p);
Subgroup sylow_subgroup(const Subgroup& h, std::size_t p);

// Constructions on tables ----------------------------------------------------

struct Quotient {
  FiniteGroup group;
  GroupMap projection;
  std::vector<Element> representatives;  // least element of each coset
};

/// Requires n normal in its parent.
Quotient quotient(const Subgroup& n);

/// A subgroup regarded as a group in its own right; element i of the result
/// is elements()[i] of the subgroup.
FiniteGroup as_group(const Subgroup& h, std::string name = {});

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           const Limits& limits = {});
/// action[x] is the automorphism of n by which the element x of h acts.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<GroupMap>& action,
                               const Limits& limits = {});

// Morphism search -------------------------------------------------------------

std::vector<GroupMap> automorphism_group(const FiniteGroup& g,
                                         const Limits& limits = {});
std::optional<GroupMap> find_isomorphism(const FiniteGroup& a,
                                         const FiniteGroup& b,
                                         const Limits& limits = {});
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                   const Limits& limits = {});
/// Automorphisms sending every element into its own cyclic subgroup.
std::vector<GroupMap> power_automorphism_maps(const FiniteGroup& g,
                                              const Limits& limits = {});

// Arithmetic helpers -----------------------------------------------------------

std::vector<std::size_t> prime_divisors(std::size_t n);
bool is_prime(std::size_t n);
/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, std::size_t p);
bool is_p_power(std::size_t n, std::size_t p);

}  // namespace sanlib
