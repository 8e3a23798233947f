#pragma once

// Deterministic group constructors and the test catalog.
//
// Element orderings:
//   cyclic(n)          index k is the generator to the k-th power
//   abelian(spec)      mixed radix, first factor most significant
//   dihedral(2n)       r^i s^j  -> i + n*j
//   quaternion(2^m)    x^i y^j  -> i + 2^(m-1)*j
//   products           (a, b)   -> a*|B| + b
//   permutation input  breadth-first discovery from the generators

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sanlib/group.hpp"

namespace sanlib {

struct AbelianSpec {
  std::vector<std::size_t> cyclic_orders;  // each >= 2
};

/// 0-based images; composition applies the left factor first.
using Permutation = std::vector<std::uint32_t>;

struct PermutationGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;  // element i of group is elements[i]
};

/// Throws PreconditionError on malformed permutations.
PermutationGroup from_permutations(std::string name, std::size_t degree,
                                   const std::vector<Permutation>& generators,
                                   const Limits& limits = {});

FiniteGroup cyclic(std::size_t n);
FiniteGroup elementary_abelian(std::size_t p, std::size_t k);
FiniteGroup abelian(const AbelianSpec& spec, const Limits& limits = {});
/// Dihedral group of the given order (order = 2n, n >= 2).
FiniteGroup dihedral(std::size_t order);
/// Generalized quaternion group of order 2^m, m >= 3.
FiniteGroup generalized_quaternion(std::size_t order);
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
/// SL(2,3) from its matrices over F_3.
FiniteGroup sl23();

/// <b> ⋊ <a> with |b| = q_power, |a| = m and a b a^-1 = b^r.
/// Requires gcd(r, q_power) = 1 and r of multiplicative order m.
FiniteGroup metacyclic(std::size_t q_power, std::size_t m, std::size_t r);

/// B<a> with a inverting the abelian group B. `square` is nullopt for
/// a^2 = 1, or the index in abelian(b) of an involution t with a^2 = t.
FiniteGroup generalized_dihedral(const AbelianSpec& b,
                                 std::optional<Element> square,
                                 const Limits& limits = {});

/// Q ⋊ C_n, Q abelian of q-power order, the generator of C_n acting as
/// x -> x^r for the least unit r of multiplicative order action_order
/// modulo exp(Q). cyclic_order defaults to action_order.
FiniteGroup san_family(const AbelianSpec& q_spec, std::size_t p,
                       std::size_t action_order, std::size_t cyclic_order = 0,
                       const Limits& limits = {});

std::size_t multiplicative_order(std::size_t r, std::size_t modulus);

/// Constructor families up to max_order plus direct products of pairs,
/// deduplicated up to isomorphism (orders <= max_morphism_order), sorted by
/// order with construction order breaking ties.
std::vector<FiniteGroup> catalog(std::size_t max_order, const Limits& limits = {});

}  // namespace sanlib
