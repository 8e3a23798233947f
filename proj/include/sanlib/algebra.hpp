#pragma once

// Finite-dimensional Lie and Leibniz algebras over the rationals, given by
// structure constants, with exact subspace arithmetic.
//
// Leibniz algebras follow the left convention
//   [x, [y, z]] = [[x, y], z] + [y, [x, z]].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sanlib/group.hpp"

namespace sanlib {

using Scalar = boost::multiprecision::cpp_rational;
using Vector = std::vector<Scalar>;

/// "p/q" or "n", optionally signed. Throws std::invalid_argument.
Scalar parse_scalar(const std::string& text);
std::string format_scalar(const Scalar& s);

enum class AlgebraKind { lie, leibniz };
std::string to_string(AlgebraKind k);

struct BracketEntry {
  std::size_t i, j;
  Vector result;  // [e_i, e_j] in basis coordinates
};

class StructureAlgebra {
 public:
  /// Unlisted pairs bracket to zero. Throws CapExceeded above the dimension
  /// cap and PreconditionError on bad indices or lengths. Identities are not
  /// checked here; see check_identities.
  StructureAlgebra(std::string name, AlgebraKind kind, std::size_t dimension,
                   const std::vector<BracketEntry>& brackets,
                   std::vector<std::string> labels = {}, const Limits& limits = {});

  const std::string& name() const { return name_; }
  AlgebraKind kind() const { return kind_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// c_{ij}^k
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * dim_ + j) * dim_ + k];
  }
  Vector basis_vector(std::size_t i) const;

 private:
  std::string name_;
  AlgebraKind kind_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Scalar> tensor_;
};

/// Subspace of Q^n stored as its reduced row echelon basis, which is
/// canonical: equal subspaces have identical bases.
class Subspace {
 public:
  Subspace(std::size_t ambient, std::vector<Vector> spanning);
  static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

Subspace span_sum(const Subspace& a, const Subspace& b);

Vector bracket(const StructureAlgebra& a, const Vector& x, const Vector& y);
/// Span of [u_i, v_j] over the basis vectors.
Subspace subspace_bracket(const StructureAlgebra& a, const Subspace& u, const Subspace& v);

struct IdentityViolation {
  std::string law;  // "antisymmetry", "jacobi", "leibniz"
  std::size_t i, j, k;
  std::string describe() const;
};
std::optional<IdentityViolation> check_identities(const StructureAlgebra& a);

bool is_subalgebra(const StructureAlgebra& a, const Subspace& s);
/// Two-sided: [L, S] + [S, L] inside S.
bool is_ideal(const StructureAlgebra& a, const Subspace& s);
bool is_abelian(const StructureAlgebra& a, const Subspace& s);

/// Smallest ideal of the subalgebra k containing s (s inside k).
Subspace ideal_closure(const StructureAlgebra& a, const Subspace& s, const Subspace& k);
/// Least n with a chain s = S_n, ..., S_0 = L where each S_{i+1} is the ideal
/// closure of s in S_i; nullopt when the chain stops above s. Throws
/// PreconditionError if s is not a subalgebra.
std::optional<std::size_t> subideal_defect(const StructureAlgebra& a, const Subspace& s);

/// {x ∈ h : [x, m] = 0}; with two_sided also [m, x] = 0.
Subspace annihilator(const StructureAlgebra& a, const Subspace& h, const Subspace& m,
                     bool two_sided = false);

Subspace center(const StructureAlgebra& a);
/// L, [L,L], [[L,L],L] + [L,[L,L]], ... down to the stable term.
std::vector<Subspace> lower_central_series(const StructureAlgebra& a);
std::vector<Subspace> derived_series(const StructureAlgebra& a);
/// c with L^{c+1} = 0, or nullopt if not nilpotent (0 for the zero algebra).
std::optional<std::size_t> nilpotency_class(const StructureAlgebra& a);
bool is_solvable(const StructureAlgebra& a);

struct ScalarAction {
  bool scalar = false;
  std::vector<Scalar> sigma;              // per basis element, when scalar
  std::optional<std::size_t> witness;     // first basis element acting non-scalarly
  std::size_t annihilator_codimension = 0;  // dim L / Ann_L(A)
};
/// Whether every basis element acts on the abelian ideal by a scalar.
/// Throws PreconditionError if `ideal` is not an abelian ideal.
ScalarAction scalar_action_check(const StructureAlgebra& a, const Subspace& ideal);

struct TheoremBDecomposition {
  enum class Kind { abelian, decomposed, none };
  Kind kind = Kind::none;
  std::optional<Subspace> ideal;  // A
  Vector d;                       // with [d, a] = a on A
  std::size_t pivot = 0;          // index of the basis element b outside A
  Scalar beta;                    // [b, a] = beta a
  std::string reason;             // why there is no decomposition
};
/// L = A ⊕ Qd, A an abelian ideal of codimension one with [d, a] = a.
/// Requires Lie kind and solvable.
TheoremBDecomposition theorem_b_decompose(const StructureAlgebra& a);
/// Rebuilds the structure constants in the basis (A basis, d) and compares
/// them with the model [d, a] = a.
bool theorem_b_round_trip(const StructureAlgebra& a, const TheoremBDecomposition& dec);

enum class SubidealVerdict { not_applicable, confirmed, counterexample };
std::string to_string(SubidealVerdict v);
/// For an abelian subideal s: confirmed if s is an ideal, else counterexample.
SubidealVerdict abelian_subideal_ideal_check(const StructureAlgebra& a, const Subspace& s);

// Named algebras -------------------------------------------------------------

/// Basis v_1..v_n, c with [v_k, v_j] = δ_kj c, everything else zero.
StructureAlgebra example_2_3_build(std::size_t n, const Limits& limits = {});
Vector self_bracket(const StructureAlgebra& a, const Vector& x);

struct UniqueAbelianCertificate {
  bool identities = false;
  bool class_two = false;
  bool positive_definite = false;
  std::vector<Scalar> minors;  // leading principal minors of the Gram matrix
  bool ok() const { return identities && class_two && positive_definite; }
};
/// For an algebra produced by example_2_3_build (last basis element c).
UniqueAbelianCertificate unique_abelian_certificate(const StructureAlgebra& a);

/// x, y, z with [x, y] = z.
StructureAlgebra heisenberg();
/// e, f, h with [e, f] = h, [h, e] = 2e, [h, f] = -2f.
StructureAlgebra sl2();
/// a_1..a_m, b with [b, a_i] = factor * a_i.
StructureAlgebra scalar_extension_model(std::size_t m, const Scalar& factor);

}  // namespace sanlib
