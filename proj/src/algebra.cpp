#include "sanlib/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sanlib {

using boost::multiprecision::cpp_int;

Scalar parse_scalar(const std::string& text) {
  auto parse_int = [&](const std::string& s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size())
      throw std::invalid_argument("malformed rational \"" + text + "\"");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    return cpp_int(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Scalar(parse_int(text, true));
  const cpp_int num = parse_int(text.substr(0, slash), true);
  const cpp_int den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
  return Scalar(num, den);
}

std::string format_scalar(const Scalar& s) {
  const auto num = boost::multiprecision::numerator(s);
  const auto den = boost::multiprecision::denominator(s);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(AlgebraKind k) { return k == AlgebraKind::lie ? "lie" : "leibniz"; }

std::string to_string(SubidealVerdict v) {
  switch (v) {
    case SubidealVerdict::not_applicable: return "not-applicable";
    case SubidealVerdict::confirmed: return "confirmed";
    case SubidealVerdict::counterexample: return "counterexample";
  }
  return "?";
}

StructureAlgebra::StructureAlgebra(std::string name, AlgebraKind kind, std::size_t dimension,
                                   const std::vector<BracketEntry>& brackets,
                                   std::vector<std::string> labels, const Limits& limits)
    : name_(std::move(name)), kind_(kind), dim_(dimension), labels_(std::move(labels)) {
  if (dim_ == 0) throw PreconditionError("algebra dimension must be positive");
  if (dim_ > limits.max_dimension)
    throw CapExceeded("algebra dimension " + std::to_string(dim_) + " exceeds cap " +
                      std::to_string(limits.max_dimension));
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  if (labels_.size() != dim_) throw PreconditionError("label count differs from dimension");
  tensor_.assign(dim_ * dim_ * dim_, Scalar(0));
  for (const auto& b : brackets) {
    if (b.i >= dim_ || b.j >= dim_)
      throw PreconditionError("bracket index out of range: (" + std::to_string(b.i) + ", " +
                              std::to_string(b.j) + ")");
    if (b.result.size() != dim_)
      throw PreconditionError("bracket result has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) tensor_[(b.i * dim_ + b.j) * dim_ + k] = b.result[k];
  }
}

Vector StructureAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim_, Scalar(0));
  v.at(i) = 1;
  return v;
}

// Subspaces -----------------------------------------------------------------------

namespace {

std::size_t pivot_of(const Vector& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) return i;
  return row.size();
}

std::vector<Vector> rref(std::vector<Vector> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Scalar inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Scalar f = rows[i][col];
      for (std::size_t k = col; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// Basis of {t : M t = 0} for an m x cols matrix.
std::vector<Vector> nullspace(std::vector<Vector> m, std::size_t cols) {
  const auto r = rref(std::move(m), cols);
  std::vector<std::size_t> pivots;
  for (const auto& row : r) pivots.push_back(pivot_of(row));
  std::vector<Vector> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vector t(cols, Scalar(0));
    t[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) t[pivots[i]] = -r[i][free];
    out.push_back(std::move(t));
  }
  return out;
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

void require_length(const StructureAlgebra& a, const Vector& v) {
  if (v.size() != a.dimension())
    throw PreconditionError("vector length " + std::to_string(v.size()) +
                            " differs from algebra dimension " + std::to_string(a.dimension()));
}

void require_ambient(const StructureAlgebra& a, const Subspace& s) {
  if (s.ambient() != a.dimension())
    throw PreconditionError("subspace does not live in this algebra");
}

}  // namespace

Subspace::Subspace(std::size_t ambient, std::vector<Vector> spanning) : ambient_(ambient) {
  for (const auto& v : spanning)
    if (v.size() != ambient) throw PreconditionError("spanning vector has wrong length");
  basis_ = rref(std::move(spanning), ambient);
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient, Scalar(0));
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace(ambient, std::move(rows));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) return false;
  Vector w = v;
  for (const auto& row : basis_) {
    const std::size_t p = pivot_of(row);
    if (w[p] == 0) continue;
    const Scalar f = w[p];
    for (std::size_t k = p; k < ambient_; ++k) w[k] -= f * row[k];
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.basis().begin(), o.basis().end(),
                     [&](const Vector& v) { return contains(v); });
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient(), std::move(rows));
}

// Brackets ---------------------------------------------------------------------------

Vector bracket(const StructureAlgebra& a, const Vector& x, const Vector& y) {
  require_length(a, x);
  require_length(a, y);
  const std::size_t n = a.dimension();
  Vector out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (a.constant(i, j, k) != 0) out[k] += f * a.constant(i, j, k);
    }
  }
  return out;
}

Subspace subspace_bracket(const StructureAlgebra& a, const Subspace& u, const Subspace& v) {
  require_ambient(a, u);
  require_ambient(a, v);
  std::vector<Vector> rows;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) rows.push_back(bracket(a, x, y));
  return Subspace(a.dimension(), std::move(rows));
}

std::string IdentityViolation::describe() const {
  return law + " fails on basis triple (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
         ", " + std::to_string(k + 1) + ")";
}

std::optional<IdentityViolation> check_identities(const StructureAlgebra& a) {
  const std::size_t n = a.dimension();
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(a.basis_vector(i));
  auto br = [&](const Vector& x, const Vector& y) { return bracket(a, x, y); };
  if (a.kind() == AlgebraKind::lie) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (a.constant(i, j, k) != -a.constant(j, i, k))
            return IdentityViolation{"antisymmetry", i, j, k};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l) {
          Vector s = br(e[i], br(e[j], e[l]));
          const Vector t = br(e[j], br(e[l], e[i]));
          const Vector u = br(e[l], br(e[i], e[j]));
          for (std::size_t k = 0; k < n; ++k) s[k] += t[k] + u[k];
          if (!is_zero(s)) return IdentityViolation{"jacobi", i, j, l};
        }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vector s = br(e[i], br(e[j], e[l]));
        const Vector t = br(br(e[i], e[j]), e[l]);
        const Vector u = br(e[j], br(e[i], e[l]));
        for (std::size_t k = 0; k < n; ++k) s[k] -= t[k] + u[k];
        if (!is_zero(s)) return IdentityViolation{"leibniz", i, j, l};
      }
  return std::nullopt;
}

bool is_subalgebra(const StructureAlgebra& a, const Subspace& s) {
  return s.contains(subspace_bracket(a, s, s));
}

bool is_ideal(const StructureAlgebra& a, const Subspace& s) {
  const Subspace all = Subspace::whole(a.dimension());
  return s.contains(subspace_bracket(a, all, s)) && s.contains(subspace_bracket(a, s, all));
}

bool is_abelian(const StructureAlgebra& a, const Subspace& s) {
  return subspace_bracket(a, s, s).dimension() == 0;
}

Subspace ideal_closure(const StructureAlgebra& a, const Subspace& s, const Subspace& k) {
  Subspace t = s;
  for (;;) {
    Subspace next = span_sum(t, span_sum(subspace_bracket(a, k, t), subspace_bracket(a, t, k)));
    if (next == t) return t;
    t = std::move(next);
  }
}

std::optional<std::size_t> subideal_defect(const StructureAlgebra& a, const Subspace& s) {
  if (!is_subalgebra(a, s)) throw PreconditionError("subideal_defect: not a subalgebra");
  Subspace cur = Subspace::whole(a.dimension());
  std::size_t n = 0;
  while (cur != s) {
    Subspace next = ideal_closure(a, s, cur);
    ++n;
    if (next == cur) return std::nullopt;
    cur = std::move(next);
  }
  return n;
}

Subspace annihilator(const StructureAlgebra& a, const Subspace& h, const Subspace& m,
                     bool two_sided) {
  require_ambient(a, h);
  require_ambient(a, m);
  const std::size_t n = a.dimension();
  const std::size_t hd = h.dimension();
  std::vector<Vector> eqs;
  auto add_equations = [&](bool left) {
    for (const auto& y : m.basis()) {
      std::vector<Vector> images;
      for (const auto& x : h.basis()) images.push_back(left ? bracket(a, x, y) : bracket(a, y, x));
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(hd);
        for (std::size_t r = 0; r < hd; ++r) row[r] = images[r][k];
        eqs.push_back(std::move(row));
      }
    }
  };
  add_equations(true);
  if (two_sided) add_equations(false);
  std::vector<Vector> out;
  for (const auto& t : nullspace(std::move(eqs), hd)) {
    Vector v(n, Scalar(0));
    for (std::size_t r = 0; r < hd; ++r)
      for (std::size_t k = 0; k < n; ++k) v[k] += t[r] * h.basis()[r][k];
    out.push_back(std::move(v));
  }
  return Subspace(n, std::move(out));
}

Subspace center(const StructureAlgebra& a) {
  const Subspace all = Subspace::whole(a.dimension());
  return annihilator(a, all, all, true);
}

std::vector<Subspace> lower_central_series(const StructureAlgebra& a) {
  const Subspace all = Subspace::whole(a.dimension());
  std::vector<Subspace> s{all};
  for (;;) {
    Subspace next = span_sum(subspace_bracket(a, s.back(), all), subspace_bracket(a, all, s.back()));
    if (next == s.back()) return s;
    s.push_back(std::move(next));
  }
}

std::vector<Subspace> derived_series(const StructureAlgebra& a) {
  std::vector<Subspace> s{Subspace::whole(a.dimension())};
  for (;;) {
    Subspace next = subspace_bracket(a, s.back(), s.back());
    if (next == s.back()) return s;
    s.push_back(std::move(next));
  }
}

std::optional<std::size_t> nilpotency_class(const StructureAlgebra& a) {
  const auto s = lower_central_series(a);
  if (s.back().dimension() != 0) return std::nullopt;
  return s.size() - 1;
}

bool is_solvable(const StructureAlgebra& a) { return derived_series(a).back().dimension() == 0; }

// Scalar actions and the codimension-one decomposition -----------------------------

ScalarAction scalar_action_check(const StructureAlgebra& a, const Subspace& ideal) {
  require_ambient(a, ideal);
  if (!is_ideal(a, ideal) || !is_abelian(a, ideal))
    throw PreconditionError("scalar_action_check: subspace is not an abelian ideal");
  const std::size_t n = a.dimension();
  ScalarAction out;
  out.scalar = true;
  for (std::size_t x = 0; x < n && out.scalar; ++x) {
    const Vector ex = a.basis_vector(x);
    std::optional<Scalar> sigma;
    for (const auto& row : ideal.basis()) {
      const Vector w = bracket(a, ex, row);
      const Scalar s = w[pivot_of(row)];  // rows are normalized at their pivot
      if (sigma && *sigma != s) {
        sigma.reset();
        out.scalar = false;
        break;
      }
      sigma = s;
      if (w != scaled(row, s)) {
        out.scalar = false;
        break;
      }
    }
    if (!out.scalar) {
      out.witness = x;
      out.sigma.clear();
      break;
    }
    out.sigma.push_back(sigma.value_or(Scalar(0)));
  }
  out.annihilator_codimension =
      n - annihilator(a, Subspace::whole(n), ideal).dimension();
  return out;
}

TheoremBDecomposition theorem_b_decompose(const StructureAlgebra& a) {
  if (a.kind() != AlgebraKind::lie) throw PreconditionError("theorem_b_decompose: not a Lie algebra");
  if (!is_solvable(a)) throw PreconditionError("theorem_b_decompose: algebra is not solvable");
  const std::size_t n = a.dimension();
  const Subspace all = Subspace::whole(n);
  TheoremBDecomposition out;
  // Any such A contains [L, L] = [A + Qd, A + Qd] = [d, A] = A, so the
  // derived algebra is the only candidate.
  Subspace derived = subspace_bracket(a, all, all);
  if (derived.dimension() == 0) {
    out.kind = TheoremBDecomposition::Kind::abelian;
    return out;
  }
  if (derived.dimension() + 1 != n) {
    out.reason = "derived algebra has codimension " + std::to_string(n - derived.dimension());
    return out;
  }
  if (!is_abelian(a, derived)) {
    out.reason = "derived algebra is not abelian";
    return out;
  }
  const auto act = scalar_action_check(a, derived);
  if (!act.scalar) {
    out.reason = "basis element " + a.labels()[*act.witness] + " does not act by a scalar";
    return out;
  }
  std::size_t b = 0;
  while (derived.contains(a.basis_vector(b))) ++b;
  const Scalar beta = act.sigma[b];
  if (beta == 0) {
    out.reason = "the element outside A acts trivially";
    return out;
  }
  Vector d = scaled(a.basis_vector(b), 1 / beta);
  for (const auto& row : derived.basis())
    if (bracket(a, d, row) != row) {
      out.reason = "normalized element does not act as the identity";
      return out;
    }
  out.kind = TheoremBDecomposition::Kind::decomposed;
  out.ideal = std::move(derived);
  out.d = std::move(d);
  out.pivot = b;
  out.beta = beta;
  return out;
}

bool theorem_b_round_trip(const StructureAlgebra& a, const TheoremBDecomposition& dec) {
  if (dec.kind != TheoremBDecomposition::Kind::decomposed || !dec.ideal) return false;
  const auto& rows = dec.ideal->basis();
  std::vector<Vector> basis = rows;
  basis.push_back(dec.d);
  const std::size_t n = a.dimension();
  if (Subspace(n, basis).dimension() != n) return false;
  const Vector zero(n, Scalar(0));
  const std::size_t m = rows.size();
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= m; ++j) {
      Vector expected = zero;
      if (i == m && j < m) expected = rows[j];
      if (j == m && i < m) expected = scaled(rows[i], Scalar(-1));
      if (bracket(a, basis[i], basis[j]) != expected) return false;
    }
  return true;
}

SubidealVerdict abelian_subideal_ideal_check(const StructureAlgebra& a, const Subspace& s) {
  if (!is_subalgebra(a, s) || !is_abelian(a, s)) return SubidealVerdict::not_applicable;
  if (!subideal_defect(a, s)) return SubidealVerdict::not_applicable;
  return is_ideal(a, s) ? SubidealVerdict::confirmed : SubidealVerdict::counterexample;
}

// Named algebras ---------------------------------------------------------------------

StructureAlgebra example_2_3_build(std::size_t n, const Limits& limits) {
  if (n == 0) throw PreconditionError("example_2_3_build: n must be at least 1");
  const std::size_t dim = n + 1;
  std::vector<BracketEntry> br;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    Vector c(dim, Scalar(0));
    c[n] = 1;
    br.push_back({k, k, std::move(c)});
    labels.push_back("v" + std::to_string(k + 1));
  }
  labels.push_back("c");
  return StructureAlgebra("example-2.3(n=" + std::to_string(n) + ")", AlgebraKind::leibniz, dim, br,
                          std::move(labels), limits);
}

Vector self_bracket(const StructureAlgebra& a, const Vector& x) { return bracket(a, x, x); }

UniqueAbelianCertificate unique_abelian_certificate(const StructureAlgebra& a) {
  UniqueAbelianCertificate cert;
  const std::size_t dim = a.dimension();
  const std::size_t n = dim - 1;
  cert.identities = !check_identities(a).has_value();
  cert.class_two = nilpotency_class(a) == std::optional<std::size_t>(2);
  // Gram matrix of the form read off the c-coordinate of [v_k, v_j].
  std::vector<Vector> gram(n, Vector(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) gram[k][j] = a.constant(k, j, n);
  cert.positive_definite = n > 0;
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<Vector> m(size, Vector(size));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) m[r][c] = gram[r][c];
    Scalar det = 1;
    for (std::size_t col = 0; col < size; ++col) {
      std::size_t piv = col;
      while (piv < size && m[piv][col] == 0) ++piv;
      if (piv == size) {
        det = 0;
        break;
      }
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (std::size_t r = col + 1; r < size; ++r) {
        const Scalar f = m[r][col] / m[col][col];
        for (std::size_t c = col; c < size; ++c) m[r][c] -= f * m[col][c];
      }
    }
    cert.minors.push_back(det);
    if (det <= 0) cert.positive_definite = false;
  }
  return cert;
}

StructureAlgebra heisenberg() {
  return StructureAlgebra("h3", AlgebraKind::lie, 3,
                          {{0, 1, {0, 0, 1}}, {1, 0, {0, 0, -1}}}, {"x", "y", "z"});
}

StructureAlgebra sl2() {
  return StructureAlgebra("sl2", AlgebraKind::lie, 3,
                          {{0, 1, {0, 0, 1}},
                           {1, 0, {0, 0, -1}},
                           {2, 0, {2, 0, 0}},
                           {0, 2, {-2, 0, 0}},
                           {2, 1, {0, -2, 0}},
                           {1, 2, {0, 2, 0}}},
                          {"e", "f", "h"});
}

StructureAlgebra scalar_extension_model(std::size_t m, const Scalar& factor) {
  const std::size_t dim = m + 1;
  std::vector<BracketEntry> br;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    Vector plus(dim, Scalar(0)), minus(dim, Scalar(0));
    plus[i] = factor;
    minus[i] = -factor;
    br.push_back({m, i, std::move(plus)});
    br.push_back({i, m, std::move(minus)});
    labels.push_back("a" + std::to_string(i + 1));
  }
  labels.push_back("b");
  return StructureAlgebra("scalar-extension(" + std::to_string(m) + ")", AlgebraKind::lie, dim, br,
                          std::move(labels));
}

}  // namespace sanlib
