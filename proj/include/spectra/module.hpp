#pragma once

// Right modules over a finite-dimensional algebra.  A module of dimension n
// stores one n x n matrix per algebra basis element; v * action(i) is v . b_i.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spectra/structure.hpp"

namespace spectra {

template <class S>
class RightModule {
 public:
  RightModule() = default;
  RightModule(AlgebraPtr<S> algebra, std::vector<Matrix<S>> action, Index dim, bool validate = true)
      : alg_(std::move(algebra)), action_(std::move(action)), dim_(dim) {
    if (!alg_) throw InvalidInput("module: missing algebra");
    if (static_cast<Index>(action_.size()) != alg_->dim()) throw InvalidInput("module: need one action matrix per basis element");
    for (auto& m : action_) {
      if (m.rows() != dim_ || m.cols() != dim_) throw InvalidInput("module: action matrix has wrong shape");
      for (Index i = 0; i < dim_; ++i)
        for (Index j = 0; j < dim_; ++j) m(i, j) = alg_->field().bind(m(i, j));
    }
    if (validate) check();
  }

  static RightModule zero(AlgebraPtr<S> algebra) {
    std::vector<Matrix<S>> act(static_cast<std::size_t>(algebra->dim()), Matrix<S>(0, 0));
    return RightModule(std::move(algebra), std::move(act), 0, false);
  }

  /// The regular module A_A.
  static RightModule regular(AlgebraPtr<S> algebra) {
    auto ops = algebra->right_ops();
    const Index n = algebra->dim();
    return RightModule(std::move(algebra), std::move(ops), n, false);
  }

  const AlgebraPtr<S>& algebra() const { return alg_; }
  const Field<S>& field() const { return alg_->field(); }
  Index dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  const std::vector<Matrix<S>>& action() const { return action_; }
  const Matrix<S>& act(Index i) const { return action_[static_cast<std::size_t>(i)]; }

  /// Matrix of v -> v . x for an algebra element x.
  Matrix<S> act_element(const RowVector<S>& x) const {
    Matrix<S> m = zeros(field(), dim_, dim_);
    for (Index i = 0; i < x.size(); ++i)
      if (!spectra::is_zero(x(i))) m += x(i) * action_[static_cast<std::size_t>(i)];
    return m;
  }

  /// Validates the module axioms: act(b_i) act(b_j) = act(b_i b_j), act(1) = I.
  void check() const {
    const auto& a = *alg_;
    if (act_element(a.unit()) != identity(field(), dim_)) throw InvalidInput("module: unit does not act as identity");
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < a.dim(); ++j) {
        Matrix<S> lhs = action_[static_cast<std::size_t>(i)] * action_[static_cast<std::size_t>(j)];
        Matrix<S> rhs = act_element(RowVector<S>(a.left_op(i).row(j)));
        if (lhs != rhs)
          throw InvalidInput("module: action does not respect the product " + a.labels()[static_cast<std::size_t>(i)] +
                             "*" + a.labels()[static_cast<std::size_t>(j)]);
      }
  }

 private:
  AlgebraPtr<S> alg_;
  std::vector<Matrix<S>> action_;
  Index dim_ = 0;
};

/// A module homomorphism f(v) = v * matrix.
template <class S>
struct ModuleMap {
  Index source_dim = 0;
  Index target_dim = 0;
  Matrix<S> matrix;
};

template <class S>
bool is_homomorphism(const RightModule<S>& m, const RightModule<S>& n, const Matrix<S>& f) {
  if (f.rows() != m.dim() || f.cols() != n.dim()) return false;
  for (Index k = 0; k < static_cast<Index>(m.action().size()); ++k)
    if (Matrix<S>(m.act(k) * f) != Matrix<S>(f * n.act(k))) return false;
  return true;
}

/// Restriction of the action to an invariant subspace, in the coordinates
/// of the subspace's echelon basis.
template <class S>
RightModule<S> restrict_to(const RightModule<S>& m, const Subspace<S>& u) {
  const Index k = u.dim();
  std::vector<Matrix<S>> act;
  for (const auto& r : m.action()) {
    Matrix<S> a = zeros(m.field(), k, k);
    for (Index i = 0; i < k; ++i) {
      RowVector<S> w = u.vector(i) * r;
      if (!u.contains(w)) throw PreconditionError("restrict_to: subspace is not a submodule");
      a.row(i) = u.coordinates(w);
    }
    act.push_back(std::move(a));
  }
  return RightModule<S>(m.algebra(), std::move(act), k, false);
}

template <class S>
struct SubmoduleResult {
  RightModule<S> module;
  Subspace<S> space;
  ModuleMap<S> inclusion;
};

/// Smallest submodule containing the seed rows.
template <class S>
SubmoduleResult<S> submodule(const RightModule<S>& m, const Matrix<S>& seed) {
  Subspace<S> u = seed.rows() ? spin(seed, m.action(), m.dim()) : Subspace<S>(m.dim());
  return {restrict_to(m, u), u, {u.dim(), m.dim(), u.basis()}};
}

template <class S>
SubmoduleResult<S> submodule(const RightModule<S>& m, const Subspace<S>& invariant) {
  return {restrict_to(m, invariant), invariant, {invariant.dim(), m.dim(), invariant.basis()}};
}

template <class S>
struct QuotientModuleResult {
  RightModule<S> module;
  ModuleMap<S> projection;
  std::vector<Index> section;  ///< basis of M/U = images of these unit vectors
};

template <class S>
QuotientModuleResult<S> quotient_module(const RightModule<S>& m, const Subspace<S>& u) {
  if (!is_invariant(u, m.action())) throw PreconditionError("quotient_module: subspace is not a submodule");
  auto keep = u.free_columns();
  Matrix<S> p = u.quotient_projection();
  const Index d = static_cast<Index>(keep.size());
  std::vector<Matrix<S>> act;
  for (const auto& r : m.action()) {
    Matrix<S> a(d, d);
    for (Index i = 0; i < d; ++i) a.row(i) = r.row(keep[static_cast<std::size_t>(i)]) * p;
    act.push_back(std::move(a));
  }
  return {RightModule<S>(m.algebra(), std::move(act), d, false), {m.dim(), d, p}, keep};
}

template <class S>
RightModule<S> direct_sum(const RightModule<S>& m, const RightModule<S>& n) {
  if (m.algebra() != n.algebra() && !(*m.algebra() == *n.algebra()))
    throw PreconditionError("direct_sum: modules over different algebras");
  const Index a = m.dim(), b = n.dim();
  std::vector<Matrix<S>> act;
  for (std::size_t k = 0; k < m.action().size(); ++k) {
    Matrix<S> x = zeros(m.field(), a + b, a + b);
    x.topLeftCorner(a, a) = m.action()[k];
    x.bottomRightCorner(b, b) = n.action()[k];
    act.push_back(std::move(x));
  }
  return RightModule<S>(m.algebra(), std::move(act), a + b, false);
}

/// k-dual Hom_k(M, k) as a right module over `target`, which must be the
/// opposite of M's algebra (action matrices are transposed).
template <class S>
RightModule<S> dual(const RightModule<S>& m, AlgebraPtr<S> target) {
  std::vector<Matrix<S>> act;
  for (const auto& r : m.action()) act.push_back(r.transpose());
  return RightModule<S>(std::move(target), std::move(act), m.dim(), false);
}

/// Annihilator {a : M . a = 0} as a subspace of the algebra.
template <class S>
Subspace<S> annihilator_space(const RightModule<S>& m) {
  const Index n = m.algebra()->dim(), d = m.dim();
  if (d == 0) return Subspace<S>::whole(m.field(), n);
  Matrix<S> sys(n, d * d);
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) sys(k, i * d + j) = m.act(k)(i, j);
  return Subspace<S>::span(left_kernel(sys), n);
}

/// {v in M : v . x = 0 for all x in the given subspace of the algebra}.
template <class S>
Subspace<S> annihilated_by(const RightModule<S>& m, const Subspace<S>& ideal) {
  const Index d = m.dim();
  if (d == 0) return Subspace<S>(0);
  if (ideal.is_zero()) return Subspace<S>::whole(m.field(), d);
  Matrix<S> sys(d, d * ideal.dim());
  for (Index i = 0; i < ideal.dim(); ++i) sys.middleCols(i * d, d) = m.act_element(ideal.vector(i));
  return Subspace<S>::span(left_kernel(sys), d);
}

/// M . I = span{v . x : v in M, x in I}.
template <class S>
Subspace<S> module_times(const RightModule<S>& m, const Subspace<S>& ideal) {
  std::vector<RowVector<S>> gens;
  for (Index i = 0; i < ideal.dim(); ++i) {
    Matrix<S> x = m.act_element(ideal.vector(i));
    for (Index r = 0; r < m.dim(); ++r) gens.push_back(x.row(r));
  }
  return Subspace<S>::span(gens, m.dim());
}

/// soc(M) = {v : v . J = 0}.
template <class S>
Subspace<S> socle_space(const RightModule<S>& m) {
  return annihilated_by(m, jacobson_radical_space(*m.algebra()));
}

template <class S>
RightModule<S> socle(const RightModule<S>& m) {
  return restrict_to(m, socle_space(m));
}

/// rad(M) = M . J.
template <class S>
Subspace<S> radical_space(const RightModule<S>& m) {
  return module_times(m, jacobson_radical_space(*m.algebra()));
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// Basis of Hom_A(M, N); each element is a dim(M) x dim(N) matrix.
template <class S>
std::vector<Matrix<S>> hom_basis(const RightModule<S>& m, const RightModule<S>& n) {
  const Index a = m.dim(), b = n.dim();
  if (a == 0 || b == 0) return {};
  const Index unknowns = a * b;
  const Index ops = static_cast<Index>(m.action().size());
  Matrix<S> sys = zeros(m.field(), unknowns, ops * unknowns);
  for (Index k = 0; k < ops; ++k) {
    const auto& r = m.act(k);
    const auto& rp = n.act(k);
    for (Index i = 0; i < a; ++i)
      for (Index j = 0; j < b; ++j) {
        const Index eq = k * unknowns + i * b + j;
        // (R X - X R')(i, j)
        for (Index l = 0; l < a; ++l)
          if (!is_zero(r(i, l))) sys(l * b + j, eq) += r(i, l);
        for (Index l = 0; l < b; ++l)
          if (!is_zero(rp(l, j))) sys(i * b + l, eq) -= rp(l, j);
      }
  }
  Matrix<S> ker = left_kernel(sys);
  std::vector<Matrix<S>> out;
  for (Index s = 0; s < ker.rows(); ++s) {
    Matrix<S> x(a, b);
    for (Index i = 0; i < a; ++i)
      for (Index j = 0; j < b; ++j) x(i, j) = m.field().bind(ker(s, i * b + j));
    out.push_back(std::move(x));
  }
  return out;
}

template <class S>
Index hom_dim(const RightModule<S>& m, const RightModule<S>& n) {
  return static_cast<Index>(hom_basis(m, n).size());
}

// ---------------------------------------------------------------------------
// MeatAxe

namespace detail {

template <class S>
Matrix<S> random_action_element(const RightModule<S>& m, std::mt19937_64& rng) {
  Matrix<S> x = zeros(m.field(), m.dim(), m.dim());
  for (const auto& r : m.action()) x += m.field().random(rng) * r;
  return x;
}

}  // namespace detail

/// Finds a proper nonzero submodule, or returns nullopt after certifying
/// irreducibility with Norton's criterion.  Throws CapabilityError when no
/// certificate is found within the attempt budget.
template <class S>
std::optional<Subspace<S>> find_proper_submodule(const RightModule<S>& m, std::uint64_t seed = 0x5eed) {
  const Index n = m.dim();
  if (n <= 1) return std::nullopt;
  std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(n));
  std::vector<Matrix<S>> transposed;
  for (const auto& r : m.action()) transposed.push_back(r.transpose());
  const int attempts = 200;
  const Index k = static_cast<Index>(m.action().size());
  for (int t = 0; t < attempts; ++t) {
    Matrix<S> x;
    if (t < k) {
      x = m.act(t);
    } else if (t < 2 * k && k > 1) {
      x = m.act(t - k) + m.act((t - k + 1) % k);
    } else {
      x = detail::random_action_element(m, rng);
    }
    Poly<S> chi = characteristic_polynomial(x);
    auto fz = factor(chi);
    for (const auto& pf : fz.factors) {
      if (!pf.irreducible) continue;
      Matrix<S> g = pf.factor.eval(x);
      Matrix<S> ker = left_kernel(g);
      if (ker.rows() == 0) continue;
      Subspace<S> u = spin(Matrix<S>(ker.topRows(1)), m.action(), n);
      if (u.dim() < n) return u;
      if (ker.rows() == pf.factor.degree()) {
        Matrix<S> kt = left_kernel(Matrix<S>(g.transpose()));
        Subspace<S> w = spin(Matrix<S>(kt.topRows(1)), transposed, n);
        if (w.dim() < n) return Subspace<S>::span(right_kernel(w.basis()), n);
        return std::nullopt;
      }
    }
  }
  throw CapabilityError("MeatAxe: could not decide irreducibility of a module of dimension " + std::to_string(n));
}

template <class S>
bool is_simple(const RightModule<S>& m) {
  return m.dim() > 0 && !find_proper_submodule(m).has_value();
}

/// Composition factors of M (as modules) from a recursive splitting.
template <class S>
std::vector<RightModule<S>> composition_series_factors(const RightModule<S>& m) {
  std::vector<RightModule<S>> out;
  std::vector<RightModule<S>> work{m};
  while (!work.empty()) {
    RightModule<S> x = std::move(work.back());
    work.pop_back();
    if (x.dim() == 0) continue;
    auto u = find_proper_submodule(x);
    if (!u) {
      out.push_back(std::move(x));
      continue;
    }
    work.push_back(quotient_module(x, *u).module);
    work.push_back(restrict_to(x, *u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simple modules

/// An isomorphism class of simple modules with a representative.
template <class S>
struct SimpleClass {
  RightModule<S> representative;
  Index block = 0;        ///< position in the canonical order (also the block of A/J)
  std::string label;      ///< "S1", "S2", ...
  Subspace<S> annihilator;
  Index endo_dim = 1;     ///< dim End(S)
};

namespace detail {

template <class S>
Index first_acting(const RightModule<S>& s) {
  for (Index i = 0; i < static_cast<Index>(s.action().size()); ++i)
    if (!is_zero_matrix(s.act(i))) return i;
  return static_cast<Index>(s.action().size());
}

}  // namespace detail

/// All simple modules up to isomorphism, as the distinct composition
/// factors of A_A.  Ordered by the first basis element acting nonzero,
/// ties broken by the annihilator's canonical key.
template <class S>
std::vector<SimpleClass<S>> simple_modules(const AlgebraPtr<S>& a) {
  std::vector<SimpleClass<S>> out;
  for (auto& f : composition_series_factors(RightModule<S>::regular(a))) {
    bool seen = false;
    for (const auto& c : out)
      if (c.representative.dim() == f.dim() && hom_dim(c.representative, f) > 0) {
        seen = true;
        break;
      }
    if (seen) continue;
    SimpleClass<S> c{f, 0, "", annihilator_space(f), hom_dim(f, f)};
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const SimpleClass<S>& x, const SimpleClass<S>& y) {
    auto fx = detail::first_acting(x.representative), fy = detail::first_acting(y.representative);
    if (fx != fy) return fx < fy;
    return x.annihilator.key() < y.annihilator.key();
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].block = static_cast<Index>(i);
    out[i].label = "S" + std::to_string(i + 1);
  }
  return out;
}

/// Index of the class of the simple module `s` within `classes`.
template <class S>
Index classify_simple(const std::vector<SimpleClass<S>>& classes, const RightModule<S>& s) {
  // Simple modules are isomorphic iff they have the same annihilator.
  Subspace<S> ann = annihilator_space(s);
  for (const auto& c : classes)
    if (c.representative.dim() == s.dim() && c.annihilator == ann) return c.block;
  throw InvariantViolation("classify_simple: module matches no simple class");
}

/// Multiplicities [M : S_i] indexed by class.
using Multiplicities = std::vector<Index>;

template <class S>
Multiplicities composition_factors(const RightModule<S>& m, const std::vector<SimpleClass<S>>& classes) {
  Multiplicities out(classes.size(), 0);
  for (const auto& f : composition_series_factors(m)) ++out[static_cast<std::size_t>(classify_simple(classes, f))];
  return out;
}

/// Composition multiplicities from the socle series (soc^1 M, soc^2 M, ...),
/// each semisimple layer split separately.
template <class S>
Multiplicities composition_factors_socle_series(const RightModule<S>& m, const std::vector<SimpleClass<S>>& classes) {
  Multiplicities out(classes.size(), 0);
  RightModule<S> cur = m;
  while (cur.dim() > 0) {
    Subspace<S> soc = socle_space(cur);
    if (soc.is_zero()) throw InvariantViolation("socle series: nonzero module with zero socle");
    auto layer = composition_factors(restrict_to(cur, soc), classes);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += layer[i];
    cur = quotient_module(cur, soc).module;
  }
  return out;
}

/// Composition multiplicities from the radical series M, MJ, MJ^2, ...
template <class S>
Multiplicities composition_factors_radical_series(const RightModule<S>& m, const std::vector<SimpleClass<S>>& classes) {
  Multiplicities out(classes.size(), 0);
  RightModule<S> cur = m;
  while (cur.dim() > 0) {
    Subspace<S> rad = radical_space(cur);
    if (rad.dim() == cur.dim()) throw InvariantViolation("radical series: M J = M for nonzero M");
    auto layer = composition_factors(quotient_module(cur, rad).module, classes);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += layer[i];
    cur = restrict_to(cur, rad);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

template <class S>
std::optional<bool> iso_by_random_search(const RightModule<S>& m, const std::vector<Matrix<S>>& basis, int tries) {
  std::mt19937_64 rng(0x150 ^ static_cast<std::uint64_t>(m.dim()));
  for (int t = 0; t < tries; ++t) {
    Matrix<S> x = zeros(m.field(), m.dim(), m.dim());
    for (const auto& b : basis) x += m.field().random(rng) * b;
    if (!is_zero(determinant(x))) return true;
  }
  return std::nullopt;
}

}  // namespace detail

/// Exact isomorphism test.  Over F_p it compares the idempotents of M and N
/// in End(M + N) modulo its radical block by block; over Q it searches for
/// an invertible intertwiner at random (Schwartz-Zippel).
template <class S>
bool is_isomorphic(const RightModule<S>& m, const RightModule<S>& n) {
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  auto h = hom_basis(m, n);
  if (h.empty()) return false;
  if (hom_dim(m, m) != static_cast<Index>(h.size()) || hom_dim(n, n) != static_cast<Index>(h.size()) ||
      hom_dim(n, m) != static_cast<Index>(h.size()))
    return false;
  if (detail::iso_by_random_search(m, h, 24)) return true;
  if constexpr (!is_finite_scalar_v<S>) {
    if (detail::iso_by_random_search(m, h, 200)) return true;
    return false;
  } else {
    const auto& f = m.field();
    RightModule<S> sum = direct_sum(m, n);
    auto ebasis = hom_basis(sum, sum);
    auto end = algebra_from_matrices(f, ebasis);
    const Index d = m.dim();
    Matrix<S> pm = zeros(f, 2 * d, 2 * d), pn = zeros(f, 2 * d, 2 * d);
    for (Index i = 0; i < d; ++i) {
      pm(i, i) = f.one();
      pn(d + i, d + i) = f.one();
    }
    // Coordinates of the two projections in the basis of End(M + N).
    Matrix<S> flat(static_cast<Index>(ebasis.size()), 4 * d * d);
    for (Index k = 0; k < flat.rows(); ++k)
      for (Index i = 0; i < 2 * d; ++i)
        for (Index j = 0; j < 2 * d; ++j) flat(k, i * 2 * d + j) = ebasis[static_cast<std::size_t>(k)](i, j);
    auto coords = [&](const Matrix<S>& x) {
      RowVector<S> v(4 * d * d);
      for (Index i = 0; i < 2 * d; ++i)
        for (Index j = 0; j < 2 * d; ++j) v(i * 2 * d + j) = x(i, j);
      return *solve_left(flat, v);
    };
    RowVector<S> em = coords(pm), en = coords(pn);
    Subspace<S> rad = matrix_algebra_radical(f, ebasis);
    auto q = quotient_algebra(end, rad);
    RowVector<S> qm = em * q.projection, qn = en * q.projection;
    for (const auto& b : central_blocks(q.algebra)) {
      auto span_dim = [&](const RowVector<S>& e) {
        RowVector<S> x = q.algebra.mul(e, b.idempotent);
        std::vector<RowVector<S>> gens;
        for (Index i = 0; i < q.algebra.dim(); ++i) gens.push_back(q.algebra.mul(x, q.algebra.basis_element(i)));
        return Subspace<S>::span(gens, q.algebra.dim()).dim();
      };
      if (span_dim(qm) != span_dim(qn)) return false;
    }
    return true;
  }
}

// ---------------------------------------------------------------------------
// Idempotents, projective covers, injective envelopes

/// Primitive idempotent e of A with eA / eJ isomorphic to the simple `t`.
template <class S>
RowVector<S> primitive_idempotent_for(const AlgebraPtr<S>& a, const RightModule<S>& t) {
  const auto& f = a->field();
  Subspace<S> j = jacobson_radical_space(*a);
  auto q = quotient_algebra(*a, j);
  auto qa = share(q.algebra);
  // A/J as a right A-module through the projection.
  std::vector<Matrix<S>> act;
  for (Index k = 0; k < a->dim(); ++k) act.push_back(q.algebra.right_matrix(RowVector<S>(a->basis_element(k) * q.projection)));
  RightModule<S> abar(a, std::move(act), q.algebra.dim(), false);
  auto hs = hom_basis(t, abar);
  if (hs.empty()) throw InvariantViolation("primitive_idempotent_for: simple module does not occur in A/J");
  Subspace<S> r = Subspace<S>::span(hs[0], q.algebra.dim());  // minimal right ideal of A/J
  // Left identity of r inside r: e = sum c_i r_i with e r_j = r_j.
  const Index k = r.dim(), d = q.algebra.dim();
  Matrix<S> sys = zeros(f, k, k * d);
  RowVector<S> rhs(k * d);
  for (Index jdx = 0; jdx < k; ++jdx) {
    for (Index i = 0; i < k; ++i) sys.block(i, jdx * d, 1, d) = q.algebra.mul(r.vector(i), r.vector(jdx));
    rhs.segment(jdx * d, d) = r.vector(jdx);
  }
  auto c = solve_left(sys, rhs);
  if (!c) throw InvariantViolation("primitive_idempotent_for: minimal right ideal has no left identity");
  RowVector<S> ebar = *c * r.basis();
  // Lift along the section and refine with x -> 3x^2 - 2x^3.
  RowVector<S> x = a->zero();
  for (Index i = 0; i < d; ++i) x(q.section[static_cast<std::size_t>(i)]) = ebar(i);
  for (int it = 0; it < 64; ++it) {
    RowVector<S> x2 = a->mul(x, x);
    if (x2 == x) return x;
    RowVector<S> x3 = a->mul(x2, x);
    x = f.from_int(3) * x2 - f.from_int(2) * x3;
  }
  throw InvariantViolation("primitive_idempotent_for: idempotent lifting did not converge");
}

/// Right ideal eA as a module, with its basis as rows in A.
template <class S>
SubmoduleResult<S> right_ideal_module(const AlgebraPtr<S>& a, const RowVector<S>& e) {
  Matrix<S> seed(1, a->dim());
  seed.row(0) = e;
  return submodule(RightModule<S>::regular(a), seed);
}

template <class S>
struct ProjectiveCover {
  RightModule<S> module;
  ModuleMap<S> cover;  ///< surjection P -> M
  std::vector<Index> summand_classes;
};

/// Projective cover of M: a direct sum of e_T A with one summand per simple
/// summand T of the top of M.
template <class S>
ProjectiveCover<S> projective_cover(const RightModule<S>& m, const std::vector<SimpleClass<S>>& classes,
                                    const std::vector<RowVector<S>>& idempotents) {
  const auto& a = m.algebra();
  Subspace<S> g = radical_space(m);
  std::vector<std::pair<Index, RowVector<S>>> gens;  // (class, generator in M)
  for (std::size_t c = 0; c < classes.size() && g.dim() < m.dim(); ++c) {
    Matrix<S> img = m.act_element(idempotents[c]);
    Subspace<S> me = Subspace<S>::span(img, m.dim());
    for (Index i = 0; i < me.dim() && g.dim() < m.dim(); ++i) {
      RowVector<S> u = me.vector(i);
      if (g.contains(u)) continue;
      gens.emplace_back(static_cast<Index>(c), u);
      Matrix<S> seed = stack(g.basis(), Matrix<S>(u));
      g = spin(seed, m.action(), m.dim());
    }
  }
  if (g.dim() != m.dim()) throw InvariantViolation("projective_cover: generators do not span the top");
  RightModule<S> p = RightModule<S>::zero(a);
  std::vector<Matrix<S>> rows;
  std::vector<Index> cls;
  bool first = true;
  for (const auto& [c, u] : gens) {
    auto ideal = right_ideal_module(a, idempotents[static_cast<std::size_t>(c)]);
    p = first ? ideal.module : direct_sum(p, ideal.module);
    first = false;
    Matrix<S> pi(ideal.space.dim(), m.dim());
    for (Index r = 0; r < ideal.space.dim(); ++r) pi.row(r) = u * m.act_element(ideal.space.vector(r));
    rows.push_back(pi);
    cls.push_back(c);
  }
  Matrix<S> pi(p.dim(), m.dim());
  Index off = 0;
  for (const auto& r : rows) {
    pi.middleRows(off, r.rows()) = r;
    off += r.rows();
  }
  return {p, {p.dim(), m.dim(), pi}, cls};
}

/// Data about the opposite algebra needed for injective envelopes.
template <class S>
struct OppositeData {
  AlgebraPtr<S> op;
  std::vector<SimpleClass<S>> simples;
  std::vector<RowVector<S>> idempotents;
};

template <class S>
OppositeData<S> opposite_data(const AlgebraPtr<S>& a) {
  OppositeData<S> d;
  d.op = share(opposite(*a));
  d.simples = simple_modules(d.op);
  for (const auto& s : d.simples) d.idempotents.push_back(primitive_idempotent_for(d.op, s.representative));
  return d;
}

template <class S>
struct InjectiveEnvelope {
  RightModule<S> module;
  ModuleMap<S> embedding;
};

/// E(M) = D(P(D M)) with P the projective cover over the opposite algebra.
template <class S>
InjectiveEnvelope<S> injective_envelope(const RightModule<S>& m, const OppositeData<S>& opd) {
  if (m.dim() == 0) return {m, {0, 0, Matrix<S>(0, 0)}};
  RightModule<S> dm = dual(m, opd.op);
  auto pc = projective_cover(dm, opd.simples, opd.idempotents);
  RightModule<S> e = dual(pc.module, m.algebra());
  Matrix<S> emb = pc.cover.matrix.transpose();
  return {e, {m.dim(), e.dim(), emb}};
}

template <class S>
InjectiveEnvelope<S> injective_envelope(const RightModule<S>& m) {
  return injective_envelope(m, opposite_data(m.algebra()));
}

// ---------------------------------------------------------------------------
// Submodule enumeration (finite fields)

/// All submodules of M over a finite field, as canonical subspaces sorted by
/// (dimension, key).  Throws BudgetExceeded beyond `max_count`.
template <class S>
std::vector<Subspace<S>> enumerate_submodules(const RightModule<S>& m, std::size_t max_count = 20000) {
  static_assert(is_finite_scalar_v<S>, "submodule enumeration needs a finite field");
  const auto& f = m.field();
  const Index n = m.dim();
  const std::uint64_t q = f.size();
  double points = 1;
  for (Index i = 0; i < n; ++i) points *= static_cast<double>(q);
  if (points > 1e6) throw BudgetExceeded("enumerate_submodules: field^dim exceeds 10^6");
  // Cyclic submodules from every vector (projective points suffice).
  std::map<std::string, Subspace<S>> cyclic;
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(n), 0);
  const std::uint64_t total = static_cast<std::uint64_t>(points);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    RowVector<S> v(n);
    Index lead = -1;
    for (Index i = 0; i < n; ++i) {
      v(i) = f.element(c % q);
      if (lead < 0 && c % q != 0) lead = i;
      c /= q;
    }
    if (!(v(lead) == f.one())) continue;  // normalized representatives only
    Subspace<S> s = spin(Matrix<S>(v), m.action(), n);
    cyclic.emplace(s.key(), s);
  }
  std::map<std::string, Subspace<S>> all;
  Subspace<S> zero(n);
  all.emplace(zero.key(), zero);
  std::vector<Subspace<S>> frontier{zero};
  while (!frontier.empty()) {
    std::vector<Subspace<S>> next;
    for (const auto& u : frontier)
      for (const auto& [k, c] : cyclic) {
        if (u.contains(c)) continue;
        Subspace<S> w = u + c;
        if (all.emplace(w.key(), w).second) {
          next.push_back(w);
          if (all.size() > max_count) throw BudgetExceeded("enumerate_submodules: more than " + std::to_string(max_count) + " submodules");
        }
      }
    frontier = std::move(next);
  }
  std::vector<Subspace<S>> out;
  for (auto& [k, s] : all) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const Subspace<S>& x, const Subspace<S>& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    return x.key() < y.key();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Object-level predicates

template <class S>
bool is_uniform(const RightModule<S>& m) {
  if (m.dim() == 0) return false;
  return is_simple(restrict_to(m, socle_space(m)));
}

/// H is monoform iff H is uniform with simple socle S and S embeds in no
/// H / L for nonzero L.  When S occurs once in H the second condition is
/// automatic (every nonzero L contains S); otherwise the submodule lattice
/// is enumerated, which needs a finite field.
template <class S>
bool is_monoform(const RightModule<S>& m) {
  if (m.dim() == 0) throw PreconditionError("is_monoform: zero module");
  if (is_simple(m)) return true;
  Subspace<S> soc = socle_space(m);
  RightModule<S> s = restrict_to(m, soc);
  if (!is_simple(s)) return false;
  // Does S occur again in H / soc(H)?  Each socle layer is semisimple, so
  // S occurs iff it maps into some layer.
  bool repeats = false;
  for (RightModule<S> cur = quotient_module(m, soc).module; cur.dim() > 0 && !repeats;) {
    Subspace<S> cs = socle_space(cur);
    repeats = hom_dim(s, restrict_to(cur, cs)) > 0;
    cur = quotient_module(cur, cs).module;
  }
  if (!repeats) return true;
  if constexpr (!is_finite_scalar_v<S>) {
    throw CapabilityError("is_monoform: undecidable at desk scale over Q (socle factor repeats; infinite submodule lattice)");
  } else {
    for (const auto& l : enumerate_submodules(m)) {
      if (l.is_zero()) continue;
      if (l.dim() == m.dim()) continue;
      if (hom_dim(s, quotient_module(m, l).module) > 0) return false;
    }
    return true;
  }
}

/// A finite-dimensional module is compressible iff it is simple.
template <class S>
bool is_compressible(const RightModule<S>& m) {
  if (m.dim() == 0) throw PreconditionError("is_compressible: zero module");
  return is_simple(m);
}

}  // namespace spectra
