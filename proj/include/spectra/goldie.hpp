#pragma once

// Goldie theory for finite-dimensional algebras: essential submodules,
// singular submodules, the Goldie localizing subcategory, essential
// compressibility, regular elements and quotient-ring checks.
//
// For an artinian ring a right ideal is essential iff it contains
// soc(A_A) = {x : xJ = 0}.  So a module lies in the Goldie weakly closed
// subcategory (every element has essential annihilator) iff it is killed by
// the two-sided ideal soc(A_A), and Z(M) = {v : v soc(A_A) = 0}.

#include <random>
#include <string>
#include <vector>

#include "spectra/ideal.hpp"

namespace spectra {

template <class S>
class RightIdeal {
 public:
  RightIdeal(AlgebraPtr<S> parent, Subspace<S> space) : parent_(std::move(parent)), space_(std::move(space)) {
    if (space_.ambient_dim() != parent_->dim()) throw InvalidInput("right ideal: subspace has the wrong ambient dimension");
    if (!is_invariant(space_, parent_->right_ops())) throw InvalidInput("right ideal: subspace is not closed under right multiplication");
  }
  static RightIdeal generated_by(AlgebraPtr<S> a, const std::vector<RowVector<S>>& gens) {
    const Index n = a->dim();
    if (gens.empty()) return RightIdeal(std::move(a), Subspace<S>(n));
    auto sp = spin(rows_to_matrix(gens, n), a->right_ops(), n);
    return RightIdeal(std::move(a), std::move(sp));
  }

  const AlgebraPtr<S>& parent() const { return parent_; }
  const Subspace<S>& space() const { return space_; }
  Index dim() const { return space_.dim(); }

 private:
  AlgebraPtr<S> parent_;
  Subspace<S> space_;
};

/// Largest two-sided ideal inside L: {x : a x lies in L for every a}.
template <class S>
TwoSidedIdeal<S> bound_ideal(const RightIdeal<S>& l) {
  const auto& a = l.parent();
  const Index n = a->dim();
  if (l.dim() == n) return TwoSidedIdeal<S>::whole(a);
  const Matrix<S> c = right_kernel(l.space().basis()).transpose();  // v in L iff v c = 0
  const Index k = c.cols();
  Matrix<S> sys(n, k * (n + 1));
  sys.leftCols(k) = c;
  for (Index i = 0; i < n; ++i) sys.middleCols((i + 1) * k, k) = a->left_op(i) * c;
  return TwoSidedIdeal<S>(a, Subspace<S>::span(left_kernel(sys), n));
}

/// Membership in the weakly closed subcategory whose prelocalizing filter is
/// generated by `gens`.  The filter consists of the right ideals containing
/// the intersection I of the bound ideals, so M belongs iff M I = 0.
template <class S>
bool in_weakly_closed(const RightModule<S>& m, const std::vector<RightIdeal<S>>& gens) {
  auto i = TwoSidedIdeal<S>::whole(m.algebra());
  for (const auto& l : gens) i = ideal_intersection(i, bound_ideal(l));
  return module_times(m, i.space()).is_zero();
}

/// soc(A_A) = {x : x J = 0}, a two-sided ideal.
template <class S>
TwoSidedIdeal<S> regular_socle(const AlgebraPtr<S>& a) {
  return TwoSidedIdeal<S>(a, annihilated_by(RightModule<S>::regular(a), jacobson_radical_space(*a)));
}

/// L is essential in M iff soc(M) is contained in L (M of finite length).
template <class S>
bool is_essential(const RightModule<S>& m, const Subspace<S>& l) {
  if (!is_invariant(l, m.action())) throw PreconditionError("is_essential: subspace is not a submodule");
  return l.contains(socle_space(m));
}

template <class S>
bool is_essential(const RightIdeal<S>& l) {
  return is_essential(RightModule<S>::regular(l.parent()), l.space());
}

/// Z(M) = {v : v soc(A_A) = 0}.
template <class S>
Subspace<S> singular_space(const RightModule<S>& m) {
  return annihilated_by(m, regular_socle(m.algebra()).space());
}

template <class S>
SubmoduleResult<S> singular_subobject(const RightModule<S>& m) {
  return submodule(m, singular_space(m));
}

template <class S>
bool is_nonsingular(const RightModule<S>& m) {
  return singular_space(m).is_zero();
}

/// The intersection of the kernels of all maps M -> A_A is zero.
template <class S>
bool is_torsionless(const RightModule<S>& m) {
  if (m.dim() == 0) return true;
  auto basis = hom_basis(m, RightModule<S>::regular(m.algebra()));
  if (basis.empty()) return false;
  const Index n = m.algebra()->dim();
  Matrix<S> all = zeros(m.field(), m.dim(), n * static_cast<Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) all.middleCols(static_cast<Index>(i) * n, n) = basis[i];
  return left_kernel(all).rows() == 0;
}

/// Every essential submodule of M contains a copy of M.  For a module of
/// finite length a copy of M inside L forces L = M, so this holds iff M has
/// no proper essential submodule, i.e. iff M is semisimple.  Over a
/// semiprime algebra the torsionless and nonsingular route is used instead.
template <class S>
bool is_essentially_compressible(const RightModule<S>& m) {
  if (m.dim() == 0) throw PreconditionError("is_essentially_compressible: zero module");
  if (jacobson_radical_space(*m.algebra()).is_zero()) return is_torsionless(m) && is_nonsingular(m);
  return socle_space(m).is_whole();
}

/// Left and right multiplication by x are injective.
template <class S>
bool is_regular_element(const FiniteDimAlgebra<S>& a, const RowVector<S>& x) {
  return rank(a.left_matrix(x)) == a.dim() && rank(a.right_matrix(x)) == a.dim();
}

/// The lexicographically least regular element of an essential right ideal
/// of a semiprime algebra (coordinates with respect to the ideal's basis).
/// Over Q the search runs over small integer coordinates.
template <class S>
RowVector<S> regular_element_in(const RightIdeal<S>& l) {
  const auto& a = *l.parent();
  if (!jacobson_radical_space(a).is_zero()) throw PreconditionError("regular_element_in: algebra is not semiprime");
  if (!is_essential(l)) throw PreconditionError("regular_element_in: right ideal is not essential");
  const Index d = l.dim();
  const auto& f = a.field();
  const std::uint64_t q = is_finite_scalar_v<S> ? f.size() : 5;
  std::uint64_t total = 1;
  for (Index i = 0; i < d; ++i) {
    if (total > (std::uint64_t{1} << 24) / q) throw BudgetExceeded("regular_element_in: search space too large");
    total *= q;
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    RowVector<S> coords = zero_vector(f, d);
    std::uint64_t c = code;
    for (Index i = d - 1; i >= 0; --i) {
      const auto digit = static_cast<std::int64_t>(c % q);
      c /= q;
      if constexpr (is_finite_scalar_v<S>) coords(i) = f.element(static_cast<std::uint64_t>(digit));
      else coords(i) = f.from_int(digit <= 2 ? digit : 2 - digit);
    }
    RowVector<S> x = coords * l.space().basis();
    if (is_regular_element(a, x)) return x;
  }
  throw InvariantViolation("regular_element_in: essential right ideal without a regular element");
}

/// Two-sided inverse of x, if any.
template <class S>
std::optional<RowVector<S>> element_inverse(const FiniteDimAlgebra<S>& a, const RowVector<S>& x) {
  auto y = solve_left(a.left_matrix(x), a.unit());
  if (!y) return std::nullopt;
  if (a.mul(*y, x) != a.unit()) return std::nullopt;
  return y;
}

/// The ideals realizing W and X = W * W and the atoms each kills.
template <class S>
struct GoldieIdeals {
  TwoSidedIdeal<S> w;  ///< soc(A_A)
  TwoSidedIdeal<S> x;  ///< soc(A_A)^2
  std::vector<bool> in_x;  ///< per simple class: S X-ideal = 0
};

template <class S>
GoldieIdeals<S> goldie_ideals(const AlgebraPtr<S>& a, const std::vector<SimpleClass<S>>& simples) {
  GoldieIdeals<S> g{regular_socle(a), {}, {}};
  // W * W corresponds to the product of the ideal with itself.
  g.x = ideal_product(g.w, g.w);
  for (const auto& s : simples) g.in_x.push_back(s.annihilator.contains(g.x.space()));
  return g;
}

}  // namespace spectra
