#pragma once

// Two-sided ideals: generation, products, primeness and radicals.

#include <algorithm>
#include <string>
#include <vector>

#include "spectra/module.hpp"

namespace spectra {

template <class S>
class TwoSidedIdeal {
 public:
  TwoSidedIdeal() = default;
  /// Validates closure under left and right multiplication.
  TwoSidedIdeal(AlgebraPtr<S> parent, Subspace<S> space) : parent_(std::move(parent)), space_(std::move(space)) {
    if (space_.ambient_dim() != parent_->dim()) throw InvalidInput("ideal: subspace has the wrong ambient dimension");
    if (!is_invariant(space_, parent_->right_ops()) || !is_invariant(space_, parent_->left_ops()))
      throw InvalidInput("ideal: subspace is not closed under multiplication");
  }

  static TwoSidedIdeal zero(AlgebraPtr<S> a) {
    const Index n = a->dim();
    return TwoSidedIdeal(std::move(a), Subspace<S>(n));
  }
  static TwoSidedIdeal whole(AlgebraPtr<S> a) {
    auto s = Subspace<S>::whole(a->field(), a->dim());
    return TwoSidedIdeal(std::move(a), std::move(s));
  }

  const AlgebraPtr<S>& parent() const { return parent_; }
  const Subspace<S>& space() const { return space_; }
  Index dim() const { return space_.dim(); }
  bool is_zero() const { return space_.is_zero(); }
  bool is_whole() const { return space_.is_whole(); }
  bool contains(const TwoSidedIdeal& o) const { return space_.contains(o.space_); }
  std::string key() const { return space_.key(); }

  friend bool operator==(const TwoSidedIdeal& a, const TwoSidedIdeal& b) { return a.space_ == b.space_; }
  friend bool operator!=(const TwoSidedIdeal& a, const TwoSidedIdeal& b) { return !(a == b); }

 private:
  AlgebraPtr<S> parent_;
  Subspace<S> space_;
};

/// "0", "A" or "span{...}" in terms of the basis labels.
template <class S>
std::string describe_span(const FiniteDimAlgebra<S>& a, const Subspace<S>& v) {
  if (v.is_zero()) return "0";
  if (v.is_whole()) return "A";
  std::string out = "span{";
  for (Index i = 0; i < v.dim(); ++i) out += (i ? ", " : "") + a.element_str(v.vector(i));
  return out + "}";
}

template <class S>
std::string describe(const TwoSidedIdeal<S>& i) {
  return describe_span(*i.parent(), i.space());
}

namespace detail {

template <class S>
std::vector<Matrix<S>> both_sided_ops(const FiniteDimAlgebra<S>& a) {
  std::vector<Matrix<S>> ops = a.right_ops();
  ops.insert(ops.end(), a.left_ops().begin(), a.left_ops().end());
  return ops;
}

template <class S>
void same_parent(const TwoSidedIdeal<S>& i, const TwoSidedIdeal<S>& j) {
  if (i.parent() != j.parent() && !(*i.parent() == *j.parent()))
    throw PreconditionError("ideals belong to different algebras");
}

}  // namespace detail

/// Smallest two-sided ideal containing the generators (rows).
template <class S>
TwoSidedIdeal<S> ideal_from_generators(const AlgebraPtr<S>& a, const std::vector<RowVector<S>>& gens) {
  if (gens.empty()) return TwoSidedIdeal<S>::zero(a);
  return TwoSidedIdeal<S>(a, spin(rows_to_matrix(gens, a->dim()), detail::both_sided_ops(*a), a->dim()));
}

/// span{x y : x in I, y in J}.
template <class S>
TwoSidedIdeal<S> ideal_product(const TwoSidedIdeal<S>& i, const TwoSidedIdeal<S>& j) {
  detail::same_parent(i, j);
  const auto& a = *i.parent();
  std::vector<RowVector<S>> gens;
  for (Index x = 0; x < i.dim(); ++x)
    for (Index y = 0; y < j.dim(); ++y) gens.push_back(a.mul(i.space().vector(x), j.space().vector(y)));
  return TwoSidedIdeal<S>(i.parent(), Subspace<S>::span(gens, a.dim()));
}

template <class S>
TwoSidedIdeal<S> ideal_sum(const TwoSidedIdeal<S>& i, const TwoSidedIdeal<S>& j) {
  detail::same_parent(i, j);
  return TwoSidedIdeal<S>(i.parent(), i.space() + j.space());
}

template <class S>
TwoSidedIdeal<S> ideal_intersection(const TwoSidedIdeal<S>& i, const TwoSidedIdeal<S>& j) {
  detail::same_parent(i, j);
  return TwoSidedIdeal<S>(i.parent(), i.space().intersect(j.space()));
}

/// I^n (I^0 = the whole algebra).
template <class S>
TwoSidedIdeal<S> ideal_power(const TwoSidedIdeal<S>& i, int n) {
  TwoSidedIdeal<S> acc = TwoSidedIdeal<S>::whole(i.parent());
  for (int k = 0; k < n; ++k) acc = ideal_product(acc, i);
  return acc;
}

template <class S>
TwoSidedIdeal<S> jacobson_radical(const AlgebraPtr<S>& a) {
  return TwoSidedIdeal<S>(a, jacobson_radical_space(*a));
}

template <class S>
TwoSidedIdeal<S> annihilator(const RightModule<S>& m) {
  return TwoSidedIdeal<S>(m.algebra(), annihilator_space(m));
}

/// Prime in a finite-dimensional algebra means the quotient is simple:
/// semisimple with a single isomorphism class of simple modules.
template <class S>
bool is_prime(const TwoSidedIdeal<S>& i) {
  if (i.is_whole()) throw PreconditionError("is_prime: the whole algebra is not a proper ideal");
  auto q = share(quotient_algebra(*i.parent(), i.space()).algebra);
  if (!jacobson_radical_space(*q).is_zero()) return false;
  return simple_modules(q).size() == 1;
}

/// A prime ideal together with the index of the simple module it kills
/// (equivalently the block of A/J it removes).
template <class S>
struct PrimeWitness {
  TwoSidedIdeal<S> ideal;
  Index block_index = 0;
};

/// All primes of A (each is minimal and maximal), as annihilators of the
/// simple modules, in the order of `simple_modules`.
template <class S>
std::vector<PrimeWitness<S>> minimal_primes(const AlgebraPtr<S>& a, const std::vector<SimpleClass<S>>& simples) {
  std::vector<PrimeWitness<S>> out;
  for (const auto& s : simples) out.push_back({TwoSidedIdeal<S>(a, s.annihilator), s.block});
  return out;
}

template <class S>
std::vector<PrimeWitness<S>> minimal_primes(const AlgebraPtr<S>& a) {
  return minimal_primes(a, simple_modules(a));
}

/// Intersection of the primes containing I.
template <class S>
TwoSidedIdeal<S> prime_radical(const TwoSidedIdeal<S>& i, const std::vector<PrimeWitness<S>>& primes) {
  TwoSidedIdeal<S> acc = TwoSidedIdeal<S>::whole(i.parent());
  for (const auto& p : primes)
    if (p.ideal.contains(i)) acc = ideal_intersection(acc, p.ideal);
  return acc;
}

template <class S>
TwoSidedIdeal<S> prime_radical(const TwoSidedIdeal<S>& i) {
  return prime_radical(i, minimal_primes(i.parent()));
}

template <class S>
bool is_semiprime(const AlgebraPtr<S>& a) {
  return prime_radical(TwoSidedIdeal<S>::zero(a)).is_zero();
}

/// A nonzero module is a prime object iff its annihilator is prime.
template <class S>
bool is_prime_object(const RightModule<S>& m) {
  if (m.dim() == 0) throw PreconditionError("is_prime_object: zero module");
  return is_prime(annihilator(m));
}

}  // namespace spectra
