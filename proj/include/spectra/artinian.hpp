#pragma once

// The spectrum backend of a finite-dimensional algebra.  Atoms are the
// isomorphism classes of simple modules, molecules are the prime ideals.

#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "spectra/backend.hpp"
#include "spectra/goldie.hpp"
#include "spectra/ideal.hpp"

namespace spectra {

/// Primes of A as preimages of the ideals that kill one block of A/J.
template <class S>
std::vector<PrimeWitness<S>> block_primes(const AlgebraPtr<S>& a) {
  const Subspace<S> j = jacobson_radical_space(*a);
  auto q = quotient_algebra(*a, j);
  auto blocks = central_blocks(q.algebra);
  std::vector<PrimeWitness<S>> out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (!blocks[k].resolved)
      throw CapabilityError("block_primes: central idempotent of a block could not be split over " + a->field().name());
    // Preimage of the sum of the other blocks: its image in A/J is
    // (1 - e_k)(A/J); add J back.
    std::vector<RowVector<S>> gens;
    for (std::size_t l = 0; l < blocks.size(); ++l) {
      if (l == k) continue;
      const auto& sp = blocks[l].space;
      for (Index i = 0; i < sp.dim(); ++i) {
        RowVector<S> lift = zero_vector(a->field(), a->dim());
        const RowVector<S> v = sp.vector(i);
        for (Index c = 0; c < v.size(); ++c) lift(q.section[static_cast<std::size_t>(c)]) = v(c);
        gens.push_back(lift);
      }
    }
    Subspace<S> p = Subspace<S>::span(gens, a->dim()) + j;
    out.push_back({TwoSidedIdeal<S>(a, p), static_cast<Index>(k)});
  }
  return out;
}

template <class S>
class ArtinianBackend final : public SpectrumBackend {
 public:
  explicit ArtinianBackend(AlgebraPtr<S> a, std::string name = "A")
      : a_(std::move(a)), name_(std::move(name)), simples_(simple_modules(a_)), primes_(block_primes(a_)) {
    for (const auto& p : primes_)
      if (!is_prime(p.ideal)) throw InvariantViolation("artinian backend: block ideal is not prime");
    const std::size_t n = simples_.size();
    leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (auto b : asupp_indices(simples_[i].representative)) leq_[i][static_cast<std::size_t>(b)] = true;
  }

  const AlgebraPtr<S>& algebra() const { return a_; }
  const std::vector<SimpleClass<S>>& simples() const { return simples_; }
  const std::vector<PrimeWitness<S>>& primes() const { return primes_; }

  Atom atom(std::size_t i) const { return {simples_.at(i).label}; }
  Molecule molecule(std::size_t i) const { return {"P" + std::to_string(i + 1)}; }

  std::size_t atom_index(const Atom& x) const {
    for (std::size_t i = 0; i < simples_.size(); ++i)
      if (simples_[i].label == x.label) return i;
    throw PreconditionError("unknown atom " + x.label);
  }
  std::size_t molecule_index(const Molecule& x) const {
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (molecule(i) == x) return i;
    throw PreconditionError("unknown molecule " + x.label);
  }
  const TwoSidedIdeal<S>& prime_of(const Molecule& x) const { return primes_[molecule_index(x)].ideal; }

  /// The molecule whose prime equals `p`.
  Molecule molecule_of(const Subspace<S>& p) const {
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (primes_[i].ideal.space() == p) return molecule(i);
    throw InvariantViolation("ideal is not among the primes");
  }

  Atom classify(const RightModule<S>& simple) const {
    return atom(static_cast<std::size_t>(classify_simple(simples_, simple)));
  }

  // Module-level invariants.

  std::vector<Atom> ass_atoms(const RightModule<S>& m) const {
    return atoms_from(composition_factors(restrict_to(m, socle_space(m)), simples_));
  }
  std::vector<Atom> asupp(const RightModule<S>& m) const { return atoms_from(composition_factors(m, simples_)); }

  /// {P : Ann(ann_M(P)) = P}, where ann_M(P) = {v : vP = 0}.
  std::vector<Molecule> mass(const RightModule<S>& m) const {
    std::vector<Molecule> out;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      const Subspace<S> sub = annihilated_by(m, primes_[i].ideal.space());
      if (sub.is_zero()) continue;
      if (annihilator_space(restrict_to(m, sub)) == primes_[i].ideal.space()) out.push_back(molecule(i));
    }
    return out;
  }
  /// V(Ann M).
  std::vector<Molecule> msupp(const RightModule<S>& m) const {
    std::vector<Molecule> out;
    if (m.dim() == 0) return out;
    const Subspace<S> ann = annihilator_space(m);
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (primes_[i].ideal.space().contains(ann)) out.push_back(molecule(i));
    return out;
  }

  const OppositeData<S>& opposite() const {
    std::call_once(*opd_once_, [this] { opd_ = std::make_shared<OppositeData<S>>(opposite_data(a_)); });
    return *opd_;
  }
  InjectiveEnvelope<S> envelope(const RightModule<S>& m) const { return injective_envelope(m, opposite()); }

  /// The regular module of A/P pulled back to A.
  RightModule<S> quotient_regular_module(const Molecule& r) const {
    auto q = quotient_algebra(*a_, prime_of(r).space());
    auto qa = share(q.algebra);
    return pull_back(RightModule<S>::regular(qa), q.projection);
  }

  // SpectrumBackend.

  std::string name() const override { return name_; }
  std::string kind() const override { return "artinian"; }
  bool complete() const override { return true; }

  std::vector<Atom> atoms() const override {
    std::vector<Atom> out;
    for (std::size_t i = 0; i < simples_.size(); ++i) out.push_back(atom(i));
    return out;
  }
  std::vector<Molecule> molecules() const override {
    std::vector<Molecule> out;
    for (std::size_t i = 0; i < primes_.size(); ++i) out.push_back(molecule(i));
    return out;
  }

  /// a <= b iff b lies in ASupp of a monoform representative of a; the
  /// simple module itself is one, so the order is discrete.
  bool atom_leq(const Atom& x, const Atom& y) const override { return leq_[atom_index(x)][atom_index(y)]; }
  bool molecule_leq(const Molecule& x, const Molecule& y) const override {
    return prime_of(y).contains(prime_of(x));
  }

  /// A simple module is prime and monoform, so phi(S) is its annihilator.
  Molecule phi(const Atom& x) const override {
    return molecule_of(annihilator_space(simples_[atom_index(x)].representative));
  }

  /// The simple module of the simple algebra A/P, pulled back to A.
  Atom psi(const Molecule& r) const override {
    auto q = quotient_algebra(*a_, prime_of(r).space());
    auto qa = share(q.algebra);
    auto qs = simple_modules(qa);
    if (qs.size() != 1) throw InvariantViolation("psi: quotient by a prime has " + std::to_string(qs.size()) + " simple modules");
    return classify(pull_back(qs.front().representative, q.projection));
  }

  PropertyFlags atomic_flags() const override {
    PropertyFlags f;
    f.reduced = jacobson_radical_space(*a_).is_zero();
    f.irreducible = minimal_atoms(*this).size() == 1;
    f.integral = *f.reduced && *f.irreducible;
    return f;
  }
  PropertyFlags molecular_flags() const override {
    PropertyFlags f;
    f.reduced = prime_radical_space().is_zero();
    f.irreducible = minimal_molecules(*this).size() == 1;
    f.integral = a_->dim() > 0 && is_prime(TwoSidedIdeal<S>::zero(a_));
    return f;
  }

  bool is_artinian() const override { return true; }
  bool is_semiprime() const override { return prime_radical_space().is_zero(); }

  ReducedPartDescriptor reduced_part() const override {
    const Subspace<S> j = jacobson_radical_space(*a_);
    const Subspace<S> r = prime_radical_space();
    ReducedPartDescriptor d;
    d.atomic_ideal = describe_span(*a_, j);
    d.molecular_ideal = describe_span(*a_, r);
    if (!(j == r))
      throw InvariantViolation("reduced part: Jacobson radical " + d.atomic_ideal + " differs from prime radical " +
                               d.molecular_ideal);
    d.is_whole_category = j.is_zero();
    d.category = d.is_whole_category ? "Mod " + name_ : "Mod(" + name_ + "/" + d.atomic_ideal + ")";
    return d;
  }

  ArtinianizationDescriptor artinianization() const override {
    return {true, "Mod " + name_, minimal_atoms(*this)};
  }

  GoldieDescriptor goldie() const override {
    auto g = goldie_ideals(a_, simples_);
    GoldieDescriptor d;
    d.w_ideal = describe(g.w);
    d.x_ideal = describe(g.x);
    for (std::size_t i = 0; i < simples_.size(); ++i) (g.in_x[i] ? d.x_support : d.surviving).push_back(atom(i));
    d.quotient_is_zero = d.surviving.empty();
    d.quotient_is_whole = d.x_support.empty();
    return d;
  }

  QuotientRingDescriptor classical_quotient_ring() const override {
    if (!is_semiprime()) throw HypothesisError("no semisimple classical quotient ring in scope: " + name_ + " is not semiprime");
    return {QuotientRingDescriptor::Kind::Self, name_, "identity"};
  }

  QuotientRingCheck check_quotient_ring(int samples, std::uint64_t seed) const override {
    classical_quotient_ring();
    std::mt19937_64 rng(seed);
    const auto& f = a_->field();
    auto random_element = [&] {
      RowVector<S> x = zero_vector(f, a_->dim());
      for (Index i = 0; i < x.size(); ++i) x(i) = f.random(rng);
      return x;
    };
    QuotientRingCheck c;
    for (int k = 0; k < samples; ++k) {
      ++c.samples;
      const RowVector<S> x = random_element();
      const RowVector<S> s = random_element();
      // The embedding is the identity, hence injective.
      if (!is_regular_element(*a_, s)) continue;
      ++c.regular_samples;
      auto inv = element_inverse(*a_, s);
      if (!inv) {
        c.regular_become_invertible = false;
        continue;
      }
      // q = x s^{-1} is a fraction with numerator x and regular denominator s.
      const RowVector<S> q = a_->mul(x, *inv);
      if (a_->mul(q, s) != x) c.fractions_cover = false;
    }
    return c;
  }

  std::vector<Assertion> extra_assertions() const override {
    std::vector<Assertion> out;
    Assertion corr{"ass-supp-correspondence",
                   "phi(AAss M) = MAss M and phi(ASupp M) is contained in MSupp M",
                   Assertion::Status::Pass,
                   ""};
    std::vector<std::pair<std::string, RightModule<S>>> mods;
    mods.emplace_back("A_A", RightModule<S>::regular(a_));
    for (const auto& s : simples_) {
      mods.emplace_back(s.label, s.representative);
      mods.emplace_back("E(" + s.label + ")", envelope(s.representative).module);
    }
    int checked = 0;
    for (const auto& [label, m] : mods) {
      ++checked;
      std::vector<Molecule> img;
      for (const auto& x : ass_atoms(m)) img.push_back(phi(x));
      if (!same_set(img, mass(m))) {
        corr.status = Assertion::Status::Fail;
        corr.detail += "phi(AAss) != MAss on " + label + "; ";
      }
      const auto ms = msupp(m);
      for (const auto& x : asupp(m))
        if (!contains(ms, phi(x))) {
          corr.status = Assertion::Status::Fail;
          corr.detail += "phi(" + x.label + ") not in MSupp " + label + "; ";
        }
    }
    if (corr.status == Assertion::Status::Pass) corr.detail = std::to_string(checked) + " modules";
    out.push_back(corr);

    Assertion env{"envelope-mass", "MAss E(S) = {phi(S)} for every simple S", Assertion::Status::Pass, ""};
    for (std::size_t i = 0; i < simples_.size(); ++i) {
      const auto e = envelope(simples_[i].representative);
      const auto got = mass(e.module);
      if (got.size() != 1 || got.front() != phi(atom(i))) {
        env.status = Assertion::Status::Fail;
        env.detail += "MAss E(" + simples_[i].label + ") has " + std::to_string(got.size()) + " elements; ";
      }
    }
    if (env.status == Assertion::Status::Pass) env.detail = std::to_string(simples_.size()) + " simples";
    out.push_back(env);
    return out;
  }

  std::vector<std::string> notes() const override {
    return {"dimension " + std::to_string(a_->dim()) + " over " + a_->field().name()};
  }

 private:
  RightModule<S> pull_back(const RightModule<S>& t, const Matrix<S>& projection) const {
    std::vector<Matrix<S>> action;
    for (Index k = 0; k < a_->dim(); ++k) action.push_back(t.act_element(RowVector<S>(projection.row(k))));
    return RightModule<S>(a_, std::move(action), t.dim());
  }

  std::vector<Index> asupp_indices(const RightModule<S>& m) const {
    std::vector<Index> out;
    const auto mult = composition_factors(m, simples_);
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (mult[i] > 0) out.push_back(static_cast<Index>(i));
    return out;
  }

  std::vector<Atom> atoms_from(const Multiplicities& mult) const {
    std::vector<Atom> out;
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (mult[i] > 0) out.push_back(atom(i));
    return out;
  }

  Subspace<S> prime_radical_space() const {
    Subspace<S> acc = Subspace<S>::whole(a_->field(), a_->dim());
    for (const auto& p : primes_) acc = acc.intersect(p.ideal.space());
    return acc;
  }

  static bool same_set(const std::vector<Molecule>& x, const std::vector<Molecule>& y) {
    for (const auto& m : x)
      if (!contains(y, m)) return false;
    for (const auto& m : y)
      if (!contains(x, m)) return false;
    return true;
  }

  AlgebraPtr<S> a_;
  std::string name_;
  std::vector<SimpleClass<S>> simples_;
  std::vector<PrimeWitness<S>> primes_;
  std::vector<std::vector<bool>> leq_;
  std::shared_ptr<std::once_flag> opd_once_ = std::make_shared<std::once_flag>();
  mutable std::shared_ptr<OppositeData<S>> opd_;
};

}  // namespace spectra
