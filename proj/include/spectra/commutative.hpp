#pragma once

// Symbolic commutative backends: Z, Z/n, k[x], k[x]/(f), and graded k[x].
//
// For a commutative noetherian ring R the atom spectrum is Spec R ordered by
// inclusion, the molecule spectrum is Spec R, and phi, psi are the
// identity on primes.  Infinite spectra are exposed through a window.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spectra/backend.hpp"
#include "spectra/errors.hpp"
#include "spectra/ideal.hpp"
#include "spectra/poly.hpp"

namespace spectra {

/// Prime factorization of |n| (n != 0) as (prime, multiplicity), ascending.
std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n);
bool is_prime_integer(std::int64_t n);
std::int64_t gcd_int(std::int64_t a, std::int64_t b);
/// Smallest positive divisor d of n with d^k divisible by n for some k:
/// the generator of the nilradical of Z/n, found without factoring.
std::int64_t nilradical_generator(std::int64_t n);

class IntegerBackend final : public SpectrumBackend {
 public:
  /// Window: the zero ideal and the primes p < bound.
  explicit IntegerBackend(std::int64_t bound);

  const std::vector<std::int64_t>& window_primes() const { return primes_; }

  /// Classical associated primes of Z/m (m = 0 gives Z); 0 stands for (0).
  std::vector<std::int64_t> classical_ass(std::int64_t m) const;
  /// AAss(Z/m) from monoform (cyclic prime-order or torsion-free) submodules.
  std::vector<Atom> ass_atoms_cyclic(std::int64_t m) const;
  /// MAss(Z/m) = {P : Ann(ann_M(P)) = P}.
  std::vector<Molecule> mass_cyclic(std::int64_t m) const;

  std::string name() const override { return "Z"; }
  std::string kind() const override { return "int"; }
  bool complete() const override { return false; }
  std::string scope() const override;
  std::vector<Atom> atoms() const override;
  std::vector<Molecule> molecules() const override;
  bool atom_leq(const Atom& a, const Atom& b) const override;
  bool molecule_leq(const Molecule& a, const Molecule& b) const override;
  Molecule phi(const Atom& a) const override;
  Atom psi(const Molecule& r) const override;
  PropertyFlags atomic_flags() const override;
  PropertyFlags molecular_flags() const override;
  bool is_artinian() const override { return false; }
  bool is_semiprime() const override { return true; }
  ReducedPartDescriptor reduced_part() const override;
  ArtinianizationDescriptor artinianization() const override;
  GoldieDescriptor goldie() const override;
  QuotientRingDescriptor classical_quotient_ring() const override;
  QuotientRingCheck check_quotient_ring(int samples, std::uint64_t seed) const override;
  std::vector<Assertion> extra_assertions() const override;

 private:
  std::int64_t prime_of(const std::string& label) const;
  std::int64_t bound_;
  std::vector<std::int64_t> primes_;
};

class IntModBackend final : public SpectrumBackend {
 public:
  explicit IntModBackend(std::int64_t n);

  std::int64_t modulus() const { return n_; }
  const std::vector<std::pair<std::int64_t, int>>& factorization() const { return fac_; }

  std::string name() const override { return "Z/" + std::to_string(n_); }
  std::string kind() const override { return "int_mod"; }
  bool complete() const override { return true; }
  std::vector<Atom> atoms() const override;
  std::vector<Molecule> molecules() const override;
  bool atom_leq(const Atom& a, const Atom& b) const override { return a == b; }
  bool molecule_leq(const Molecule& a, const Molecule& b) const override { return a == b; }
  Molecule phi(const Atom& a) const override;
  Atom psi(const Molecule& r) const override;
  PropertyFlags atomic_flags() const override;
  PropertyFlags molecular_flags() const override;
  bool is_artinian() const override { return true; }
  bool is_semiprime() const override;
  ReducedPartDescriptor reduced_part() const override;
  ArtinianizationDescriptor artinianization() const override;
  GoldieDescriptor goldie() const override;
  QuotientRingDescriptor classical_quotient_ring() const override;
  QuotientRingCheck check_quotient_ring(int samples, std::uint64_t seed) const override;

 private:
  std::int64_t n_;
  std::vector<std::pair<std::int64_t, int>> fac_;
};

/// A finitely generated graded k[x]-module: a sum of shifted free modules
/// k[x](n) and shifted torsion modules (k[x]/(x^l))(s).  The simple S(n) is
/// k concentrated in degree -n.
struct GradedModuleDescriptor {
  std::vector<int> free_shifts;
  std::vector<std::pair<int, int>> torsion;  ///< (length, shift)
  /// Sorts both lists; rejects non-positive lengths.
  GradedModuleDescriptor canonical() const;
  bool is_zero() const { return free_shifts.empty() && torsion.empty(); }
  friend bool operator==(const GradedModuleDescriptor&, const GradedModuleDescriptor&) = default;
};

/// Graded modules over k[x] (x in degree 1) on a window of shifts [lo, hi].
/// There is no noetherian generator: ASpec is {generic} together with one
/// atom S(n) per shift, all minimal; MSpec has only the shifts.
class GradedBackend final : public SpectrumBackend {
 public:
  GradedBackend(int lo, int hi, std::string field_name = "k");

  std::vector<Atom> ass_atoms(const GradedModuleDescriptor& m) const;
  std::vector<Atom> asupp(const GradedModuleDescriptor& m) const;
  std::vector<Molecule> mass(const GradedModuleDescriptor& m) const;
  bool is_prime_object(const GradedModuleDescriptor& m) const;
  /// The modules in the closed subcategory cl(S(n)): those concentrated in degree -n.
  bool in_closure_of_shift(const GradedModuleDescriptor& m, int n) const;

  std::string name() const override { return "graded " + field_ + "[x]"; }
  std::string kind() const override { return "graded_poly"; }
  bool complete() const override { return false; }
  std::string scope() const override;
  std::vector<Atom> atoms() const override;
  std::vector<Molecule> molecules() const override;
  bool atom_leq(const Atom& a, const Atom& b) const override;
  bool molecule_leq(const Molecule& a, const Molecule& b) const override;
  Molecule phi(const Atom& a) const override;
  Atom psi(const Molecule& r) const override;
  PropertyFlags atomic_flags() const override;
  PropertyFlags molecular_flags() const override;
  bool has_noetherian_generator() const override { return false; }
  bool is_artinian() const override { return false; }
  bool is_semiprime() const override { return true; }
  ReducedPartDescriptor reduced_part() const override;
  ArtinianizationDescriptor artinianization() const override;
  GoldieDescriptor goldie() const override;
  QuotientRingDescriptor classical_quotient_ring() const override;
  QuotientRingCheck check_quotient_ring(int samples, std::uint64_t seed) const override;
  std::vector<Assertion> extra_assertions() const override;
  std::vector<std::string> notes() const override;

  static std::string shift_label(int n) { return "S(" + std::to_string(n) + ")"; }

 private:
  int shift_of_atom(const Atom& a) const;
  int shift_of_molecule(const Molecule& r) const;
  void check_window(int n) const;
  int lo_, hi_;
  std::string field_;
};

// ---------------------------------------------------------------------------
// Polynomial backends over a field

namespace detail {

template <class S>
std::string poly_label(const Poly<S>& g) {
  return "(" + g.str() + ")";
}

/// Monic irreducible polynomials in the window: degree <= d over F_p, and
/// x - a with |a| <= d over Q.
template <class S>
std::vector<Poly<S>> window_irreducibles(const Field<S>& f, int d) {
  std::vector<Poly<S>> out;
  if constexpr (is_finite_scalar_v<S>) {
    const std::uint64_t q = f.size();
    for (int deg = 1; deg <= d; ++deg) {
      std::uint64_t total = 1;
      for (int i = 0; i < deg; ++i) {
        if (total > 100000 / q) throw BudgetExceeded("polynomial window too large");
        total *= q;
      }
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<S> c(static_cast<std::size_t>(deg) + 1, f.zero());
        std::uint64_t x = code;
        for (int i = 0; i < deg; ++i) {
          c[static_cast<std::size_t>(i)] = f.element(x % q);
          x /= q;
        }
        c[static_cast<std::size_t>(deg)] = f.one();
        Poly<S> g(std::move(c));
        if (is_irreducible(g)) out.push_back(g);
      }
    }
  } else {
    for (int a = 0; a <= d; ++a) {
      out.push_back(Poly<S>::linear_root(f.from_int(a)));
      if (a) out.push_back(Poly<S>::linear_root(f.from_int(-a)));
    }
  }
  return out;
}

template <class S>
Poly<S> poly_from_ints(const Field<S>& f, const std::vector<std::int64_t>& c) {
  std::vector<S> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return Poly<S>(std::move(v));
}

}  // namespace detail

/// k[x] on a window of primes.
template <class S>
class PolyBackend final : public SpectrumBackend {
 public:
  PolyBackend(Field<S> f, int window_degree) : f_(std::move(f)), d_(window_degree) {
    if (d_ < 1) throw PreconditionError("poly backend: window must be at least 1");
    irr_ = detail::window_irreducibles(f_, d_);
  }

  const std::vector<Poly<S>>& window_primes() const { return irr_; }

  std::string name() const override { return f_.name() + "[x]"; }
  std::string kind() const override { return "poly"; }
  bool complete() const override { return false; }
  std::string scope() const override {
    return is_finite_scalar_v<S> ? "irreducibles of degree <= " + std::to_string(d_)
                                 : "linear primes x - a with |a| <= " + std::to_string(d_);
  }
  std::vector<Atom> atoms() const override {
    std::vector<Atom> out{{"generic"}};
    for (const auto& g : irr_) out.push_back({detail::poly_label(g)});
    return out;
  }
  std::vector<Molecule> molecules() const override {
    std::vector<Molecule> out{{"(0)"}};
    for (const auto& g : irr_) out.push_back({detail::poly_label(g)});
    return out;
  }
  // (0) is contained in every prime; distinct maximal ideals are incomparable.
  bool atom_leq(const Atom& a, const Atom& b) const override { return a == b || a.label == "generic"; }
  bool molecule_leq(const Molecule& a, const Molecule& b) const override { return a == b || a.label == "(0)"; }
  Molecule phi(const Atom& a) const override {
    check_atom(a);
    return {a.label == "generic" ? "(0)" : a.label};
  }
  Atom psi(const Molecule& r) const override {
    check_molecule(r);
    return {r.label == "(0)" ? "generic" : r.label};
  }
  PropertyFlags atomic_flags() const override {
    // The minimal atom is k[x] itself, a faithful module.
    const bool reduced = true;
    const bool irreducible = minimal_atoms(*this).size() == 1;
    return {reduced, irreducible, reduced && irreducible};
  }
  PropertyFlags molecular_flags() const override {
    // k[x] is a domain: no nonzero nilpotents and (0) is prime.
    const bool reduced = true;
    return {reduced, minimal_molecules(*this).size() == 1, true};
  }
  bool is_artinian() const override { return false; }
  bool is_semiprime() const override { return true; }
  ReducedPartDescriptor reduced_part() const override { return {"(0)", "(0)", "Mod " + name(), true}; }
  ArtinianizationDescriptor artinianization() const override {
    return {false, "Mod " + f_.name() + "(x)", minimal_atoms(*this)};
  }
  GoldieDescriptor goldie() const override {
    GoldieDescriptor d;
    d.w_ideal = "nonzero ideals (g)";
    d.x_ideal = "nonzero ideals (g)";
    for (const auto& a : atoms()) (a.label == "generic" ? d.surviving : d.x_support).push_back(a);
    return d;
  }
  QuotientRingDescriptor classical_quotient_ring() const override {
    return {QuotientRingDescriptor::Kind::FractionField, f_.name() + "(x)", "g -> g/1"};
  }
  QuotientRingCheck check_quotient_ring(int samples, std::uint64_t seed) const override {
    std::mt19937_64 rng(seed);
    auto random_poly = [&] {
      std::uniform_int_distribution<int> deg(0, 4);
      std::vector<S> c;
      for (int i = 0, n = deg(rng); i <= n; ++i) c.push_back(f_.random(rng));
      return Poly<S>(std::move(c));
    };
    QuotientRingCheck c;
    for (int k = 0; k < samples; ++k) {
      ++c.samples;
      const Poly<S> a = random_poly();
      const Poly<S> s = random_poly();
      // a/1 = 0/1 iff a * 1 = 0.
      if (!a.is_zero() && (a * Poly<S>::constant(f_.one())).is_zero()) c.injective = false;
      // Every nonzero polynomial is regular; s/1 * 1/s = s/s must reduce to 1.
      if (s.is_zero()) continue;
      ++c.regular_samples;
      const auto [quot, rem] = divmod(s, s);
      if (!rem.is_zero() || !(quot == Poly<S>::constant(f_.one()))) c.regular_become_invertible = false;
      // q = a/s, and q * s/1 = (a s)/s must reduce to a/1.
      const auto [back, r2] = divmod(a * s, s);
      if (!r2.is_zero() || !(back == a)) c.fractions_cover = false;
    }
    return c;
  }

 private:
  void check_atom(const Atom& a) const {
    for (const auto& x : atoms())
      if (x == a) return;
    throw PreconditionError("atom " + a.label + " is outside the window");
  }
  void check_molecule(const Molecule& r) const {
    for (const auto& x : molecules())
      if (x == r) return;
    throw PreconditionError("molecule " + r.label + " is outside the window");
  }
  Field<S> f_;
  int d_;
  std::vector<Poly<S>> irr_;
};

/// k[x]/(f), deg f >= 1.
template <class S>
class PolyQuotBackend final : public SpectrumBackend {
 public:
  PolyQuotBackend(Field<S> f, Poly<S> modulus) : f_(std::move(f)), mod_(modulus.monic()) {
    if (mod_.degree() < 1) throw PreconditionError("poly_quot backend: modulus must have degree >= 1");
    fac_ = factor_complete(mod_);
  }

  const Poly<S>& modulus() const { return mod_; }
  const Factorization<S>& factorization() const { return fac_; }

  /// Product of the distinct irreducible factors: the intersection of the
  /// annihilators of the simple modules k[x]/(g).
  Poly<S> radical_from_factors() const {
    Poly<S> r = Poly<S>::constant(f_.one());
    for (const auto& pf : fac_.factors) r = r * pf.factor;
    return r;
  }
  /// The least-degree monic divisor h of f with f | h^deg f, found by
  /// testing the divisors of f directly.
  Poly<S> nilradical_generator() const {
    std::vector<Poly<S>> divisors{Poly<S>::constant(f_.one())};
    for (const auto& pf : fac_.factors) {
      std::vector<Poly<S>> next;
      for (const auto& d : divisors) {
        Poly<S> p = d;
        for (int e = 0; e <= pf.multiplicity; ++e) {
          next.push_back(p);
          p = p * pf.factor;
        }
      }
      divisors = std::move(next);
    }
    std::optional<Poly<S>> best;
    for (const auto& h : divisors) {
      if (!(pow_mod(h, static_cast<std::uint64_t>(mod_.degree()), mod_)).is_zero()) continue;
      if (!best || h.degree() < best->degree()) best = h;
    }
    return *best;
  }

  std::string name() const override { return f_.name() + "[x]/(" + mod_.str() + ")"; }
  std::string kind() const override { return "poly_quot"; }
  bool complete() const override { return true; }
  std::vector<Atom> atoms() const override {
    std::vector<Atom> out;
    for (const auto& pf : fac_.factors) out.push_back({detail::poly_label(pf.factor)});
    return out;
  }
  std::vector<Molecule> molecules() const override {
    std::vector<Molecule> out;
    for (const auto& pf : fac_.factors) out.push_back({detail::poly_label(pf.factor)});
    return out;
  }
  bool atom_leq(const Atom& a, const Atom& b) const override { return a == b; }
  bool molecule_leq(const Molecule& a, const Molecule& b) const override { return a == b; }
  Molecule phi(const Atom& a) const override { return {a.label}; }
  Atom psi(const Molecule& r) const override { return {r.label}; }
  PropertyFlags atomic_flags() const override {
    const bool reduced = radical_from_factors().degree() == mod_.degree();
    const bool irreducible = minimal_atoms(*this).size() == 1;
    return {reduced, irreducible, reduced && irreducible};
  }
  PropertyFlags molecular_flags() const override {
    const bool reduced = nilradical_generator().degree() == mod_.degree();
    // (0) is prime iff f is irreducible.
    const bool zero_prime = is_irreducible(mod_);
    return {reduced, minimal_molecules(*this).size() == 1, zero_prime};
  }
  bool is_artinian() const override { return true; }
  bool is_semiprime() const override { return nilradical_generator().degree() == mod_.degree(); }
  ReducedPartDescriptor reduced_part() const override {
    const Poly<S> a = radical_from_factors(), m = nilradical_generator();
    ReducedPartDescriptor d{detail::poly_label(a), detail::poly_label(m), "", false};
    if (!(a == m)) throw InvariantViolation("reduced part: " + d.atomic_ideal + " differs from " + d.molecular_ideal);
    d.is_whole_category = a.degree() == mod_.degree();
    d.category = "Mod " + f_.name() + "[x]/(" + a.str() + ")";
    return d;
  }
  ArtinianizationDescriptor artinianization() const override { return {true, "Mod " + name(), minimal_atoms(*this)}; }
  GoldieDescriptor goldie() const override {
    GoldieDescriptor d;
    // soc = ann(J) = (f/r); S_g is killed by soc^2 iff g | (f/r)^2.
    const Poly<S> r = radical_from_factors();
    const Poly<S> soc = mod_ / r;
    d.w_ideal = detail::poly_label(soc);
    d.x_ideal = detail::poly_label(gcd(soc * soc, mod_).monic());
    for (const auto& pf : fac_.factors) {
      Atom a{detail::poly_label(pf.factor)};
      ((soc * soc) % pf.factor).is_zero() ? d.x_support.push_back(a) : d.surviving.push_back(a);
    }
    d.quotient_is_zero = d.surviving.empty();
    d.quotient_is_whole = d.x_support.empty();
    return d;
  }
  QuotientRingDescriptor classical_quotient_ring() const override {
    if (!is_semiprime()) throw HypothesisError("no semisimple classical quotient ring in scope: " + name() + " is not semiprime");
    return {QuotientRingDescriptor::Kind::Self, name(), "identity"};
  }
  QuotientRingCheck check_quotient_ring(int samples, std::uint64_t seed) const override {
    classical_quotient_ring();
    std::mt19937_64 rng(seed);
    auto random_elem = [&] {
      std::vector<S> c;
      for (int i = 0; i < mod_.degree(); ++i) c.push_back(f_.random(rng));
      return Poly<S>(std::move(c));
    };
    QuotientRingCheck c;
    for (int k = 0; k < samples; ++k) {
      ++c.samples;
      const Poly<S> a = random_elem(), s = random_elem();
      // s is regular iff gcd(s, f) = 1, and then invertible modulo f.
      if (s.is_zero() || gcd(s, mod_).degree() != 0) continue;
      ++c.regular_samples;
      auto [g, u, v] = ext_gcd(s, mod_);
      const Poly<S> inv = (u * Poly<S>::constant(S(1) / g.lead())) % mod_;
      if (!((inv * s) % mod_ == Poly<S>::constant(f_.one()))) c.regular_become_invertible = false;
      const Poly<S> q = (a * inv) % mod_;
      if (!((q * s) % mod_ == a % mod_)) c.fractions_cover = false;
    }
    return c;
  }

 private:
  Field<S> f_;
  Poly<S> mod_;
  Factorization<S> fac_;
};

/// The structure-constant algebra of k[x]/(f) on the basis 1, x, ..., x^{d-1}.
template <class S>
AlgebraPtr<S> bridge_to_algebra(const Field<S>& f, const Poly<S>& modulus) {
  if (modulus.degree() < 1) throw PreconditionError("bridge_to_algebra: modulus must have degree >= 1");
  return share(polynomial_quotient(f, modulus.monic()));
}

}  // namespace spectra
