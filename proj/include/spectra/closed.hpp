#pragma once

// Closed subcategories of Mod A for a finite-dimensional algebra A, keyed by
// two-sided ideals: C = Mod(A/I).  The correspondence reverses inclusion and
// sends the extension product C1 * C2 to the ideal product I2 I1.

#include <algorithm>
#include <string>
#include <vector>

#include "spectra/artinian.hpp"
#include "spectra/subcategories.hpp"

namespace spectra {

template <class S>
class ClosedSubcatDescriptor {
 public:
  explicit ClosedSubcatDescriptor(TwoSidedIdeal<S> ideal) : ideal_(std::move(ideal)) {}
  static ClosedSubcatDescriptor whole(const AlgebraPtr<S>& a) { return ClosedSubcatDescriptor(TwoSidedIdeal<S>::zero(a)); }
  static ClosedSubcatDescriptor zero(const AlgebraPtr<S>& a) { return ClosedSubcatDescriptor(TwoSidedIdeal<S>::whole(a)); }

  const TwoSidedIdeal<S>& ideal() const { return ideal_; }
  bool is_zero() const { return ideal_.is_whole(); }
  bool is_whole() const { return ideal_.is_zero(); }

  /// this is contained in `o` as subcategories.
  bool subset_of(const ClosedSubcatDescriptor& o) const { return ideal_.contains(o.ideal_); }
  bool contains(const RightModule<S>& m) const { return module_times(m, ideal_.space()).is_zero(); }
  bool is_prime() const { return !is_zero() && spectra::is_prime(ideal_); }
  std::string str() const {
    if (is_whole()) return "Mod A";
    if (is_zero()) return "0";
    return "Mod(A/" + describe(ideal_) + ")";
  }

  friend bool operator==(const ClosedSubcatDescriptor& a, const ClosedSubcatDescriptor& b) { return a.ideal_ == b.ideal_; }

 private:
  TwoSidedIdeal<S> ideal_;
};

/// C1 * C2: extensions of an object of C2 by an object of C1; ideal I2 I1.
template <class S>
ClosedSubcatDescriptor<S> ext_product(const ClosedSubcatDescriptor<S>& c1, const ClosedSubcatDescriptor<S>& c2) {
  return ClosedSubcatDescriptor<S>(ideal_product(c2.ideal(), c1.ideal()));
}

template <class S>
ClosedSubcatDescriptor<S> ext_power(const ClosedSubcatDescriptor<S>& c, int n) {
  if (n < 1) throw PreconditionError("ext_power: exponent must be positive");
  ClosedSubcatDescriptor<S> acc = c;
  for (int k = 1; k < n; ++k) acc = ext_product(acc, c);
  return acc;
}

template <class S>
struct RadicalOfClosed {
  ClosedSubcatDescriptor<S> radical;
  int exponent = 1;  ///< least n with C contained in radical^{*n}
};

/// The smallest closed D with C contained in D^{*n} for some n: the ideal is
/// the prime radical of the ideal of C.
template <class S>
RadicalOfClosed<S> radical_of_closed(const ClosedSubcatDescriptor<S>& c) {
  if (c.is_zero()) return {c, 1};
  auto r = prime_radical(c.ideal());
  ClosedSubcatDescriptor<S> d(r);
  ClosedSubcatDescriptor<S> power = d;
  for (int n = 1; n <= c.ideal().parent()->dim() + 1; ++n) {
    if (c.subset_of(power)) return {d, n};
    power = ext_product(power, d);
  }
  throw InvariantViolation("radical_of_closed: no power of the radical contains the subcategory");
}

/// Primes P1, ..., Pn (as molecule indices of `b`), each contained in C,
/// with C contained in P1 * ... * Pn.
template <class S>
std::vector<std::size_t> decompose_closed(const ArtinianBackend<S>& b, const ClosedSubcatDescriptor<S>& c) {
  if (c.is_zero()) throw PreconditionError("decompose_closed: zero subcategory");
  std::vector<std::size_t> over;
  for (std::size_t i = 0; i < b.primes().size(); ++i)
    if (b.primes()[i].ideal.contains(c.ideal())) over.push_back(i);
  const int n = radical_of_closed(c).exponent;
  std::vector<std::size_t> seq;
  for (int k = 0; k < n; ++k) seq.insert(seq.end(), over.begin(), over.end());
  ClosedSubcatDescriptor<S> prod(b.primes()[seq.front()].ideal);
  for (std::size_t k = 1; k < seq.size(); ++k) prod = ext_product(prod, ClosedSubcatDescriptor<S>(b.primes()[seq[k]].ideal));
  if (!c.subset_of(prod)) throw InvariantViolation("decompose_closed: product of primes does not contain the subcategory");
  return seq;
}

/// M lies in the localizing subcategory iff its composition factors lie in
/// the support.
template <class S>
bool in_localizing(const ArtinianBackend<S>& b, const LocalizingSubcatDescriptor& d, const RightModule<S>& m) {
  for (const auto& a : b.asupp(m))
    if (!contains(d.atom_support, a)) return false;
  return true;
}

/// M lies in the locally closed localizing subcategory iff V(Ann M) is
/// contained in the support.
template <class S>
bool in_locally_closed(const ArtinianBackend<S>& b, const LocallyClosedLocalizingDescriptor& d, const RightModule<S>& m) {
  for (const auto& r : b.msupp(m))
    if (!contains(d.molecule_support, r)) return false;
  return true;
}

/// Closed subcategories with radical ideal: Mod(A/I) for I an intersection
/// of primes, ordered by inclusion (largest subcategory first).
template <class S>
std::vector<ClosedSubcatDescriptor<S>> radical_closed_subcategories(const ArtinianBackend<S>& b) {
  const auto& primes = b.primes();
  if (primes.size() > 12) throw BudgetExceeded("radical closed lattice: more than 12 primes");
  std::vector<ClosedSubcatDescriptor<S>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    auto i = TwoSidedIdeal<S>::whole(b.algebra());
    for (std::size_t k = 0; k < primes.size(); ++k)
      if (mask >> k & 1) i = ideal_intersection(i, primes[k].ideal);
    ClosedSubcatDescriptor<S> c(i);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.ideal().space().dim() < y.ideal().space().dim();
  });
  return out;
}

/// Hasse diagram of the radical closed subcategories in DOT.
template <class S>
std::string closed_lattice_dot(const ArtinianBackend<S>& b) {
  const auto cs = radical_closed_subcategories(b);
  std::string out = "digraph closed {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < cs.size(); ++i)
    out += "  c" + std::to_string(i) + " [label=\"" + cs[i].str() + "\", shape=box];\n";
  auto below = [&](std::size_t x, std::size_t y) { return x != y && cs[x].subset_of(cs[y]); };
  for (std::size_t x = 0; x < cs.size(); ++x)
    for (std::size_t y = 0; y < cs.size(); ++y) {
      if (!below(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < cs.size() && cover; ++z) cover = !(below(x, z) && below(z, y));
      if (cover) out += "  c" + std::to_string(x) + " -> c" + std::to_string(y) + ";\n";
    }
  return out + "}\n";
}

}  // namespace spectra
