#include "spectra/commutative.hpp"

#include <algorithm>
#include <numeric>

namespace spectra {

std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n) {
  if (n == 0) throw PreconditionError("factor_integer: zero has no factorization");
  if (n < 0) n = -n;
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime_integer(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t gcd_int(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t nilradical_generator(std::int64_t n) {
  if (n < 1) throw PreconditionError("nilradical_generator: modulus must be positive");
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  for (auto d : divs) {
    // d^k mod n for k up to 64 covers every exponent in a 63-bit modulus.
    __int128 x = d % n;
    for (int k = 0; k < 64 && x != 0; ++k) x = (x * d) % n;
    if (x == 0) return d;
  }
  return n;
}

namespace {

std::string paren(std::int64_t p) { return "(" + std::to_string(p) + ")"; }

std::int64_t parse_paren(const std::string& label) {
  if (label.size() < 3 || label.front() != '(' || label.back() != ')') throw PreconditionError("malformed prime label " + label);
  try {
    return std::stoll(label.substr(1, label.size() - 2));
  } catch (const std::exception&) {
    throw PreconditionError("malformed prime label " + label);
  }
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) return 0;
  return ((t % n) + n) % n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Z

IntegerBackend::IntegerBackend(std::int64_t bound) : bound_(bound) {
  if (bound < 2) throw PreconditionError("int backend: window bound must be at least 2");
  for (std::int64_t p = 2; p < bound; ++p)
    if (is_prime_integer(p)) primes_.push_back(p);
}

std::string IntegerBackend::scope() const { return "primes < " + std::to_string(bound_); }

std::vector<Atom> IntegerBackend::atoms() const {
  std::vector<Atom> out{{"generic"}};
  for (auto p : primes_) out.push_back({paren(p)});
  return out;
}

std::vector<Molecule> IntegerBackend::molecules() const {
  std::vector<Molecule> out{{"(0)"}};
  for (auto p : primes_) out.push_back({paren(p)});
  return out;
}

std::int64_t IntegerBackend::prime_of(const std::string& label) const {
  if (label == "generic") return 0;
  const std::int64_t p = parse_paren(label);
  if (p != 0 && std::find(primes_.begin(), primes_.end(), p) == primes_.end())
    throw PreconditionError("prime " + label + " is outside the window " + scope());
  return p;
}

// (p) is contained in (q) iff p = 0 or p = q.
bool IntegerBackend::atom_leq(const Atom& a, const Atom& b) const {
  const auto p = prime_of(a.label), q = prime_of(b.label);
  return p == 0 || p == q;
}

bool IntegerBackend::molecule_leq(const Molecule& a, const Molecule& b) const {
  const auto p = prime_of(a.label), q = prime_of(b.label);
  return p == 0 || p == q;
}

Molecule IntegerBackend::phi(const Atom& a) const { return {paren(prime_of(a.label))}; }

Atom IntegerBackend::psi(const Molecule& r) const {
  const auto p = prime_of(r.label);
  return {p == 0 ? "generic" : paren(p)};
}

PropertyFlags IntegerBackend::atomic_flags() const {
  // Intersection of the annihilators of Z/p over the minimal atoms.
  const auto amin = minimal_atoms(*this);
  bool zero = false;
  for (const auto& a : amin) zero = zero || prime_of(a.label) == 0;
  const bool irreducible = amin.size() == 1;
  return {zero, irreducible, zero && irreducible};
}

PropertyFlags IntegerBackend::molecular_flags() const {
  // Z has no nonzero nilpotents and (0) is prime.
  return {true, minimal_molecules(*this).size() == 1, true};
}

ReducedPartDescriptor IntegerBackend::reduced_part() const { return {"(0)", "(0)", "Mod Z", true}; }

ArtinianizationDescriptor IntegerBackend::artinianization() const { return {false, "Mod Q", minimal_atoms(*this)}; }

GoldieDescriptor IntegerBackend::goldie() const {
  GoldieDescriptor d;
  d.w_ideal = "nonzero ideals (n)";
  d.x_ideal = "nonzero ideals (n)";
  for (const auto& a : atoms()) (a.label == "generic" ? d.surviving : d.x_support).push_back(a);
  return d;
}

QuotientRingDescriptor IntegerBackend::classical_quotient_ring() const {
  return {QuotientRingDescriptor::Kind::FractionField, "Q", "n -> n/1"};
}

QuotientRingCheck IntegerBackend::check_quotient_ring(int samples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> d(-1000, 1000);
  QuotientRingCheck c;
  for (int k = 0; k < samples; ++k) {
    ++c.samples;
    const long long a = d(rng), s = d(rng);
    if (a != 0 && Rational(a).is_zero()) c.injective = false;
    if (s == 0) continue;
    ++c.regular_samples;
    const Rational fs(s);
    if (fs * fs.inverse() != Rational(1)) c.regular_become_invertible = false;
    const Rational q = Rational(a) / fs;
    if (q * fs != Rational(a)) c.fractions_cover = false;
  }
  return c;
}

std::vector<std::int64_t> IntegerBackend::classical_ass(std::int64_t m) const {
  if (m == 0) return {0};
  std::vector<std::int64_t> out;
  for (auto [p, e] : factor_integer(m)) out.push_back(p);
  return out;
}

std::vector<Atom> IntegerBackend::ass_atoms_cyclic(std::int64_t m) const {
  // Z has only torsion-free nonzero submodules, all isomorphic to Z.
  if (m == 0) return {{"generic"}};
  // Monoform subgroups of Z/m are the simple ones: order d | m with d prime.
  std::vector<Atom> out;
  for (std::int64_t d = 2; d <= (m < 0 ? -m : m); ++d)
    if (m % d == 0 && is_prime_integer(d)) out.push_back({paren(d)});
  return out;
}

std::vector<Molecule> IntegerBackend::mass_cyclic(std::int64_t m) const {
  std::vector<Molecule> out;
  const std::int64_t am = m < 0 ? -m : m;
  for (const auto& r : molecules()) {
    const std::int64_t q = prime_of(r.label);
    // ann_M((q)) = {x : qx = 0}.
    if (q == 0) {
      // All of M; its annihilator is (m).
      if (am == 0) out.push_back(r);
      continue;
    }
    if (am == 0) continue;  // Z is torsion-free
    const std::int64_t g = gcd_int(q, am);
    // {x : qx = 0} is the subgroup of order g, annihilated exactly by (g).
    if (g > 1 && g == q) out.push_back(r);
  }
  return out;
}

std::vector<Assertion> IntegerBackend::extra_assertions() const {
  Assertion a{"cyclic-associated-primes", "phi(AAss Z/m) = MAss Z/m = Ass Z/m for 0 <= m <= 30", Assertion::Status::Pass, ""};
  for (std::int64_t m = 0; m <= 30; ++m) {
    if (m == 1) continue;
    std::vector<std::string> lhs, mid, rhs;
    for (const auto& x : ass_atoms_cyclic(m)) {
      const auto p = x.label == "generic" ? 0 : parse_paren(x.label);
      if (p == 0 || std::find(primes_.begin(), primes_.end(), p) != primes_.end()) lhs.push_back(phi(x).label);
    }
    for (const auto& r : mass_cyclic(m)) mid.push_back(r.label);
    for (auto p : classical_ass(m))
      if (p == 0 || std::find(primes_.begin(), primes_.end(), p) != primes_.end()) rhs.push_back(paren(p));
    std::sort(lhs.begin(), lhs.end());
    std::sort(mid.begin(), mid.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != mid || mid != rhs) {
      a.status = Assertion::Status::Fail;
      a.detail += "mismatch at m = " + std::to_string(m) + "; ";
    }
  }
  if (a.status == Assertion::Status::Pass) a.detail = "29 cyclic modules, scoped to " + scope();
  return {a};
}

// ---------------------------------------------------------------------------
// Z/n

IntModBackend::IntModBackend(std::int64_t n) : n_(n) {
  if (n < 2) throw PreconditionError("int_mod backend: modulus must be at least 2");
  fac_ = factor_integer(n);
}

std::vector<Atom> IntModBackend::atoms() const {
  std::vector<Atom> out;
  for (auto [p, e] : fac_) out.push_back({paren(p)});
  return out;
}

std::vector<Molecule> IntModBackend::molecules() const {
  std::vector<Molecule> out;
  for (auto [p, e] : fac_) out.push_back({paren(p)});
  return out;
}

Molecule IntModBackend::phi(const Atom& a) const {
  if (!contains(atoms(), a)) throw PreconditionError("unknown atom " + a.label);
  return {a.label};
}

Atom IntModBackend::psi(const Molecule& r) const {
  if (!contains(molecules(), r)) throw PreconditionError("unknown molecule " + r.label);
  return {r.label};
}

PropertyFlags IntModBackend::atomic_flags() const {
  // Intersection of Ann(Z/p) = (p) over the minimal atoms is (product of p).
  std::int64_t r = 1;
  for (const auto& a : minimal_atoms(*this)) r *= parse_paren(a.label);
  const bool reduced = r == n_;
  const bool irreducible = minimal_atoms(*this).size() == 1;
  return {reduced, irreducible, reduced && irreducible};
}

PropertyFlags IntModBackend::molecular_flags() const {
  const bool reduced = nilradical_generator(n_) == n_;
  // Z/n is a domain iff it has no zero divisors iff n is prime.
  return {reduced, minimal_molecules(*this).size() == 1, is_prime_integer(n_)};
}

bool IntModBackend::is_semiprime() const { return nilradical_generator(n_) == n_; }

ReducedPartDescriptor IntModBackend::reduced_part() const {
  std::int64_t r = 1;
  for (auto [p, e] : fac_) r *= p;
  const std::int64_t m = nilradical_generator(n_);
  ReducedPartDescriptor d{paren(r % n_), paren(m % n_), "", r == n_};
  if (r != m) throw InvariantViolation("reduced part: (" + std::to_string(r) + ") differs from (" + std::to_string(m) + ")");
  d.category = "Mod Z/" + std::to_string(r);
  return d;
}

ArtinianizationDescriptor IntModBackend::artinianization() const { return {true, "Mod " + name(), minimal_atoms(*this)}; }

GoldieDescriptor IntModBackend::goldie() const {
  // soc = ann(J) = (n/r); S_p is killed by soc^2 iff p | (n/r)^2, i.e. p^2 | n.
  std::int64_t r = 1;
  for (auto [p, e] : fac_) r *= p;
  const std::int64_t soc = n_ / r;
  GoldieDescriptor d;
  d.w_ideal = paren(soc % n_);
  const auto soc2 = static_cast<std::int64_t>((static_cast<__int128>(soc) * soc) % n_);
  d.x_ideal = paren(gcd_int(soc2, n_) % n_);
  for (auto [p, e] : fac_) {
    const bool killed = (static_cast<__int128>(soc) * soc) % p == 0;
    (killed ? d.x_support : d.surviving).push_back({paren(p)});
  }
  d.quotient_is_zero = d.surviving.empty();
  d.quotient_is_whole = d.x_support.empty();
  return d;
}

QuotientRingDescriptor IntModBackend::classical_quotient_ring() const {
  if (!is_semiprime()) throw HypothesisError("no semisimple classical quotient ring in scope: " + name() + " is not semiprime");
  return {QuotientRingDescriptor::Kind::Self, name(), "identity"};
}

QuotientRingCheck IntModBackend::check_quotient_ring(int samples, std::uint64_t seed) const {
  classical_quotient_ring();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> d(0, n_ - 1);
  QuotientRingCheck c;
  for (int k = 0; k < samples; ++k) {
    ++c.samples;
    const std::int64_t a = d(rng), s = d(rng);
    // s is regular iff it is not a zero divisor iff gcd(s, n) = 1.
    if (gcd_int(s, n_) != 1) continue;
    ++c.regular_samples;
    const std::int64_t inv = mod_inverse(s, n_);
    if (static_cast<__int128>(inv) * s % n_ != 1 % n_) c.regular_become_invertible = false;
    const auto q = static_cast<std::int64_t>(static_cast<__int128>(a) * inv % n_);
    if (static_cast<__int128>(q) * s % n_ != a) c.fractions_cover = false;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Graded k[x]

GradedModuleDescriptor GradedModuleDescriptor::canonical() const {
  GradedModuleDescriptor c = *this;
  for (const auto& [l, s] : c.torsion)
    if (l < 1) throw InvalidInput("graded module: torsion length must be positive");
  std::sort(c.free_shifts.begin(), c.free_shifts.end());
  std::sort(c.torsion.begin(), c.torsion.end());
  return c;
}

GradedBackend::GradedBackend(int lo, int hi, std::string field_name) : lo_(lo), hi_(hi), field_(std::move(field_name)) {
  if (lo > hi) throw PreconditionError("graded backend: empty window");
}

std::string GradedBackend::scope() const { return "shifts in [" + std::to_string(lo_) + ", " + std::to_string(hi_) + "]"; }

void GradedBackend::check_window(int n) const {
  if (n < lo_ || n > hi_) throw PreconditionError("shift " + std::to_string(n) + " is outside the window " + scope());
}

int GradedBackend::shift_of_atom(const Atom& a) const {
  const auto& s = a.label;
  if (s.size() < 4 || s.compare(0, 2, "S(") != 0 || s.back() != ')') throw PreconditionError("unknown atom " + s);
  const int n = std::stoi(s.substr(2, s.size() - 3));
  check_window(n);
  return n;
}

int GradedBackend::shift_of_molecule(const Molecule& r) const {
  const auto& s = r.label;
  if (s.size() < 2 || s.back() != '~') throw PreconditionError("unknown molecule " + s);
  return shift_of_atom({s.substr(0, s.size() - 1)});
}

std::vector<Atom> GradedBackend::atoms() const {
  std::vector<Atom> out{{"generic"}};
  for (int n = lo_; n <= hi_; ++n) out.push_back({shift_label(n)});
  return out;
}

std::vector<Molecule> GradedBackend::molecules() const {
  std::vector<Molecule> out;
  for (int n = lo_; n <= hi_; ++n) out.push_back({shift_label(n) + "~"});
  return out;
}

// Every atom is minimal: the generic atom is the class of k[x](n) for all n,
// and no S(n) lies in ASupp of a monoform representative of another atom.
bool GradedBackend::atom_leq(const Atom& a, const Atom& b) const {
  if (a.label != "generic") shift_of_atom(a);
  if (b.label != "generic") shift_of_atom(b);
  return a == b;
}

bool GradedBackend::molecule_leq(const Molecule& a, const Molecule& b) const {
  return shift_of_molecule(a) == shift_of_molecule(b);
}

Molecule GradedBackend::phi(const Atom& a) const {
  if (a.label == "generic")
    throw HypothesisError("phi undefined on the generic atom: no prime monoform representative (k[x](n) is not a prime object)");
  return {shift_label(shift_of_atom(a)) + "~"};
}

Atom GradedBackend::psi(const Molecule& r) const { return {shift_label(shift_of_molecule(r))}; }

// Both spectra are infinite antichains, so neither side is irreducible; the
// reduced part does not exist, so reducedness is not assigned.
PropertyFlags GradedBackend::atomic_flags() const { return {std::nullopt, false, false}; }
PropertyFlags GradedBackend::molecular_flags() const { return {std::nullopt, false, false}; }

ReducedPartDescriptor GradedBackend::reduced_part() const {
  throw HypothesisError("no noetherian generator: the atomic reduced part does not exist");
}

ArtinianizationDescriptor GradedBackend::artinianization() const {
  throw HypothesisError("no noetherian generator; artinianization undefined in this artifact");
}

GoldieDescriptor GradedBackend::goldie() const {
  throw HypothesisError("no noetherian generator; the Goldie construction is out of scope");
}

QuotientRingDescriptor GradedBackend::classical_quotient_ring() const {
  throw HypothesisError("no noetherian generator; no classical quotient ring in scope");
}

QuotientRingCheck GradedBackend::check_quotient_ring(int, std::uint64_t) const {
  classical_quotient_ring();
  return {};
}

std::vector<Atom> GradedBackend::ass_atoms(const GradedModuleDescriptor& m0) const {
  const auto m = m0.canonical();
  std::vector<Atom> out;
  if (!m.free_shifts.empty()) out.push_back({"generic"});
  for (const auto& [l, s] : m.torsion) {
    const int socle = s - l + 1;
    check_window(socle);
    if (!contains(out, Atom{shift_label(socle)})) out.push_back({shift_label(socle)});
  }
  return out;
}

std::vector<Atom> GradedBackend::asupp(const GradedModuleDescriptor& m0) const {
  const auto m = m0.canonical();
  std::vector<Atom> out;
  if (!m.free_shifts.empty()) out.push_back({"generic"});
  for (int n = lo_; n <= hi_; ++n) {
    bool hit = false;
    // k[x](f) lives in degrees >= -f: it has S(n) as a subquotient iff n <= f.
    for (int f : m.free_shifts) hit = hit || n <= f;
    for (const auto& [l, s] : m.torsion) hit = hit || (s - l + 1 <= n && n <= s);
    if (hit) out.push_back({shift_label(n)});
  }
  return out;
}

std::vector<Molecule> GradedBackend::mass(const GradedModuleDescriptor& m0) const {
  // Free summands have no prime subobject; a torsion summand contributes its
  // socle, the only prime subobject up to equivalence.
  std::vector<Molecule> out;
  for (const auto& [l, s] : m0.canonical().torsion) {
    const int socle = s - l + 1;
    check_window(socle);
    Molecule r{shift_label(socle) + "~"};
    if (!contains(out, r)) out.push_back(r);
  }
  return out;
}

bool GradedBackend::is_prime_object(const GradedModuleDescriptor& m0) const {
  const auto m = m0.canonical();
  if (m.is_zero()) throw PreconditionError("is_prime_object: zero module");
  // k[x](n) contains x k[x](n), whose closure is strictly smaller.
  if (!m.free_shifts.empty()) return false;
  // A torsion module is prime iff it is a sum of copies of one simple S(n).
  for (const auto& [l, s] : m.torsion)
    if (l != 1 || s != m.torsion.front().second) return false;
  return true;
}

bool GradedBackend::in_closure_of_shift(const GradedModuleDescriptor& m0, int n) const {
  const auto m = m0.canonical();
  if (!m.free_shifts.empty()) return false;
  for (const auto& [l, s] : m.torsion)
    if (l != 1 || s != n) return false;
  return true;
}

std::vector<Assertion> GradedBackend::extra_assertions() const {
  Assertion a{"graded-counterexample",
              "MAss k[x] is empty, phi is refused on the generic atom, and artinianization is refused",
              Assertion::Status::Pass,
              ""};
  GradedModuleDescriptor free0{{0}, {}};
  if (!mass(free0).empty()) {
    a.status = Assertion::Status::Fail;
    a.detail += "MAss k[x] is not empty; ";
  }
  try {
    phi({"generic"});
    a.status = Assertion::Status::Fail;
    a.detail += "phi accepted the generic atom; ";
  } catch (const HypothesisError&) {
  }
  try {
    artinianization();
    a.status = Assertion::Status::Fail;
    a.detail += "artinianization accepted; ";
  } catch (const HypothesisError&) {
  }
  if (is_prime_object(free0)) {
    a.status = Assertion::Status::Fail;
    a.detail += "k[x] reported prime; ";
  }
  if (a.status == Assertion::Status::Pass) a.detail = "all three refusals observed";
  return {a};
}

std::vector<std::string> GradedBackend::notes() const {
  return {"no noetherian generator: the generic atom has no prime monoform representative"};
}

}  // namespace spectra
