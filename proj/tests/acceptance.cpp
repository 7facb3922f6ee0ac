// Acceptance suite: one PASS/FAIL line per criterion.  Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/artinian.hpp"
#include "spectra/closed.hpp"
#include "spectra/commutative.hpp"
#include "spectra/goldie.hpp"
#include "spectra/oracle.hpp"
#include "spectra/oracle_check.hpp"
#include "spectra/report.hpp"
#include "spectra/subcategories.hpp"

using namespace spectra;

namespace {

// Pinned limits.
constexpr double kCorrespondenceSeconds = 60.0;
constexpr double kOracleSeconds = 600.0;
constexpr std::size_t kMinCorpus = 40;
constexpr Index kCorpusMaxDim = 6;
constexpr Index kOracleMaxDim = 4;
constexpr Index kGoldieMaxDim = 4;
constexpr int kQuotientSamples = 100;
constexpr int kRandomModuli = 20;
constexpr std::uint64_t kSeed = 20240501;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 8) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Corpus {
  std::vector<std::unique_ptr<ArtinianBackend<Zp>>> backends;
  std::vector<std::string> names;
};

const Corpus& corpus_backends() {
  static const Corpus c = [] {
    Corpus out;
    for (const auto& e : corpus(0)) {
      if (e.algebra->dim() > kCorpusMaxDim) continue;
      out.backends.push_back(std::make_unique<ArtinianBackend<Zp>>(e.algebra, e.name));
      out.names.push_back(e.name);
    }
    return out;
  }();
  return c;
}

std::vector<std::unique_ptr<SpectrumBackend>> commutative_backends() {
  std::vector<std::unique_ptr<SpectrumBackend>> out;
  const PrimeField f2(2), f3(3);
  // Windows chosen to expose at least ten nonzero primes.
  out.push_back(std::make_unique<IntegerBackend>(30));
  out.push_back(std::make_unique<IntModBackend>(2LL * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29));
  out.push_back(std::make_unique<IntModBackend>(360));
  out.push_back(std::make_unique<PolyBackend<Zp>>(f2, 5));
  out.push_back(std::make_unique<PolyBackend<Rational>>(RationalField{}, 5));
  out.push_back(std::make_unique<PolyQuotBackend<Zp>>(f2, Poly<Zp>({f2.zero(), f2.zero(), f2.one(), f2.one()})));
  out.push_back(std::make_unique<PolyQuotBackend<Zp>>(
      f3, Poly<Zp>({f3.from_int(2), f3.zero(), f3.zero(), f3.zero(), f3.one()})));
  out.push_back(std::make_unique<PolyQuotBackend<Rational>>(
      RationalField{}, Poly<Rational>({Rational(-1), Rational(0), Rational(0), Rational(1)})));
  return out;
}

/// phi psi = id, the adjunction, and phi restricted to AMin.
void check_correspondence(const SpectrumBackend& b, Outcome& o) {
  const std::string n = b.name() + ": ";
  for (const auto& r : b.molecules()) o.require(b.phi(b.psi(r)) == r, n + "phi psi differs from id at " + r.label);
  for (const auto& a : b.atoms()) {
    const Molecule pa = b.phi(a);
    for (const auto& r : b.molecules())
      o.require(b.atom_leq(b.psi(r), a) == b.molecule_leq(r, pa), n + "adjunction fails at " + r.label + ", " + a.label);
  }
  const auto amin = minimal_atoms(b);
  const auto mmin = minimal_molecules(b);
  o.require(amin.size() == mmin.size(), n + "|AMin| != |MMin|");
  std::vector<Molecule> image;
  for (const auto& a : amin) {
    const Molecule r = b.phi(a);
    o.require(contains(mmin, r), n + "phi(" + a.label + ") not minimal");
    o.require(!contains(image, r), n + "phi not injective on AMin");
    o.require(b.psi(r) == a, n + "psi is not inverse on AMin");
    image.push_back(r);
  }
}

Outcome criterion_correspondence() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto& c = corpus_backends();
  o.require(c.backends.size() >= kMinCorpus, "corpus has only " + std::to_string(c.backends.size()) + " algebras");
  for (const auto& b : c.backends) check_correspondence(*b, o);
  const auto comm = commutative_backends();
  for (const auto& b : comm) check_correspondence(*b, o);
  const double t = seconds_since(t0);
  o.require(t < kCorrespondenceSeconds, "runtime " + std::to_string(t) + " s");
  std::ostringstream d;
  d << c.backends.size() << " corpus algebras, " << comm.size() << " commutative backends, " << t << " s (limit "
    << kCorrespondenceSeconds << " s)";
  o.detail = d.str();
  return o;
}

Outcome criterion_reduced_part() {
  Outcome o;
  const auto& c = corpus_backends();
  for (std::size_t i = 0; i < c.backends.size(); ++i) {
    const auto& a = c.backends[i]->algebra();
    const auto j = jacobson_radical_space(*a);
    const auto r = prime_radical(TwoSidedIdeal<Zp>::zero(a)).space();
    o.require(j.key() == r.key(), c.names[i] + ": J != prime radical");
    const auto d = c.backends[i]->reduced_part();
    o.require(d.atomic_ideal == d.molecular_ideal, c.names[i] + ": reduced part routes differ");
  }
  o.detail = std::to_string(c.backends.size()) + " algebras, canonical subspace forms compared";
  return o;
}

Outcome criterion_flags() {
  Outcome o;
  std::size_t n = 0;
  auto check = [&](const SpectrumBackend& b) {
    ++n;
    o.require(b.atomic_flags() == b.molecular_flags(), b.name() + ": atomic and molecular flags differ");
  };
  for (const auto& b : corpus_backends().backends) check(*b);
  for (const auto& b : commutative_backends()) check(*b);
  check(GradedBackend(-5, 5));
  const RationalField q;
  check(ArtinianBackend<Rational>(share(matrix_algebra(q, 2)), "M2(Q)"));
  check(ArtinianBackend<Rational>(share(upper_triangular(q, 3)), "T3(Q)"));
  check(ArtinianBackend<Rational>(share(polynomial_quotient(q, Poly<Rational>({Rational(1), Rational(0), Rational(1)}))),
                                  "Q[x]/(x^2+1)"));
  o.detail = std::to_string(n) + " backends";
  return o;
}

Outcome criterion_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t algebras = 0, checks = 0;
  for (const auto& e : corpus(0)) {
    if (e.algebra->field().size() != 2 || e.algebra->dim() > kOracleMaxDim) continue;
    ++algebras;
    const ArtinianBackend<Zp> b(e.algebra, e.name);
    const auto cmp = compare_with_oracle(b, {}, true, kOracleMaxDim);
    checks += cmp.checked();
    for (const auto& t : cmp.tallies)
      for (const auto& d : t.disagreements) o.require(false, t.name + ": " + d);
  }
  const double t = seconds_since(t0);
  o.require(t < kOracleSeconds, "runtime " + std::to_string(t) + " s");
  std::ostringstream d;
  d << algebras << " F2 algebras, " << checks << " comparisons, " << t << " s (limit " << kOracleSeconds << " s)";
  o.detail = d.str();
  return o;
}

Outcome criterion_envelopes() {
  Outcome o;
  std::size_t simples = 0, primes = 0;
  const auto& c = corpus_backends();
  for (std::size_t i = 0; i < c.backends.size(); ++i) {
    const auto& b = *c.backends[i];
    const std::string n = c.names[i] + ": ";
    for (std::size_t s = 0; s < b.simples().size(); ++s) {
      ++simples;
      const auto mass = b.mass(b.envelope(b.simples()[s].representative).module);
      o.require(mass.size() == 1 && mass[0] == b.phi(b.atom(s)), n + "mass(E(" + b.atom(s).label + ")) != {phi}");
    }
    for (std::size_t r = 0; r < b.primes().size(); ++r) {
      ++primes;
      const auto q = b.quotient_regular_module(b.molecule(r));
      const auto env = b.envelope(q).module;
      const auto s = b.atom_index(b.psi(b.molecule(r)));
      const auto& simple = b.simples()[s].representative;
      const auto one = b.envelope(simple).module;
      // Socle isotypic of type psi(P); dimension is copies * dim E(psi(P)).
      const auto soc = composition_factors(socle(env), b.simples());
      Index others = 0;
      for (std::size_t k = 0; k < soc.size(); ++k)
        if (k != s) others += soc[k];
      o.require(others == 0, n + "socle of E(A/" + b.molecule(r).label + ") not isotypic");
      const Index copies = soc[s];
      o.require(env.dim() == copies * one.dim(), n + "dimension of E(A/" + b.molecule(r).label + ")");
      auto sum = one;
      for (Index k = 1; k < copies; ++k) sum = direct_sum(sum, one);
      o.require(copies >= 1 && is_isomorphic(env, sum), n + "E(A/" + b.molecule(r).label + ") not a sum of copies");
    }
  }
  o.detail = std::to_string(simples) + " simples, " + std::to_string(primes) + " prime quotients";
  return o;
}

Outcome criterion_goldie() {
  Outcome o;
  std::size_t ideals = 0, backends = 0;
  for (const auto& e : corpus(0)) {
    if (e.algebra->field().size() != 2 || e.algebra->dim() > kGoldieMaxDim) continue;
    if (!jacobson_radical_space(*e.algebra).is_zero()) continue;
    const auto reg = RightModule<Zp>::regular(e.algebra);
    for (const auto& l : enumerate_right_ideals(e.algebra)) {
      if (!oracle::is_essential(reg, l)) continue;
      ++ideals;
      const auto x = regular_element_in(RightIdeal<Zp>(e.algebra, l));
      o.require(l.contains(x) && is_regular_element(*e.algebra, x), e.name + ": essential right ideal without regular element");
    }
  }

  auto support = [&](const SpectrumBackend& b) {
    ++backends;
    const auto g = b.goldie();
    const auto amin = minimal_atoms(b);
    bool inside = true;
    for (const auto& a : g.surviving) inside = inside && contains(amin, a);
    o.require(inside, b.name() + ": ASpec(Gol) not inside AMin");
    const bool equal = inside && g.surviving.size() == amin.size();
    const bool reduced = b.atomic_flags().reduced.value_or(false);
    o.require(equal == reduced, b.name() + ": ASpec(Gol) = AMin does not match reducedness");
  };
  for (const auto& b : corpus_backends().backends) support(*b);
  for (const auto& b : commutative_backends()) support(*b);

  const PrimeField f2(2);
  BoundQuiver q;
  q.vertices = 2;
  q.arrows = {{0, 1, "a"}, {1, 0, "b"}};
  q.relations = {{{1, {"a", "b"}}}, {{1, {"b", "a"}}}};
  const ArtinianBackend<Zp> cycle(share(bound_quiver_algebra(f2, q)), "cycle");
  const auto g = cycle.goldie();
  o.require(g.quotient_is_zero, "cycle quiver: Gol is not zero");
  o.require(g.surviving.empty(), "cycle quiver: ASpec(Gol) not empty");

  const IntegerBackend z(30);
  const auto qr = z.classical_quotient_ring();
  o.require(qr.kind == QuotientRingDescriptor::Kind::FractionField, "Z: quotient ring is not a fraction field");
  const auto chk = z.check_quotient_ring(kQuotientSamples, kSeed);
  o.require(chk.samples == kQuotientSamples && chk.ok(), "Z: quotient ring clauses fail on samples");

  std::ostringstream d;
  d << ideals << " essential right ideals, " << backends << " backends, Z -> " << qr.data << " on " << chk.samples
    << " samples";
  o.detail = d.str();
  return o;
}

Outcome criterion_classification() {
  Outcome o;
  const PrimeField f2(2);
  const ArtinianBackend<Zp> t2(share(upper_triangular(f2, 2)), "T2");
  const ArtinianBackend<Zp> field(share(product_of_copies(f2, 1)), "F2");
  const IntegerBackend z(4);
  o.require(classify_locally_closed_localizing(t2).size() == 4, "T2: locally closed count");
  o.require(classify_locally_closed_localizing(field).size() == 2, "field: locally closed count");
  o.require(labels(z.molecules()) == std::vector<std::string>{"(0)", "(2)", "(3)"}, "Z window molecules");
  o.require(classify_locally_closed_localizing(z).size() == 5, "Z window: locally closed count");

  auto order = [](const SpectrumBackend& b) {
    const auto ms = b.molecules();
    std::vector<std::vector<bool>> leq(ms.size(), std::vector<bool>(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) leq[i][j] = b.molecule_leq(ms[i], ms[j]);
    return leq;
  };
  const auto& c = corpus_backends();
  for (std::size_t i = 0; i < c.backends.size(); ++i) {
    const auto& b = *c.backends[i];
    const auto loc = classify_localizing(b);
    const std::size_t n = b.atoms().size();
    o.require(loc.subcategories.size() == (std::size_t{1} << n), c.names[i] + ": localizing count");
    o.require(loc.prime_count == n, c.names[i] + ": prime localizing count");
    o.require(loc.maximal_proper_count == minimal_atoms(b).size(), c.names[i] + ": maximal proper count");
    o.require(classify_locally_closed_localizing(b).size() == count_antichains(order(b)),
              c.names[i] + ": locally closed count");
  }
  o.detail = "T2 4, field 2, Z{(0),(2),(3)} 5; " + std::to_string(c.backends.size()) + " corpus algebras";
  return o;
}

Outcome criterion_graded() {
  Outcome o;
  const GradedBackend g(-5, 5);
  const GradedModuleDescriptor kx{{0}, {}};
  o.require(g.mass(kx).empty(), "mass(k[x]) is not empty");
  bool refused = false;
  try {
    g.phi(Atom{"generic"});
  } catch (const HypothesisError&) {
    refused = true;
  }
  o.require(refused, "phi(generic) was not refused");
  refused = false;
  try {
    g.artinianization();
  } catch (const HypothesisError&) {
    refused = true;
  }
  o.require(refused, "artinianization was not refused");
  o.detail = "mass(k[x]) empty, phi(generic) refused, artinianization refused";
  return o;
}

/// k[x]/(g) as a right module over the structure-constant algebra k[x]/(f).
RightModule<Zp> residue_module(const AlgebraPtr<Zp>& a, const PrimeField& f, const Poly<Zp>& g) {
  const int d = static_cast<int>(a->dim()), e = g.degree();
  std::vector<Matrix<Zp>> act;
  for (int i = 0; i < d; ++i) {
    Matrix<Zp> m = zeros(f, e, e);
    for (int j = 0; j < e; ++j) {
      const auto r = Poly<Zp>::monomial(f.one(), static_cast<std::size_t>(i + j)) % g;
      for (int k = 0; k < e; ++k) m(j, k) = f.bind(r.coeff(static_cast<std::size_t>(k)));
    }
    act.push_back(m);
  }
  return RightModule<Zp>(a, act, e);
}

/// The ideal (g) of k[x]/(f) on the monomial basis.
Subspace<Zp> principal_ideal(const PrimeField& f, const Poly<Zp>& g, const Poly<Zp>& mod) {
  const int d = mod.degree();
  std::vector<RowVector<Zp>> rows;
  for (int i = 0; i < d; ++i) {
    const auto r = (g * Poly<Zp>::monomial(f.one(), static_cast<std::size_t>(i))) % mod;
    RowVector<Zp> v = zero_vector(f, d);
    for (int k = 0; k < d; ++k) v(k) = f.bind(r.coeff(static_cast<std::size_t>(k)));
    rows.push_back(v);
  }
  return Subspace<Zp>::span(rows, d);
}

Outcome criterion_cross_representation() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::vector<std::string> moduli;
  for (int t = 0; t < kRandomModuli; ++t) {
    const PrimeField f(t % 2 ? 3 : 2);
    const int deg = 1 + static_cast<int>(rng() % 5);
    std::vector<Zp> c;
    for (int i = 0; i < deg; ++i) c.push_back(f.random(rng));
    c.push_back(f.one());
    const Poly<Zp> mod(c);
    const std::string n = f.name() + "[x]/(" + mod.str() + "): ";
    moduli.push_back(mod.str());
    const PolyQuotBackend<Zp> sym(f, mod);
    const auto alg = bridge_to_algebra(f, mod);
    const ArtinianBackend<Zp> art(alg, sym.name());

    std::map<std::string, Atom> atom_map;
    std::map<std::string, Molecule> mol_map;
    for (const auto& pf : sym.factorization().factors) {
      const std::string label = "(" + pf.factor.str() + ")";
      atom_map[label] = art.classify(residue_module(alg, f, pf.factor));
      mol_map[label] = art.molecule_of(principal_ideal(f, pf.factor, mod));
    }
    const auto sa = sym.atoms();
    const auto sm = sym.molecules();
    o.require(sa.size() == art.atoms().size() && sm.size() == art.molecules().size(), n + "spectrum sizes differ");
    std::vector<Atom> hit;
    for (const auto& a : sa) {
      if (!atom_map.count(a.label)) {
        o.require(false, n + "unmatched atom " + a.label);
        continue;
      }
      o.require(!contains(hit, atom_map[a.label]), n + "atom map not injective");
      hit.push_back(atom_map[a.label]);
      o.require(mol_map[sym.phi(a).label] == art.phi(atom_map[a.label]), n + "phi differs at " + a.label);
      for (const auto& b : sa)
        o.require(sym.atom_leq(a, b) == art.atom_leq(atom_map[a.label], atom_map[b.label]), n + "atom order differs");
    }
    for (const auto& r : sm) {
      o.require(atom_map[sym.psi(r).label] == art.psi(mol_map[r.label]), n + "psi differs at " + r.label);
      for (const auto& s : sm)
        o.require(sym.molecule_leq(r, s) == art.molecule_leq(mol_map[r.label], mol_map[s.label]),
                  n + "molecule order differs");
    }
    o.require(sym.atomic_flags() == art.atomic_flags(), n + "flags differ");
    o.require(sym.is_semiprime() == art.is_semiprime(), n + "semiprimeness differs");
    o.require(principal_ideal(f, sym.nilradical_generator(), mod) == prime_radical(TwoSidedIdeal<Zp>::zero(alg)).space(),
              n + "nilradical differs");
  }
  o.detail = std::to_string(kRandomModuli) + " random moduli over F2 and F3 (seed " + std::to_string(kSeed) + ")";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 correspondence", criterion_correspondence},
      {"2 reduced part routes", criterion_reduced_part},
      {"3 atomic and molecular flags", criterion_flags},
      {"4 oracle equivalence", criterion_oracle},
      {"5 injective envelopes", criterion_envelopes},
      {"6 goldie", criterion_goldie},
      {"7 classification counts", criterion_classification},
      {"8 graded counterexample", criterion_graded},
      {"9 cross representation", criterion_cross_representation},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s [%s] %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), seconds_since(t0));
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
