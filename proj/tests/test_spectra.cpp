#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "spectra/artinian.hpp"
#include "spectra/closed.hpp"
#include "spectra/commutative.hpp"
#include "spectra/report.hpp"
#include "spectra/subcategories.hpp"

using namespace spectra;
using namespace testing;

namespace {

std::vector<std::string> strs(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

/// Regular module, simples, envelopes, cyclic quotients by right ideals.
std::vector<RightModule<Zp>> some_modules(const ArtinianBackend<Zp>& b) {
  const auto& a = b.algebra();
  const auto reg = RightModule<Zp>::regular(a);
  std::vector<RightModule<Zp>> out{reg};
  for (const auto& s : b.simples()) {
    out.push_back(s.representative);
    out.push_back(b.envelope(s.representative).module);
  }
  for (std::size_t i = 0; i < b.primes().size(); ++i) out.push_back(b.quotient_regular_module(b.molecule(i)));
  return out;
}

bool subset(const std::vector<Atom>& xs, const std::vector<Atom>& ys) {
  return std::all_of(xs.begin(), xs.end(), [&](const Atom& x) { return contains(ys, x); });
}

std::vector<Atom> set_union(std::vector<Atom> xs, const std::vector<Atom>& ys) {
  for (const auto& y : ys)
    if (!contains(xs, y)) xs.push_back(y);
  return xs;
}

bool same_atoms(const std::vector<Atom>& xs, const std::vector<Atom>& ys) { return subset(xs, ys) && subset(ys, xs); }

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("upper triangular atoms and molecules") {
    const ArtinianBackend<Zp> b(t2(F2), "T2");
    CHECK(labels(b.atoms()) == strs({"S1", "S2"}));
    CHECK(labels(b.molecules()) == strs({"P1", "P2"}));
    CHECK_FALSE(b.atom_leq(b.atom(0), b.atom(1)));
    CHECK_FALSE(b.atom_leq(b.atom(1), b.atom(0)));
    for (const auto& x : b.atoms()) CHECK(b.psi(b.phi(x)) == x);

    const auto reg = RightModule<Zp>::regular(b.algebra());
    CHECK(labels(b.ass_atoms(reg)) == strs({"S2"}));
    CHECK(labels(b.asupp(reg)) == strs({"S1", "S2"}));
    CHECK(labels(b.mass(reg)) == strs({"P2"}));
    CHECK(labels(b.msupp(reg)) == strs({"P1", "P2"}));

    const auto v = verify_correspondence(b);
    CHECK(v.passed());
    CHECK(v.assertions.size() == 14);
    CHECK(v.report.amin.size() == 2);
    CHECK(v.report.mmin.size() == 2);
  }

  TEST_CASE("integer window") {
    const IntegerBackend z(6);
    CHECK(labels(z.atoms()) == strs({"generic", "(2)", "(3)", "(5)"}));
    CHECK(labels(minimal_atoms(z)) == strs({"generic"}));
    CHECK(labels(minimal_molecules(z)) == strs({"(0)"}));
    CHECK(z.phi(Atom{"generic"}) == Molecule{"(0)"});
    CHECK(z.psi(Molecule{"(3)"}) == Atom{"(3)"});
    CHECK(verify_correspondence(z).passed());
  }

  TEST_CASE("graded window") {
    const GradedBackend g(-1, 1);
    CHECK(g.atoms().size() == 4);
    CHECK(g.molecules().size() == 3);
    for (const auto& x : g.atoms())
      for (const auto& y : g.atoms()) CHECK(g.atom_leq(x, y) == (x == y));
    CHECK(minimal_atoms(g).size() == 4);
    CHECK_THROWS_AS(g.phi(Atom{"generic"}), HypothesisError);
    CHECK(g.phi(Atom{"S(0)"}) == Molecule{"S(0)~"});
    const auto v = verify_correspondence(g);
    CHECK(v.passed());
    CHECK(v.assertions.size() == 13);
  }

  TEST_CASE("phi of ass is mass and phi of asupp lies in msupp") {
    for (const auto& e : small_f2_corpus(4)) {
      CAPTURE(e.name);
      const ArtinianBackend<Zp> b(e.algebra, e.name);
      for (const auto& m : some_modules(b)) {
        std::vector<Molecule> image;
        for (const auto& x : b.ass_atoms(m))
          if (!contains(image, b.phi(x))) image.push_back(b.phi(x));
        const auto mass = b.mass(m);
        CHECK(image.size() == mass.size());
        for (const auto& r : image) CHECK(contains(mass, r));
        const auto msupp = b.msupp(m);
        for (const auto& x : b.asupp(m)) CHECK(contains(msupp, b.phi(x)));
        CHECK(is_upward_closed(b, msupp));
      }
    }
  }

  TEST_CASE("envelopes of simples and of prime quotients") {
    for (const auto& e : small_f2_corpus(4)) {
      CAPTURE(e.name);
      const ArtinianBackend<Zp> b(e.algebra, e.name);
      for (std::size_t i = 0; i < b.simples().size(); ++i) {
        const auto env = b.envelope(b.simples()[i].representative).module;
        const auto mass = b.mass(env);
        REQUIRE(mass.size() == 1);
        CHECK(mass[0] == b.phi(b.atom(i)));
      }
      for (std::size_t r = 0; r < b.primes().size(); ++r) {
        const auto q = b.quotient_regular_module(b.molecule(r));
        const auto env = b.envelope(q).module;
        const auto s = b.psi(b.molecule(r));
        const auto one = b.envelope(b.simples()[b.atom_index(s)].representative).module;
        const Index copies = socle(q).dim() / b.simples()[b.atom_index(s)].representative.dim();
        auto sum = one;
        for (Index k = 1; k < copies; ++k) sum = direct_sum(sum, one);
        CHECK(is_isomorphic(env, sum));
      }
    }
  }

  TEST_CASE("ass and asupp along short exact sequences") {
    for (const auto& e : small_f2_corpus(4)) {
      CAPTURE(e.name);
      const ArtinianBackend<Zp> b(e.algebra, e.name);
      for (const auto& m : some_modules(b)) {
        if (m.dim() > 4) continue;
        for (const auto& l : enumerate_submodules(m)) {
          const auto sub = restrict_to(m, l);
          const auto quo = quotient_module(m, l).module;
          const auto am = b.ass_atoms(m);
          CHECK(subset(b.ass_atoms(sub), am));
          CHECK(subset(am, set_union(b.ass_atoms(sub), b.ass_atoms(quo))));
          CHECK(same_atoms(b.asupp(m), set_union(b.asupp(sub), b.asupp(quo))));
        }
      }
    }
  }
}

TEST_SUITE("subcategories") {
  TEST_CASE("extension products and radicals") {
    const auto a = t2(F2);
    const ArtinianBackend<Zp> b(a, "T2");
    const ClosedSubcatDescriptor<Zp> c1(b.primes()[0].ideal), c2(b.primes()[1].ideal);
    CHECK(ext_product(c1, c2).ideal() == ideal_product(c2.ideal(), c1.ideal()));
    CHECK(c1.is_prime());
    CHECK(ClosedSubcatDescriptor<Zp>::whole(a).contains(RightModule<Zp>::regular(a)));
    CHECK_FALSE(c1.contains(RightModule<Zp>::regular(a)));
    CHECK(ClosedSubcatDescriptor<Zp>::zero(a).str() == "0");

    const auto u = share(truncated_polynomial(F2, 3));
    const auto whole = ClosedSubcatDescriptor<Zp>::whole(u);
    const auto rad = radical_of_closed(whole);
    CHECK(rad.radical.ideal() == jacobson_radical(u));
    CHECK(rad.exponent == 3);
    const ClosedSubcatDescriptor<Zp> sq(ideal_power(jacobson_radical(u), 2));
    CHECK(radical_of_closed(sq).exponent == 2);
    CHECK(ext_power(rad.radical, 3) == whole);
  }

  TEST_CASE("reduced part and artinianization") {
    const ArtinianBackend<Zp> t(t2(F2), "T2");
    const auto r = t.reduced_part();
    CHECK(r.atomic_ideal == r.molecular_ideal);
    CHECK_FALSE(r.is_whole_category);
    CHECK(t.artinianization().identity);

    const ArtinianBackend<Zp> f(share(product_of_copies(F2, 2)), "F2xF2");
    CHECK(f.reduced_part().is_whole_category);
  }

  TEST_CASE("classification counts") {
    const ArtinianBackend<Zp> f2(share(product_of_copies(F2, 2)), "F2xF2");
    const ArtinianBackend<Zp> field(share(product_of_copies(F2, 1)), "F2");
    const ArtinianBackend<Zp> t(t2(F2), "T2");
    CHECK(classify_localizing(f2).subcategories.size() == 4);
    CHECK(classify_localizing(field).subcategories.size() == 2);
    const auto ct = classify_localizing(t);
    CHECK(ct.subcategories.size() == 4);
    CHECK(ct.prime_count == 2);
    CHECK(classify_locally_closed_localizing(t).size() == 4);
    CHECK(classify_locally_closed_localizing(field).size() == 2);
    CHECK(classify_locally_closed_localizing(IntegerBackend(4)).size() == 5);
    CHECK_THROWS(classify_localizing(IntegerBackend(4)));
  }

  TEST_CASE("localizing supports are upward closed and prime ones come from atoms") {
    for (const auto& e : small_f2_corpus(4)) {
      CAPTURE(e.name);
      const ArtinianBackend<Zp> b(e.algebra, e.name);
      const auto c = classify_localizing(b);
      CHECK(c.subcategories.size() == count_antichains([&] {
              std::vector<std::vector<bool>> leq;
              for (const auto& x : b.atoms()) {
                leq.emplace_back();
                for (const auto& y : b.atoms()) leq.back().push_back(b.atom_leq(x, y));
              }
              return leq;
            }()));
      for (const auto& d : c.subcategories) CHECK(is_upward_closed(b, d.atom_support));
      CHECK(c.prime_count == b.atoms().size());
      for (const auto& x : b.atoms()) CHECK_FALSE(contains(prime_localizing(b, x).atom_support, x));
    }
  }

  TEST_CASE("closed subcategories: order reversal, radicals, decomposition") {
    for (const auto& e : small_f2_corpus(4)) {
      CAPTURE(e.name);
      const ArtinianBackend<Zp> b(e.algebra, e.name);
      const auto ideals = enumerate_two_sided_ideals(e.algebra);
      for (const auto& i : ideals) {
        const ClosedSubcatDescriptor<Zp> c(i);
        for (const auto& j : ideals) {
          const ClosedSubcatDescriptor<Zp> d(j);
          CHECK(c.subset_of(d) == i.space().contains(j.space()));
          CHECK(c.subset_of(ext_product(c, d)));
          CHECK(d.subset_of(ext_product(c, d)));
        }
        if (c.is_zero()) continue;
        auto meet = TwoSidedIdeal<Zp>::whole(e.algebra);
        for (const auto& p : b.primes())
          if (p.ideal.contains(i)) meet = ideal_intersection(meet, p.ideal);
        const auto rad = radical_of_closed(c);
        CHECK(rad.radical.ideal() == meet);
        CHECK(c.subset_of(ext_power(rad.radical, rad.exponent)));
        const auto seq = decompose_closed(b, c);
        CHECK_FALSE(seq.empty());
        for (auto k : seq) CHECK(ClosedSubcatDescriptor<Zp>(b.primes()[k].ideal).subset_of(c));
      }
    }
  }

  TEST_CASE("closed subcategories satisfy the descending chain condition") {
    for (const auto& e : small_f2_corpus(4)) {
      const auto j = jacobson_radical(e.algebra);
      ClosedSubcatDescriptor<Zp> c(j);
      int steps = 0;
      while (!(ext_product(c, ClosedSubcatDescriptor<Zp>(j)) == c)) {
        c = ext_product(c, ClosedSubcatDescriptor<Zp>(j));
        REQUIRE(++steps <= e.algebra->dim());
      }
      CHECK(c.ideal().space().is_zero());
    }
  }

  TEST_CASE("minimal nonzero closed subcategories are prime") {
    for (const auto& e : small_f2_corpus(4)) {
      CAPTURE(e.name);
      const auto ideals = enumerate_two_sided_ideals(e.algebra);
      for (const auto& i : ideals) {
        if (i.is_whole()) continue;
        bool maximal = true;
        for (const auto& j : ideals)
          if (!j.is_whole() && j.space().dim() > i.space().dim() && j.contains(i)) maximal = false;
        if (maximal) CHECK(oracle::is_prime(i, ideals));
      }
    }
  }

  TEST_CASE("radical closed lattice") {
    const ArtinianBackend<Zp> t(t2(F2), "T2");
    const auto cs = radical_closed_subcategories(t);
    REQUIRE(cs.size() == 4);
    CHECK(cs.front().ideal() == jacobson_radical(t.algebra()));
    CHECK(cs.back().is_zero());
    const auto dot = closed_lattice_dot(t);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 4);
    const ArtinianBackend<Zp> field(share(product_of_copies(F2, 1)), "F2");
    CHECK(radical_closed_subcategories(field).size() == 2);
    for (const auto& e : small_f2_corpus(4)) {
      const ArtinianBackend<Zp> b(e.algebra, e.name);
      for (const auto& c : radical_closed_subcategories(b))
        if (!c.is_zero()) CHECK(radical_of_closed(c).radical == c);
    }
  }

  TEST_CASE("module membership") {
    const ArtinianBackend<Zp> t(t2(F2), "T2");
    const LocalizingSubcatDescriptor only_s1{{Atom{"S1"}}, false, false};
    CHECK(in_localizing(t, only_s1, t.simples()[0].representative));
    CHECK_FALSE(in_localizing(t, only_s1, RightModule<Zp>::regular(t.algebra())));
    const LocallyClosedLocalizingDescriptor all{t.molecules()};
    CHECK(in_locally_closed(t, all, RightModule<Zp>::regular(t.algebra())));
  }
}

TEST_SUITE("commutative-backends") {
  TEST_CASE("factorization examples") {
    CHECK(factor_integer(12) == std::vector<std::pair<std::int64_t, int>>{{2, 2}, {3, 1}});
    CHECK(factor_integer(-7) == std::vector<std::pair<std::int64_t, int>>{{7, 1}});
    const auto f = factor(poly(F2, {0, 1, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].factor == poly(F2, {0, 1}));
    CHECK(f.factors[1].factor == poly(F2, {1, 1}));
    CHECK(is_irreducible(poly(F3, {1, 0, 1})));
    CHECK_FALSE(is_irreducible(poly(F2, {1, 0, 1})));
  }

  TEST_CASE("integers modulo n") {
    const IntModBackend z12(12);
    CHECK(labels(z12.atoms()) == strs({"(2)", "(3)"}));
    CHECK_FALSE(z12.is_semiprime());
    CHECK(z12.reduced_part().category == "Mod Z/6");
    CHECK(z12.artinianization().identity);
    CHECK(verify_correspondence(z12).passed());
    CHECK(IntModBackend(30).is_semiprime());
  }

  TEST_CASE("associated primes of Z/n") {
    const IntegerBackend z(31);
    for (std::int64_t n = 2; n <= 30; ++n) {
      CAPTURE(n);
      std::vector<std::int64_t> expect;
      for (std::int64_t p = 2; p <= n; ++p) {
        bool prime = true;
        for (std::int64_t d = 2; d * d <= p; ++d) prime = prime && p % d;
        if (prime && n % p == 0) expect.push_back(p);
      }
      CHECK(z.classical_ass(n) == expect);
      std::vector<std::string> want;
      for (auto p : expect) want.push_back("(" + std::to_string(p) + ")");
      CHECK(labels(z.ass_atoms_cyclic(n)) == want);
      CHECK(labels(IntModBackend(n).atoms()) == want);
    }
    CHECK(labels(z.ass_atoms_cyclic(0)) == strs({"generic"}));
  }

  TEST_CASE("integer order") {
    const IntegerBackend z(20);
    const Atom g{"generic"};
    for (const auto& x : z.atoms()) {
      CHECK(z.atom_leq(g, x));
      for (const auto& y : z.atoms())
        if (x != g && y != g) CHECK(z.atom_leq(x, y) == (x == y));
    }
    CHECK(z.molecules().size() == 9);
  }

  TEST_CASE("polynomial quotient F2[x]/(x^2 (x+1))") {
    const PolyQuotBackend<Zp> b(F2, poly(F2, {0, 0, 1, 1}));
    CHECK(labels(b.atoms()) == strs({"(x)", "(x + 1)"}));
    CHECK_FALSE(b.is_semiprime());
    CHECK(b.nilradical_generator() == poly(F2, {0, 1, 1}));
    CHECK(b.radical_from_factors() == b.nilradical_generator());
    CHECK_THROWS_AS(b.classical_quotient_ring(), HypothesisError);
    CHECK(verify_correspondence(b).passed());
  }

  TEST_CASE("polynomial window") {
    const PolyBackend<Zp> b(F2, 2);
    CHECK(labels(b.atoms()) == strs({"generic", "(x)", "(x + 1)", "(x^2 + x + 1)"}));
    CHECK(verify_correspondence(b).passed());
    const PolyBackend<Rational> q(QQ, 1);
    CHECK(q.atoms().size() == 4);
  }

  TEST_CASE("bridge to structure constants agrees") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 12; ++k) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(rng() % 4 + 1));
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % 3);
      c.push_back(1);
      const auto f = poly(F3, c);
      CAPTURE(f.str());
      const PolyQuotBackend<Zp> sym(F3, f);
      const ArtinianBackend<Zp> art(bridge_to_algebra(F3, f), sym.name());
      CHECK(sym.atoms().size() == art.atoms().size());
      CHECK(sym.is_semiprime() == art.is_semiprime());
      CHECK(sym.atomic_flags() == art.atomic_flags());
      CHECK(sym.molecular_flags() == art.molecular_flags());
    }
  }

  TEST_CASE("graded counterexample") {
    const GradedBackend g(-2, 2);
    CHECK(g.molecules().size() == 5);
    const GradedModuleDescriptor kx{{0}, {}};
    CHECK(labels(g.ass_atoms(kx)) == strs({"generic"}));
    CHECK(g.mass(kx).empty());
    CHECK_FALSE(g.is_prime_object(kx));
    CHECK_THROWS_AS(g.reduced_part(), HypothesisError);
    CHECK_THROWS_AS(g.artinianization(), HypothesisError);
    CHECK_FALSE(g.atomic_flags().reduced.has_value());

    const GradedBackend wide(-3, 3);
    const GradedModuleDescriptor s3{{}, {{1, 3}}};
    CHECK(wide.is_prime_object(s3));
    CHECK(labels(wide.mass(s3)) == strs({"S(3)~"}));
    CHECK(wide.in_closure_of_shift(s3, 3));
  }
}
