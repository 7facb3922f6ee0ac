#include <algorithm>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "spectra/ideal.hpp"

using namespace spectra;
using namespace testing;

namespace {

template <class S>
Index label(const FiniteDimAlgebra<S>& a, const std::string& l) {
  const auto& ls = a.labels();
  const auto it = std::find(ls.begin(), ls.end(), l);
  REQUIRE(it != ls.end());
  return static_cast<Index>(it - ls.begin());
}

// Determinant over F_p by permutation expansion.
Zp brute_det(const Matrix<Zp>& m, const PrimeField& f) {
  const Index n = m.rows();
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  Zp total = f.zero();
  do {
    Zp term = f.one();
    int inversions = 0;
    for (Index i = 0; i < n; ++i) {
      term *= m(i, perm[static_cast<std::size_t>(i)]);
      for (Index j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest k with a nonzero k x k minor.
Index rank_by_minors(const Matrix<Zp>& m, const PrimeField& f) {
  const Index r = m.rows(), c = m.cols();
  for (Index k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rs(static_cast<std::size_t>(r), false), cs(static_cast<std::size_t>(c), false);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        Matrix<Zp> sub = zeros(f, k, k);
        Index ii = 0;
        for (Index i = 0; i < r; ++i) {
          if (!rs[static_cast<std::size_t>(i)]) continue;
          Index jj = 0;
          for (Index j = 0; j < c; ++j)
            if (cs[static_cast<std::size_t>(j)]) sub(ii, jj++) = m(i, j);
          ++ii;
        }
        if (!brute_det(sub, f).is_zero()) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

bool table_associative(const std::vector<Matrix<Zp>>& t) {
  const Index n = static_cast<Index>(t.size());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index out = 0; out < n; ++out) {
          Zp lhs = Zp(0, t[0](0, 0).modulus()), rhs = lhs;
          for (Index m = 0; m < n; ++m) {
            lhs += t[static_cast<std::size_t>(i)](j, m) * t[static_cast<std::size_t>(m)](k, out);
            rhs += t[static_cast<std::size_t>(j)](k, m) * t[static_cast<std::size_t>(i)](m, out);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

bool is_nilpotent(const TwoSidedIdeal<Zp>& i) {
  return i.is_zero() || ideal_power(i, static_cast<int>(i.parent()->dim()) + 1).is_zero();
}

}  // namespace

TEST_SUITE("exact-linear") {
  TEST_CASE("rref examples") {
    const auto id = identity(F3, 3);
    const auto r = rref<Zp>(id);
    CHECK(r.form == id);
    CHECK(r.pivots == std::vector<Index>{0, 1, 2});
    CHECK(r.rank == 3);

    const auto z = rref<Zp>(zeros(F2, 2, 4));
    CHECK(is_zero_matrix(z.form));
    CHECK(z.pivots.empty());
    CHECK(z.rank == 0);

    const auto q = rref<Rational>(mat(QQ, {{1, 2}, {2, 4}}));
    CHECK(q.form == mat(QQ, {{1, 2}, {0, 0}}));
    CHECK(q.rank == 1);
  }

  TEST_CASE("rref over Q normalizes pivots and clears columns") {
    const auto r = rref<Rational>(mat(QQ, {{2, 4, 1}, {1, 3, 0}}));
    CHECK(r.rank == 2);
    Matrix<Rational> expect = mat(QQ, {{1, 0, 0}, {0, 1, 0}});
    expect(0, 2) = Rational(3, 2);
    expect(1, 2) = Rational(-1, 2);
    CHECK(r.form == expect);
    // Row space is preserved: each input row is a combination of the rref rows.
    const auto s = Subspace<Rational>::span(r.form, 3);
    CHECK(s.contains(RowVector<Rational>(mat(QQ, {{2, 4, 1}}).row(0))));
    CHECK(s.contains(RowVector<Rational>(mat(QQ, {{1, 3, 0}}).row(0))));
    CHECK(r.form(0, 0) == Rational(1));
    CHECK(r.form(1, 0) == Rational(0));
    CHECK(r.form(0, 1) == Rational(0));
  }

  TEST_CASE("subspace operations") {
    const auto a = Subspace<Zp>::span(mat(F2, {{1, 1, 0}}), 3);
    CHECK(a + a == a);
    CHECK(a.intersect(a) == a);

    const auto l1 = Subspace<Zp>::span(mat(F2, {{1, 0}}), 2);
    const auto l2 = Subspace<Zp>::span(mat(F2, {{1, 1}}), 2);
    CHECK((l1 + l2).is_whole());
    CHECK(l1.intersect(l2).is_zero());

    const auto xy = Subspace<Rational>::span(mat(QQ, {{1, 0, 0}, {0, 1, 0}}), 3);
    const auto yz = Subspace<Rational>::span(mat(QQ, {{0, 1, 0}, {0, 0, 1}}), 3);
    const auto y = xy.intersect(yz);
    CHECK(y == Subspace<Rational>::span(mat(QQ, {{0, 1, 0}}), 3));
    CHECK(xy.dim() + yz.dim() == (xy + yz).dim() + y.dim());
  }

  TEST_CASE("spin examples") {
    const std::vector<Matrix<Zp>> cycle{mat(F2, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})};
    CHECK(spin<Zp>(Matrix<Zp>(0, 3), cycle, 3).is_zero());
    CHECK(spin<Zp>(mat(F2, {{1, 0, 0}}), cycle, 3).is_whole());
    // Row-vector action: e1 * J is row 0 of J.
    const std::vector<Matrix<Zp>> lower{mat(F2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})};
    CHECK(spin<Zp>(mat(F2, {{1, 0, 0}}), lower, 3) == Subspace<Zp>::span(mat(F2, {{1, 0, 0}}), 3));
    const std::vector<Matrix<Zp>> upper{mat(F2, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})};
    CHECK(spin<Zp>(mat(F2, {{1, 0, 0}}), upper, 3).is_whole());
  }

  TEST_CASE("rank agrees with minor expansion on random F2 matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
      const Index r = 1 + static_cast<Index>(rng() % 4), c = 1 + static_cast<Index>(rng() % 4);
      const auto m = random_matrix(F2, r, c, rng);
      CHECK(rank<Zp>(m) == rank_by_minors(m, F2));
    }
  }

  TEST_CASE("spin is the least invariant subspace containing the seed") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
      const Index n = 1 + static_cast<Index>(rng() % 4);
      std::vector<Matrix<Zp>> ops;
      const int k = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < k; ++i) ops.push_back(random_matrix(F2, n, n, rng));
      const auto seed = random_matrix(F2, 1, n, rng);
      const auto s = spin(seed, ops, n);
      CHECK(s.contains(RowVector<Zp>(seed.row(0))));
      CHECK(is_invariant(s, ops));
      for (const auto& u : enumerate_subspaces(F2, n))
        if (u.contains(RowVector<Zp>(seed.row(0))) && is_invariant(u, ops)) CHECK(u.contains(s));
    }
  }

  TEST_CASE("subspace equality matches canonical serialization") {
    const auto all = enumerate_subspaces(F2, 3);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
      const auto& a = all[rng() % all.size()];
      // Same subspace from a scrambled spanning set.
      Matrix<Zp> g = a.basis();
      if (g.rows() > 0) g = random_matrix(F2, g.rows() + 1, g.rows(), rng) * g;
      const auto b = Subspace<Zp>::span(g, 3);
      CHECK((a == b) == (a.key() == b.key()));
      const auto& c = all[rng() % all.size()];
      CHECK((a == c) == (a.key() == c.key()));
    }
  }
}

TEST_SUITE("algebra-core") {
  TEST_CASE("builders") {
    BoundQuiver a2;
    a2.vertices = 2;
    a2.arrows = {{0, 1, "a"}};
    const auto q = bound_quiver_algebra(F2, a2);
    CHECK(q.dim() == 3);
    CHECK(q.labels() == std::vector<std::string>{"e1", "e2", "a"});

    const auto m2 = matrix_algebra(F3, 2);
    CHECK(m2.dim() == 4);
    CHECK(m2.labels() == std::vector<std::string>{"e11", "e12", "e21", "e22"});

    const auto cyc = corpus_algebra("cycle2_f2");
    CHECK(cyc->dim() == 4);
    CHECK(cyc->labels() == std::vector<std::string>{"e1", "e2", "a", "b"});
  }

  TEST_CASE("bound quiver rejects an infinite path algebra") {
    BoundQuiver loop;
    loop.vertices = 1;
    loop.arrows = {{0, 0, "x"}};
    loop.nilpotency_bound = 5;
    CHECK_THROWS_AS(bound_quiver_algebra(F2, loop), InvalidInput);
  }

  TEST_CASE("opposite") {
    const auto fx2 = truncated_polynomial(F2, 2);
    CHECK(opposite(fx2) == fx2);

    // T2 opposite is isomorphic to the lower triangular matrices.
    const auto op = opposite(upper_triangular(F2, 2));
    const auto lower = algebra_from_matrices(
        F2, {mat(F2, {{1, 0}, {0, 0}}), mat(F2, {{0, 0}, {1, 0}}), mat(F2, {{0, 0}, {0, 1}})}, {"f11", "f21", "f22"});
    bool found = false;
    for (std::uint64_t code = 0; code < 512 && !found; ++code) {
      Matrix<Zp> phi = zeros(F2, 3, 3);
      for (int k = 0; k < 9; ++k) phi(k / 3, k % 3) = F2.from_int((code >> k) & 1);
      if (rank<Zp>(phi) != 3) continue;
      bool hom = true;
      for (Index i = 0; i < 3 && hom; ++i)
        for (Index j = 0; j < 3 && hom; ++j) {
          const RowVector<Zp> lhs = op.mul(op.basis_element(i), op.basis_element(j)) * phi;
          const RowVector<Zp> rhs = lower.mul(RowVector<Zp>(phi.row(i)), RowVector<Zp>(phi.row(j)));
          hom = lhs == rhs;
        }
      found = hom;
    }
    CHECK(found);

    for (const auto& e : corpus(0))
      if (e.algebra->dim() == 4) CHECK(opposite(opposite(*e.algebra)) == *e.algebra);
  }

  TEST_CASE("quotient algebra") {
    const auto fx2 = share(truncated_polynomial(F2, 2));
    const auto x = ideal_from_generators(fx2, {fx2->basis_element(label(*fx2, "x"))});
    const auto q = quotient_algebra(*fx2, x.space());
    CHECK(q.algebra.dim() == 1);
    CHECK(q.algebra.mul(q.algebra.unit(), q.algebra.unit()) == q.algebra.unit());

    const auto zero = quotient_algebra(*fx2, Subspace<Zp>(2));
    CHECK(zero.algebra == *fx2);

    const auto t = t2(F2);
    const auto qt = quotient_algebra(*t, jacobson_radical_space(*t));
    CHECK(qt.algebra.dim() == 2);
    CHECK(qt.algebra.is_commutative());
    CHECK(jacobson_radical_space(qt.algebra).is_zero());
    CHECK(central_blocks(qt.algebra).size() == 2);
  }

  TEST_CASE("jacobson radical examples") {
    CHECK(jacobson_radical_space(matrix_algebra(F3, 2)).is_zero());
    const auto t = upper_triangular(F2, 2);
    const auto j = jacobson_radical_space(t);
    CHECK(j.dim() == 1);
    CHECK(j.contains(t.basis_element(label(t, "e12"))));
    CHECK(jacobson_radical_space(truncated_polynomial(F2, 4)).dim() == 3);
  }

  TEST_CASE("wedderburn blocks examples") {
    const auto p = wedderburn_blocks(product_of_copies(F2, 2));
    REQUIRE(p.size() == 2);
    CHECK(p[0].first.dim() == 1);
    CHECK(p[1].first.dim() == 1);
    const auto m = wedderburn_blocks(matrix_algebra(F3, 2));
    REQUIRE(m.size() == 1);
    CHECK(m[0].first.dim() == 4);

    const auto c2 = cyclic_group_algebra(F3, 2);
    const auto blocks = wedderburn_blocks(c2);
    REQUIRE(blocks.size() == 2);
    // Idempotents (1 + g)/2 = 2 + 2g and (1 - g)/2 = 2 + g over F3.
    std::vector<RowVector<Zp>> ids{blocks[0].second.idempotent, blocks[1].second.idempotent};
    CHECK(std::count(ids.begin(), ids.end(), vec(F3, {2, 2})) == 1);
    CHECK(std::count(ids.begin(), ids.end(), vec(F3, {2, 1})) == 1);
    CHECK_THROWS_AS(wedderburn_blocks(upper_triangular(F2, 2)), PreconditionError);
  }

  TEST_CASE("validation rejects broken associativity") {
    std::mt19937_64 rng(21);
    int rejected = 0;
    for (const auto& e : corpus(0)) {
      if (e.algebra->dim() > 5) continue;
      const auto& f = e.algebra->field();
      for (int t = 0; t < 4; ++t) {
        auto table = e.algebra->left_ops();
        const Index n = e.algebra->dim();
        const auto i = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
        const Index j = static_cast<Index>(rng() % static_cast<std::uint64_t>(n));
        const Index k = static_cast<Index>(rng() % static_cast<std::uint64_t>(n));
        table[i](j, k) += f.one();
        if (table_associative(table)) continue;
        ++rejected;
        CHECK_THROWS_AS(FiniteDimAlgebra<Zp>(f, table, e.algebra->labels()), InvalidInput);
      }
    }
    CHECK(rejected > 20);
  }

  TEST_CASE("jacobson radical is the largest nilpotent ideal (oracle)") {
    for (const auto& e : small_f2_corpus()) {
      Subspace<Zp> largest(e.algebra->dim());
      for (const auto& i : enumerate_two_sided_ideals(e.algebra))
        if (is_nilpotent(i)) largest = largest + i.space();
      CHECK_MESSAGE(jacobson_radical_space(*e.algebra) == largest, e.name);
    }
  }

  TEST_CASE("A/J is semisimple and its blocks are simple") {
    for (const auto& e : corpus(0)) {
      const auto j = jacobson_radical_space(*e.algebra);
      const auto q = quotient_algebra(*e.algebra, j).algebra;
      CHECK_MESSAGE(jacobson_radical_space(q).is_zero(), e.name);
      Index total = 0;
      for (const auto& [blk, b] : wedderburn_blocks(q)) {
        total += blk.dim();
        CHECK_MESSAGE(enumerate_two_sided_ideals(share(blk)).size() == 2, e.name);
      }
      CHECK_MESSAGE(total == q.dim(), e.name);
    }
  }
}

TEST_SUITE("ideal-theory") {
  TEST_CASE("ideal generation") {
    const auto t = t2(F2);
    CHECK(ideal_from_generators(t, {t->unit()}).is_whole());
    CHECK(ideal_from_generators(t, {}).is_zero());
    const auto e12 = t->basis_element(label(*t, "e12"));
    const auto i = ideal_from_generators(t, {e12});
    CHECK(i.space() == Subspace<Zp>::span(std::vector<RowVector<Zp>>{e12}, 3));
  }

  TEST_CASE("ideal products") {
    const auto f4 = share(truncated_polynomial(F2, 4));
    const auto x = ideal_from_generators(f4, {f4->basis_element(1)});
    const auto x2 = ideal_from_generators(f4, {f4->basis_element(2)});
    CHECK(ideal_product(x, x) == x2);
    CHECK(ideal_product(x, TwoSidedIdeal<Zp>::zero(f4)).is_zero());
    const auto t = t2(F2);
    const auto j = jacobson_radical(t);
    CHECK(ideal_product(j, j).is_zero());
  }

  TEST_CASE("is_prime examples") {
    const auto m2 = share(matrix_algebra(F2, 2));
    CHECK(is_prime(TwoSidedIdeal<Zp>::zero(m2)));
    const auto fx2 = share(truncated_polynomial(F2, 2));
    CHECK(is_prime(ideal_from_generators(fx2, {fx2->basis_element(1)})));
    CHECK_FALSE(is_prime(TwoSidedIdeal<Zp>::zero(fx2)));
    const auto p = share(product_of_copies(F2, 2));
    CHECK(is_prime(ideal_from_generators(p, {p->basis_element(1)})));
    CHECK_THROWS_AS(is_prime(TwoSidedIdeal<Zp>::whole(p)), PreconditionError);
  }

  TEST_CASE("minimal primes") {
    CHECK(minimal_primes(share(truncated_polynomial(F2, 2))).size() == 1);
    const auto t = t2(F2);
    const auto ps = minimal_primes(t);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].ideal.dim() == 2);
    CHECK(ps[1].ideal.dim() == 2);
    CHECK(ps[0].ideal != ps[1].ideal);
    const auto m = minimal_primes(share(matrix_algebra(F3, 2)));
    REQUIRE(m.size() == 1);
    CHECK(m[0].ideal.is_zero());
  }

  TEST_CASE("prime radical") {
    const auto t = t2(F2);
    CHECK(prime_radical(TwoSidedIdeal<Zp>::zero(t)) == jacobson_radical(t));
    CHECK(prime_radical(TwoSidedIdeal<Zp>::zero(share(product_of_copies(F3, 3)))).is_zero());
    const auto f4 = share(truncated_polynomial(F2, 4));
    const auto x = ideal_from_generators(f4, {f4->basis_element(1)});
    const auto x2 = ideal_from_generators(f4, {f4->basis_element(2)});
    CHECK(prime_radical(x2) == x);
  }

  TEST_CASE("semiprimeness") {
    CHECK(is_semiprime(share(product_of_copies(F2, 2))));
    CHECK_FALSE(is_semiprime(share(truncated_polynomial(F2, 2))));
    CHECK(is_semiprime(share(matrix_algebra(F3, 2))));
  }

  TEST_CASE("annihilators") {
    const auto t = t2(F2);
    CHECK(annihilator(RightModule<Zp>::regular(t)).is_zero());
    const auto simples = simple_modules(t);
    const auto primes = minimal_primes(t, simples);
    for (std::size_t i = 0; i < simples.size(); ++i) {
      const auto ann = annihilator(simples[i].representative);
      CHECK(ann == primes[i].ideal);
      CHECK(is_prime(ann));
    }
    CHECK(annihilator(RightModule<Zp>::zero(t)).is_whole());
  }

  TEST_CASE("is_prime agrees with the ideal-lattice definition") {
    for (const auto& e : small_f2_corpus()) {
      const auto ideals = enumerate_two_sided_ideals(e.algebra);
      for (const auto& i : ideals)
        if (!i.is_whole()) CHECK_MESSAGE(is_prime(i) == oracle::is_prime(i, ideals), e.name);
    }
  }

  TEST_CASE("prime radical of zero equals the jacobson radical") {
    for (const auto& e : corpus(0)) {
      const auto r = prime_radical(TwoSidedIdeal<Zp>::zero(e.algebra));
      CHECK_MESSAGE(r == jacobson_radical(e.algebra), e.name);
      const auto ps = minimal_primes(e.algebra);
      TwoSidedIdeal<Zp> meet = TwoSidedIdeal<Zp>::whole(e.algebra);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        meet = ideal_intersection(meet, ps[i].ideal);
        for (std::size_t j = 0; j < ps.size(); ++j)
          if (i != j) CHECK_FALSE(ps[i].ideal.contains(ps[j].ideal));
      }
      CHECK(meet == r);
    }
  }

  TEST_CASE("ideal product is associative and monotone") {
    for (const auto& e : small_f2_corpus(3)) {
      const auto ideals = enumerate_two_sided_ideals(e.algebra);
      for (const auto& i : ideals)
        for (const auto& j : ideals) {
          const auto ij = ideal_product(i, j);
          for (const auto& k : ideals) {
            CHECK(ideal_product(ij, k) == ideal_product(i, ideal_product(j, k)));
            if (k.contains(j)) {
              CHECK(ideal_product(i, k).contains(ij));
              CHECK(ideal_product(k, i).contains(ideal_product(j, i)));
            }
          }
        }
    }
  }
}

TEST_SUITE("oracle-harness") {
  TEST_CASE("subspace enumeration counts") {
    CHECK(enumerate_subspaces(F2, 2).size() == 5);
    CHECK(enumerate_subspaces(F2, 1).size() == 2);
    CHECK(enumerate_subspaces(F2, 3).size() == 16);
    CHECK(enumerate_subspaces(F3, 2).size() == 6);
    for (Index n = 0; n <= 4; ++n) CHECK(enumerate_subspaces(F2, n).size() == subspace_count(n, 2));
  }

  TEST_CASE("lattice enumeration") {
    CHECK(enumerate_two_sided_ideals(share(truncated_polynomial(F2, 2))).size() == 3);
    CHECK(enumerate_two_sided_ideals(share(matrix_algebra(F2, 2))).size() == 2);
    const auto k = share(product_of_copies(F2, 1));
    const auto s = RightModule<Zp>::regular(k);
    CHECK(enumerate_submodules_brute(direct_sum(s, s)).size() == 5);
  }

  TEST_CASE("definitional predicates") {
    const auto p = share(product_of_copies(F2, 2));
    const auto ideals = enumerate_two_sided_ideals(p);
    CHECK_FALSE(oracle::is_prime(TwoSidedIdeal<Zp>::zero(p), ideals));
    const auto t = t2(F2);
    for (const auto& s : simple_modules(t)) CHECK(oracle::is_monoform(s.representative));
    CHECK_FALSE(oracle::is_compressible(RightModule<Zp>::regular(share(truncated_polynomial(F2, 2)))));
  }

  TEST_CASE("corpus") {
    const auto c = corpus(0);
    CHECK(c.size() >= 40);
    CHECK(std::any_of(c.begin(), c.end(), [](const CorpusEntry& e) { return e.name == "cycle2_f2"; }));
    for (const auto& e : c) CHECK(e.algebra->dim() <= 6);
    const auto d = corpus(0);
    const auto other = corpus(99);
    REQUIRE(d.size() == c.size());
    REQUIRE(other.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i].name == d[i].name);
    std::vector<std::string> a, b;
    for (const auto& e : c) a.push_back(e.name);
    for (const auto& e : other) b.push_back(e.name);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK_THROWS_AS(corpus_algebra("no such algebra"), PreconditionError);
  }

  TEST_CASE("budgets fail loudly") {
    EnumerationBudget tight;
    tight.max_ambient_dim = 3;
    CHECK_THROWS_AS(enumerate_subspaces(F2, 4, tight), BudgetExceeded);
    EnumerationBudget count;
    count.max_count = 10;
    CHECK_THROWS_AS(enumerate_subspaces(F2, 3, count), BudgetExceeded);
    EnumerationBudget field;
    field.max_field_size = 2;
    CHECK_THROWS_AS(enumerate_subspaces(F3, 1, field), BudgetExceeded);

    ::setenv("SPECTRA_BUDGET", "17", 1);
    CHECK(EnumerationBudget::from_env().max_count == 17);
    ::setenv("SPECTRA_BUDGET", "many", 1);
    CHECK_THROWS_AS(EnumerationBudget::from_env(), InvalidInput);
    ::unsetenv("SPECTRA_BUDGET");
    CHECK(EnumerationBudget::from_env().max_count == EnumerationBudget{}.max_count);
  }
}
