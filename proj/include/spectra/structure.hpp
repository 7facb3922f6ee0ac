#pragma once

// Structure theory of a finite-dimensional algebra: quotients, the Jacobson
// radical, the center and the block decomposition of a semisimple algebra.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spectra/algebra.hpp"

namespace spectra {

template <class S>
struct QuotientAlgebra {
  FiniteDimAlgebra<S> algebra;
  Matrix<S> projection;          ///< dim(A) x dim(A/I): v -> v * projection
  std::vector<Index> section;    ///< basis of A/I is the image of these basis elements of A
};

/// A / I for a two-sided ideal given by its subspace.  The basis of the
/// quotient is the image of the basis elements at the non-pivot columns of I.
template <class S>
QuotientAlgebra<S> quotient_algebra(const FiniteDimAlgebra<S>& a, const Subspace<S>& ideal) {
  if (ideal.ambient_dim() != a.dim()) throw PreconditionError("quotient_algebra: ideal from a different algebra");
  if (ideal.is_whole()) throw PreconditionError("quotient_algebra: quotient by the whole algebra is the zero ring");
  auto keep = ideal.free_columns();
  Matrix<S> proj = ideal.quotient_projection();
  const Index d = static_cast<Index>(keep.size());
  std::vector<Matrix<S>> table(static_cast<std::size_t>(d), zeros(a.field(), d, d));
  std::vector<std::string> labels;
  for (Index i = 0; i < d; ++i) {
    labels.push_back(a.labels()[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])]);
    for (Index j = 0; j < d; ++j)
      table[static_cast<std::size_t>(i)].row(j) =
          a.left_op(keep[static_cast<std::size_t>(i)]).row(keep[static_cast<std::size_t>(j)]) * proj;
  }
  RowVector<S> u = a.unit() * proj;
  return {FiniteDimAlgebra<S>(a.field(), std::move(table), std::move(labels), u), proj, keep};
}

namespace detail {

// Integer matrix arithmetic modulo m < 2^63 for the lifted trace forms.
using IntMat = std::vector<std::vector<std::uint64_t>>;

inline IntMat mul_mod(const IntMat& a, const IntMat& b, std::uint64_t m) {
  const std::size_t n = a.size();
  IntMat c(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a[i][k]) * b[k][j] + c[i][j]) % m);
    }
  return c;
}

inline std::uint64_t lifted_trace_power(const Matrix<Zp>& z, std::uint64_t e, std::uint64_t m) {
  const std::size_t n = static_cast<std::size_t>(z.rows());
  IntMat base(n, std::vector<std::uint64_t>(n)), acc(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    acc[i][i] = 1 % m;
    for (std::size_t j = 0; j < n; ++j)
      base[i][j] = static_cast<std::uint64_t>(z(static_cast<Index>(i), static_cast<Index>(j)).value()) % m;
  }
  while (e) {
    if (e & 1) acc = mul_mod(acc, base, m);
    e >>= 1;
    if (e) base = mul_mod(base, base, m);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + acc[i][i]) % m;
  return t;
}

}  // namespace detail

/// Radical of the matrix algebra spanned by `mats` (closed under products),
/// as a subspace of coefficient vectors with respect to `mats`.
///
/// Characteristic 0 (or p larger than the matrix size): kernel of the trace
/// form.  Small characteristic p: the sequence of lifted trace forms
/// g_i(z) = (Tr(lift(z)^{p^i}) mod p^{i+1}) / p^i, i = 0..floor(log_p n),
/// each cutting down the previous ideal.
template <class S>
Subspace<S> matrix_algebra_radical(const Field<S>& f, const std::vector<Matrix<S>>& mats) {
  const Index d = static_cast<Index>(mats.size());
  if (d == 0) return Subspace<S>(0);
  const Index n = mats[0].rows();
  Subspace<S> current = Subspace<S>::whole(f, d);
  int levels = 0;
  std::uint64_t p = f.characteristic();
  if (p != 0)
    for (std::uint64_t pk = p; pk <= static_cast<std::uint64_t>(n); pk *= p) ++levels;
  std::uint64_t ppow = 1;  // p^i
  for (int i = 0; i <= levels && !current.is_zero(); ++i) {
    const Index r = current.dim();
    Matrix<S> g = zeros(f, r, d);
    for (Index k = 0; k < r; ++k) {
      Matrix<S> u = zeros(f, n, n);
      for (Index j = 0; j < d; ++j)
        if (!is_zero(current.basis()(k, j))) u += current.basis()(k, j) * mats[static_cast<std::size_t>(j)];
      for (Index y = 0; y < d; ++y) {
        Matrix<S> z = u * mats[static_cast<std::size_t>(y)];
        if constexpr (std::is_same_v<S, Zp>) {
          if (i == 0) {
            g(k, y) = z.trace();
          } else {
            const std::uint64_t mod = ppow * p;
            const std::uint64_t t = detail::lifted_trace_power(z, ppow, mod);
            if (t % ppow != 0) throw InvariantViolation("radical: lifted trace not divisible by p^i");
            g(k, y) = f.from_int(static_cast<std::int64_t>(t / ppow));
          }
        } else {
          g(k, y) = z.trace();
        }
      }
    }
    Matrix<S> ker = left_kernel(g);
    current = Subspace<S>::span(Matrix<S>(ker * current.basis()), d);
    ppow *= (p ? p : 1);
  }
  return current;
}

/// Jacobson radical of A (as a subspace of A), computed in the right
/// regular representation.
template <class S>
Subspace<S> jacobson_radical_space(const FiniteDimAlgebra<S>& a) {
  return matrix_algebra_radical(a.field(), a.right_ops());
}

/// Center {z : z b = b z for all b}.
template <class S>
Subspace<S> center(const FiniteDimAlgebra<S>& a) {
  const Index n = a.dim();
  Matrix<S> sys(n, n * n);
  for (Index i = 0; i < n; ++i) sys.middleCols(i * n, n) = a.right_op(i) - a.left_op(i);
  return Subspace<S>::span(left_kernel(sys), n);
}

/// Minimal polynomial of z inside the algebra eA (powers start at e).
template <class S>
Poly<S> element_minimal_polynomial(const FiniteDimAlgebra<S>& a, const RowVector<S>& z, const RowVector<S>& e) {
  std::vector<RowVector<S>> powers{e};
  for (;;) {
    RowVector<S> next = a.mul(powers.back(), z);
    Matrix<S> m = rows_to_matrix(powers, a.dim());
    if (auto c = solve_left(m, next)) {
      std::vector<S> coeffs;
      for (Index i = 0; i < c->size(); ++i) coeffs.push_back(-(*c)(i));
      coeffs.push_back(a.field().one());
      return Poly<S>(coeffs);
    }
    powers.push_back(next);
  }
}

/// Evaluates a polynomial at z in eA.
template <class S>
RowVector<S> evaluate_in(const FiniteDimAlgebra<S>& a, const Poly<S>& p, const RowVector<S>& z, const RowVector<S>& e) {
  RowVector<S> acc = a.zero();
  for (int k = p.degree(); k >= 0; --k) acc = a.mul(acc, z) + a.field().bind(p.coeff(static_cast<std::size_t>(k))) * e;
  return acc;
}

/// One simple block of a semisimple algebra.
template <class S>
struct Block {
  RowVector<S> idempotent;   ///< central primitive idempotent
  Subspace<S> space;         ///< eA
  Index center_degree = 1;   ///< dim of the center of eA over the base field
  bool resolved = true;      ///< false: could not certify that eA is simple (Q only)
};

namespace detail {

template <class S>
Subspace<S> block_center(const FiniteDimAlgebra<S>& a, const Subspace<S>& z, const RowVector<S>& e) {
  std::vector<RowVector<S>> v;
  for (Index i = 0; i < z.dim(); ++i) v.push_back(a.mul(e, z.vector(i)));
  return Subspace<S>::span(v, a.dim());
}

}  // namespace detail

/// Splits the unit of a semisimple algebra into central primitive
/// idempotents by factoring minimal polynomials of central elements.
/// Over F_p the number of blocks is certified by the Frobenius-fixed
/// subalgebra of the center.  Blocks are ordered by the first basis element
/// acting nonzero, ties broken by the canonical key of eA.
template <class S>
std::vector<Block<S>> central_blocks(const FiniteDimAlgebra<S>& a, std::uint64_t seed = 1) {
  const auto& f = a.field();
  const Subspace<S> z = center(a);
  Index target = -1;
  if constexpr (is_finite_scalar_v<S>) {
    // z -> z^p is linear on the commutative algebra Z(A); its fixed points
    // form the product of prime fields, one factor per block.
    Matrix<S> frob = zeros(f, z.dim(), z.dim());
    for (Index i = 0; i < z.dim(); ++i) {
      RowVector<S> zp = a.pow(z.vector(i), f.characteristic());
      frob.row(i) = z.coordinates(zp);
      frob(i, i) -= f.one();
    }
    target = left_kernel(frob).rows();
  }
  struct Work {
    RowVector<S> e;
    bool proven = false;
    bool resolved = true;
    Index degree = 1;
  };
  std::vector<Work> comps{{a.unit()}};
  std::mt19937_64 rng(seed);
  const int random_tries = 40;
  bool changed = true;
  while (changed) {
    changed = false;
    if (target >= 0 && static_cast<Index>(comps.size()) == target) {
      for (auto& c : comps)
        if (!c.proven) {
          c.proven = true;
          c.degree = detail::block_center(a, z, c.e).dim();
        }
      break;
    }
    for (std::size_t ci = 0; ci < comps.size() && !changed; ++ci) {
      if (comps[ci].proven) continue;
      const RowVector<S> e = comps[ci].e;
      Subspace<S> ze = detail::block_center(a, z, e);
      if (ze.dim() == 1) {
        comps[ci].proven = true;
        continue;
      }
      for (int t = 0; t < ze.dim() + random_tries && !changed; ++t) {
        RowVector<S> cand;
        if (t < ze.dim()) {
          cand = ze.vector(t);
        } else {
          cand = a.zero();
          for (Index i = 0; i < ze.dim(); ++i) cand += f.random(rng) * ze.vector(i);
        }
        Poly<S> m = element_minimal_polynomial(a, cand, e);
        auto fz = factor(m);
        if (fz.factors.size() >= 2) {
          const auto& f1 = fz.factors[0];
          Poly<S> u = Poly<S>::constant(f.one());
          for (int k = 0; k < f1.multiplicity; ++k) u = u * f1.factor;
          Poly<S> g = m / u;
          auto [d, s, tt] = ext_gcd(u, g);
          (void)d;
          (void)s;
          RowVector<S> e1 = evaluate_in(a, tt * g, cand, e);
          RowVector<S> e2 = e - e1;
          comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(ci));
          comps.push_back({e1});
          comps.push_back({e2});
          changed = true;
        } else if (fz.factors.size() == 1 && fz.factors[0].multiplicity > 1) {
          throw PreconditionError("central_blocks: algebra is not semisimple (nilpotent central element)");
        } else if (fz.factors.size() == 1 && fz.factors[0].irreducible && m.degree() == ze.dim()) {
          comps[ci].proven = true;
          comps[ci].degree = ze.dim();
          break;
        }
      }
      if (!changed && !comps[ci].proven) {
        if (target >= 0) throw InvariantViolation("central_blocks: failed to split a decomposable center over F_p");
        comps[ci].proven = true;
        comps[ci].resolved = false;
        comps[ci].degree = ze.dim();
      }
    }
  }
  std::vector<Block<S>> out;
  for (const auto& c : comps) {
    Block<S> b;
    b.idempotent = c.e;
    std::vector<RowVector<S>> gens;
    for (Index i = 0; i < a.dim(); ++i) gens.push_back(a.mul(c.e, a.basis_element(i)));
    b.space = Subspace<S>::span(gens, a.dim());
    b.center_degree = c.degree;
    b.resolved = c.resolved;
    out.push_back(std::move(b));
  }
  auto first_nonzero = [](const Block<S>& b) {
    for (Index j = 0; j < b.space.ambient_dim(); ++j)
      for (Index i = 0; i < b.space.dim(); ++i)
        if (!is_zero(b.space.basis()(i, j))) return j;
    return b.space.ambient_dim();
  };
  std::sort(out.begin(), out.end(), [&](const Block<S>& x, const Block<S>& y) {
    auto fx = first_nonzero(x), fy = first_nonzero(y);
    if (fx != fy) return fx < fy;
    return x.space.key() < y.space.key();
  });
  return out;
}

/// Wedderburn decomposition of a semisimple algebra into simple blocks.
template <class S>
std::vector<std::pair<FiniteDimAlgebra<S>, Block<S>>> wedderburn_blocks(const FiniteDimAlgebra<S>& a) {
  if (!jacobson_radical_space(a).is_zero()) throw PreconditionError("wedderburn_blocks: algebra is not semisimple");
  std::vector<std::pair<FiniteDimAlgebra<S>, Block<S>>> out;
  for (auto& b : central_blocks(a)) out.emplace_back(algebra_on_subspace(a, b.space, b.idempotent), b);
  return out;
}

}  // namespace spectra
