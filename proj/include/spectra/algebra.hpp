#pragma once

// Finite-dimensional associative unital algebras given by structure
// constants, and the standard ways of building them.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/linalg.hpp"
#include "spectra/poly.hpp"

namespace spectra {

/// Associative unital algebra over `Field<S>` with basis b_0..b_{n-1} and
/// b_i * b_j = sum_k c[i][j][k] b_k.
///
/// Elements are row vectors of coordinates.  `left_op(i)` is the matrix of
/// v -> b_i * v and `right_op(j)` the matrix of v -> v * b_j, both acting on
/// the right of row vectors.
template <class S>
class FiniteDimAlgebra {
 public:
  using Scalar = S;
  using Element = RowVector<S>;

  /// `table[i](j, k)` = c[i][j][k].  Validates associativity and the unit
  /// law; when `unit` is absent the unit is solved for.
  FiniteDimAlgebra(Field<S> field, std::vector<Matrix<S>> table, std::vector<std::string> labels,
                   std::optional<Element> unit = std::nullopt)
      : field_(std::move(field)), left_(std::move(table)), labels_(std::move(labels)) {
    const Index n = dim();
    if (n == 0) throw InvalidInput("algebra: dimension must be positive");
    if (labels_.empty())
      for (Index i = 0; i < n; ++i) labels_.push_back("b" + std::to_string(i + 1));
    if (static_cast<Index>(labels_.size()) != n) throw InvalidInput("algebra: label count does not match dimension");
    for (auto& m : left_) {
      if (m.rows() != n || m.cols() != n) throw InvalidInput("algebra: structure constant table has wrong shape");
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = bind(m(i, j));
    }
    right_.assign(static_cast<std::size_t>(n), zeros(field_, n, n));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) right_[static_cast<std::size_t>(j)](i, k) = left_[static_cast<std::size_t>(i)](j, k);
    check_associative();
    if (unit) {
      if (unit->cols() != n) throw InvalidInput("algebra: unit has wrong length");
      unit_ = *unit;
      for (Index i = 0; i < n; ++i) unit_(i) = bind(unit_(i));
      if (!unit_law_holds(unit_)) throw InvalidInput("algebra: supplied unit violates the unit law");
    } else {
      unit_ = solve_unit();
    }
  }

  const Field<S>& field() const { return field_; }
  Index dim() const { return static_cast<Index>(left_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Element& unit() const { return unit_; }
  const std::vector<Matrix<S>>& left_ops() const { return left_; }
  const std::vector<Matrix<S>>& right_ops() const { return right_; }
  const Matrix<S>& left_op(Index i) const { return left_[static_cast<std::size_t>(i)]; }
  const Matrix<S>& right_op(Index j) const { return right_[static_cast<std::size_t>(j)]; }
  S structure_constant(Index i, Index j, Index k) const { return left_[static_cast<std::size_t>(i)](j, k); }

  Element basis_element(Index i) const { return unit_vector(field_, dim(), i); }
  Element zero() const { return zero_vector(field_, dim()); }

  Element mul(const Element& x, const Element& y) const {
    Element out = zero();
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) out += x(i) * (y * left_[static_cast<std::size_t>(i)]);
    return out;
  }
  Element pow(const Element& x, std::uint64_t e) const {
    Element acc = unit_, b = x;
    while (e) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  }
  /// Matrix of v -> x * v.
  Matrix<S> left_matrix(const Element& x) const { return combine(left_, x); }
  /// Matrix of v -> v * x.
  Matrix<S> right_matrix(const Element& x) const { return combine(right_, x); }

  bool is_commutative() const {
    for (Index i = 0; i < dim(); ++i)
      if (left_[static_cast<std::size_t>(i)] != right_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  std::string element_str(const Element& x) const {
    std::string out;
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(x(i))) continue;
      if (!out.empty()) out += " + ";
      const std::string c = to_string(field_.bind(x(i)));
      out += (c == "1" ? "" : c + "*") + labels_[static_cast<std::size_t>(i)];
    }
    return out.empty() ? "0" : out;
  }

  /// Structural equality: same field, constants, unit and labels.
  friend bool operator==(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b) {
    return a.field_ == b.field_ && a.left_ == b.left_ && a.unit_ == b.unit_ && a.labels_ == b.labels_;
  }

 private:
  S bind(const S& v) const { return field_.bind(v); }

  Matrix<S> combine(const std::vector<Matrix<S>>& ops, const Element& x) const {
    Matrix<S> m = zeros(field_, dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) m += x(i) * ops[static_cast<std::size_t>(i)];
    return m;
  }

  void check_associative() const {
    const Index n = dim();
    // (b_i b_j) b_k = b_i (b_j b_k)  <=>  L_i R_k ... compare rows directly.
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        Element bij = left_[static_cast<std::size_t>(i)].row(j);
        for (Index k = 0; k < n; ++k) {
          Element lhs = bij * right_[static_cast<std::size_t>(k)];
          Element bjk = left_[static_cast<std::size_t>(j)].row(k);
          Element rhs = bjk * left_[static_cast<std::size_t>(i)];
          if (lhs != rhs)
            throw InvalidInput("algebra: associativity fails for (" + labels_[static_cast<std::size_t>(i)] + "," +
                               labels_[static_cast<std::size_t>(j)] + "," + labels_[static_cast<std::size_t>(k)] + ")");
        }
      }
  }

  bool unit_law_holds(const Element& u) const {
    for (Index i = 0; i < dim(); ++i) {
      Element b = basis_element(i);
      if (mul(u, b) != b || mul(b, u) != b) return false;
    }
    return true;
  }

  Element solve_unit() const {
    const Index n = dim();
    // u * L-table: sum_j u_j c[j][i][k] = delta_ik and sum_j u_j c[i][j][k] = delta_ik.
    Matrix<S> sys = zeros(field_, n, 2 * n * n);
    RowVector<S> rhs = zero_vector(field_, 2 * n * n);
    for (Index i = 0; i < n; ++i)
      for (Index k = 0; k < n; ++k) {
        const Index c1 = i * n + k, c2 = n * n + i * n + k;
        for (Index j = 0; j < n; ++j) {
          sys(j, c1) = left_[static_cast<std::size_t>(j)](i, k);
          sys(j, c2) = left_[static_cast<std::size_t>(i)](j, k);
        }
        if (i == k) rhs(c1) = rhs(c2) = field_.one();
      }
    auto u = solve_left(sys, rhs);
    if (!u) throw InvalidInput("algebra: no element satisfies the unit law");
    return *u;
  }

  Field<S> field_;
  std::vector<Matrix<S>> left_;
  std::vector<Matrix<S>> right_;
  std::vector<std::string> labels_;
  Element unit_;
};

template <class S>
using AlgebraPtr = std::shared_ptr<const FiniteDimAlgebra<S>>;

template <class S>
AlgebraPtr<S> share(FiniteDimAlgebra<S> a) {
  return std::make_shared<const FiniteDimAlgebra<S>>(std::move(a));
}

/// Builds an algebra from a list of dense structure-constant slices
/// c[i][j][k] given as nested integer vectors.
template <class S>
FiniteDimAlgebra<S> algebra_from_constants(const Field<S>& f,
                                           const std::vector<std::vector<std::vector<std::int64_t>>>& c,
                                           std::vector<std::string> labels = {}) {
  const Index n = static_cast<Index>(c.size());
  std::vector<Matrix<S>> table;
  for (Index i = 0; i < n; ++i) {
    Matrix<S> m = zeros(f, n, n);
    if (static_cast<Index>(c[static_cast<std::size_t>(i)].size()) != n)
      throw InvalidInput("structure constants: slice has wrong shape");
    for (Index j = 0; j < n; ++j) {
      const auto& row = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (static_cast<Index>(row.size()) != n) throw InvalidInput("structure constants: slice has wrong shape");
      for (Index k = 0; k < n; ++k) m(j, k) = f.from_int(row[static_cast<std::size_t>(k)]);
    }
    table.push_back(std::move(m));
  }
  return FiniteDimAlgebra<S>(f, std::move(table), std::move(labels));
}

/// Full matrix algebra M_n with basis of matrix units e_ij (row-major).
template <class S>
FiniteDimAlgebra<S> matrix_algebra(const Field<S>& f, int n) {
  if (n < 1) throw InvalidInput("matrix_algebra: n must be positive");
  const Index d = static_cast<Index>(n) * n;
  std::vector<Matrix<S>> table(static_cast<std::size_t>(d), zeros(f, d, d));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) table[static_cast<std::size_t>(i * n + j)](j * n + l, i * n + l) = f.one();
  return FiniteDimAlgebra<S>(f, std::move(table), std::move(labels));
}

/// Upper-triangular matrices T_n with basis e_ij, i <= j.
template <class S>
FiniteDimAlgebra<S> upper_triangular(const Field<S>& f, int n) {
  if (n < 1) throw InvalidInput("upper_triangular: n must be positive");
  std::vector<std::pair<int, int>> units;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      units.emplace_back(i, j);
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const Index d = static_cast<Index>(units.size());
  std::vector<Matrix<S>> table(static_cast<std::size_t>(d), zeros(f, d, d));
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      auto [i, j] = units[static_cast<std::size_t>(a)];
      auto [k, l] = units[static_cast<std::size_t>(b)];
      if (j != k) continue;
      for (Index c = 0; c < d; ++c)
        if (units[static_cast<std::size_t>(c)] == std::make_pair(i, l)) table[static_cast<std::size_t>(a)](b, c) = f.one();
    }
  return FiniteDimAlgebra<S>(f, std::move(table), std::move(labels));
}

/// k^m with componentwise multiplication.
template <class S>
FiniteDimAlgebra<S> product_of_copies(const Field<S>& f, int m) {
  if (m < 1) throw InvalidInput("product_of_copies: m must be positive");
  std::vector<Matrix<S>> table(static_cast<std::size_t>(m), zeros(f, m, m));
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    table[static_cast<std::size_t>(i)](i, i) = f.one();
    labels.push_back("u" + std::to_string(i + 1));
  }
  return FiniteDimAlgebra<S>(f, std::move(table), std::move(labels));
}

/// Group algebra from a multiplication table of group element indices
/// (element 0 need not be the identity).
template <class S>
FiniteDimAlgebra<S> group_algebra(const Field<S>& f, const std::vector<std::vector<int>>& mult,
                                  std::vector<std::string> labels = {}) {
  const Index n = static_cast<Index>(mult.size());
  std::vector<Matrix<S>> table(static_cast<std::size_t>(n), zeros(f, n, n));
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(mult[static_cast<std::size_t>(i)].size()) != n) throw InvalidInput("group table: wrong shape");
    for (Index j = 0; j < n; ++j) {
      int k = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (k < 0 || k >= n) throw InvalidInput("group table: entry out of range");
      table[static_cast<std::size_t>(i)](j, k) = f.one();
    }
  }
  return FiniteDimAlgebra<S>(f, std::move(table), std::move(labels));
}

/// k[C_n] with basis 1, g, ..., g^{n-1}.
template <class S>
FiniteDimAlgebra<S> cyclic_group_algebra(const Field<S>& f, int n) {
  if (n < 1) throw InvalidInput("cyclic_group_algebra: n must be positive");
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (int j = 0; j < n; ++j) mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  }
  return group_algebra(f, mult, labels);
}

/// k[x]/(f) with basis 1, x, ..., x^{deg f - 1}.
template <class S>
FiniteDimAlgebra<S> polynomial_quotient(const Field<S>& fld, const Poly<S>& f) {
  if (f.degree() < 1) throw InvalidInput("polynomial_quotient: modulus must have degree >= 1");
  const Poly<S> m = f.monic();
  const int d = m.degree();
  std::vector<Matrix<S>> table(static_cast<std::size_t>(d), zeros(fld, d, d));
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Poly<S> r = Poly<S>::monomial(fld.one(), static_cast<std::size_t>(i + j)) % m;
      for (int k = 0; k < d; ++k) table[static_cast<std::size_t>(i)](j, k) = fld.bind(r.coeff(static_cast<std::size_t>(k)));
    }
  return FiniteDimAlgebra<S>(fld, std::move(table), std::move(labels));
}

/// k[x]/(x^n).
template <class S>
FiniteDimAlgebra<S> truncated_polynomial(const Field<S>& f, int n) {
  return polynomial_quotient(f, Poly<S>::monomial(f.one(), static_cast<std::size_t>(n)));
}

/// Direct product A x B with the concatenated basis.
template <class S>
FiniteDimAlgebra<S> direct_product(const FiniteDimAlgebra<S>& a, const FiniteDimAlgebra<S>& b) {
  const Index n = a.dim(), m = b.dim(), d = n + m;
  const auto& f = a.field();
  std::vector<Matrix<S>> table(static_cast<std::size_t>(d), zeros(f, d, d));
  for (Index i = 0; i < n; ++i) table[static_cast<std::size_t>(i)].topLeftCorner(n, n) = a.left_op(i);
  for (Index i = 0; i < m; ++i) table[static_cast<std::size_t>(n + i)].bottomRightCorner(m, m) = b.left_op(i);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "'1");
  for (const auto& l : b.labels()) labels.push_back(l + "'2");
  RowVector<S> u(d);
  u << a.unit(), b.unit();
  return FiniteDimAlgebra<S>(f, std::move(table), std::move(labels), u);
}

/// Opposite algebra: c^op[i][j][k] = c[j][i][k].
template <class S>
FiniteDimAlgebra<S> opposite(const FiniteDimAlgebra<S>& a) {
  // The left operator of b_i in A^op is the right operator of b_i in A.
  return FiniteDimAlgebra<S>(a.field(), a.right_ops(), a.labels(), a.unit());
}

/// Algebra on a subspace V of A that is closed under multiplication and
/// contains `unit` (an idempotent acting as identity on V, e.g. a central
/// idempotent for the block eA).  Basis is the echelon basis of V.
template <class S>
FiniteDimAlgebra<S> algebra_on_subspace(const FiniteDimAlgebra<S>& a, const Subspace<S>& v, const RowVector<S>& unit,
                                        std::vector<std::string> labels = {}) {
  const Index d = v.dim();
  std::vector<Matrix<S>> table(static_cast<std::size_t>(d), zeros(a.field(), d, d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      RowVector<S> p = a.mul(v.vector(i), v.vector(j));
      if (!v.contains(p)) throw PreconditionError("algebra_on_subspace: subspace not closed under multiplication");
      table[static_cast<std::size_t>(i)].row(j) = v.coordinates(p);
    }
  if (labels.empty())
    for (Index i = 0; i < d; ++i) labels.push_back(a.element_str(v.vector(i)));
  return FiniteDimAlgebra<S>(a.field(), std::move(table), std::move(labels), v.coordinates(unit));
}

/// Algebra spanned by a list of square matrices closed under products; the
/// result uses the given matrices as basis (they must be independent).
template <class S>
FiniteDimAlgebra<S> algebra_from_matrices(const Field<S>& f, const std::vector<Matrix<S>>& mats,
                                          std::vector<std::string> labels = {}) {
  const Index d = static_cast<Index>(mats.size());
  if (d == 0) throw InvalidInput("algebra_from_matrices: empty basis");
  const Index n = mats[0].rows();
  Matrix<S> flat(d, n * n);
  for (Index i = 0; i < d; ++i)
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) flat(i, r * n + c) = mats[static_cast<std::size_t>(i)](r, c);
  // Coordinates through a left inverse on pivot columns.
  auto rr = rref(Matrix<S>(flat.transpose()));
  if (rr.rank != d) throw InvalidInput("algebra_from_matrices: matrices are dependent");
  Matrix<S> gens = flat;
  auto coords = [&](const Matrix<S>& m) {
    RowVector<S> v(n * n);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) v(r * n + c) = m(r, c);
    auto x = solve_left(gens, v);
    if (!x) throw InvalidInput("algebra_from_matrices: span not closed under products");
    return *x;
  };
  std::vector<Matrix<S>> table(static_cast<std::size_t>(d), zeros(f, d, d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      table[static_cast<std::size_t>(i)].row(j) = coords(Matrix<S>(mats[static_cast<std::size_t>(i)] * mats[static_cast<std::size_t>(j)]));
  return FiniteDimAlgebra<S>(f, std::move(table), std::move(labels), coords(identity(f, n)));
}

/// Quiver with relations.  Paths are composed left to right: the product
/// p * q of paths is their concatenation when p ends where q starts.
struct BoundQuiver {
  struct Arrow {
    int source = 0;  ///< 0-based vertex
    int target = 0;
    std::string label;
  };
  /// A relation is a linear combination of paths, each path a sequence of
  /// arrow labels (an empty sequence is not allowed).
  struct Term {
    std::int64_t coeff = 1;
    std::vector<std::string> path;
  };
  int vertices = 1;
  std::vector<Arrow> arrows;
  std::vector<std::vector<Term>> relations;
  int nilpotency_bound = 16;
};

namespace detail {

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;  // empty: trivial path at `source`
  bool operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows.empty()) return source < o.source;
    return arrows < o.arrows;
  }
  bool operator==(const Path& o) const { return source == o.source && target == o.target && arrows == o.arrows; }
};

}  // namespace detail

/// kQ / (R) for homogeneous relations R.  Works in kQ / J^{L+1}, L the
/// nilpotency bound, and requires every path of length L to vanish modulo
/// the relations, which certifies finite dimension.
template <class S>
FiniteDimAlgebra<S> bound_quiver_algebra(const Field<S>& f, const BoundQuiver& q) {
  using detail::Path;
  if (q.vertices < 1) throw InvalidInput("bound quiver: need at least one vertex");
  if (q.nilpotency_bound < 1) throw InvalidInput("bound quiver: nilpotency bound must be positive");
  std::map<std::string, int> arrow_index;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    if (ar.source < 0 || ar.source >= q.vertices || ar.target < 0 || ar.target >= q.vertices)
      throw InvalidInput("bound quiver: arrow '" + ar.label + "' has an invalid endpoint");
    if (!arrow_index.emplace(ar.label, static_cast<int>(a)).second)
      throw InvalidInput("bound quiver: duplicate arrow label '" + ar.label + "'");
  }
  const int L = q.nilpotency_bound;
  // Enumerate paths of length <= L, by length then lexicographically.
  std::vector<Path> paths;
  for (int v = 0; v < q.vertices; ++v) paths.push_back(Path{v, v, {}});
  std::vector<Path> layer = paths;
  for (int len = 1; len <= L; ++len) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == p.target) {
          Path np = p;
          np.arrows.push_back(static_cast<int>(a));
          np.target = q.arrows[a].target;
          next.push_back(np);
        }
    std::sort(next.begin(), next.end());
    for (const auto& p : next) paths.push_back(p);
    layer = std::move(next);
    if (paths.size() > 4096) throw CapabilityError("bound quiver: path count exceeds 4096 before the nilpotency bound");
  }
  const Index n = static_cast<Index>(paths.size());
  std::map<std::vector<int>, Index> index_of_nontrivial;
  for (Index i = q.vertices; i < n; ++i) index_of_nontrivial[paths[static_cast<std::size_t>(i)].arrows] = i;

  auto concat = [&](const Path& a, const Path& b) -> std::optional<Index> {
    if (a.target != b.source) return std::nullopt;
    if (a.arrows.empty()) return std::optional<Index>(b.arrows.empty() ? static_cast<Index>(b.source) : index_of_nontrivial.at(b.arrows));
    if (b.arrows.empty()) return index_of_nontrivial.at(a.arrows);
    std::vector<int> c = a.arrows;
    c.insert(c.end(), b.arrows.begin(), b.arrows.end());
    auto it = index_of_nontrivial.find(c);
    if (it == index_of_nontrivial.end()) return std::nullopt;  // longer than L: zero in kQ/J^{L+1}
    return it->second;
  };
  // Structure constants of kQ / J^{L+1}.
  std::vector<Matrix<S>> table(static_cast<std::size_t>(n), zeros(f, n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (auto k = concat(paths[static_cast<std::size_t>(i)], paths[static_cast<std::size_t>(j)]))
        table[static_cast<std::size_t>(i)](j, *k) = f.one();

  // Relation vectors.
  std::vector<RowVector<S>> rels;
  for (const auto& rel : q.relations) {
    RowVector<S> v = zero_vector(f, n);
    std::optional<std::size_t> len;
    std::optional<std::pair<int, int>> ends;
    for (const auto& t : rel) {
      if (t.path.empty()) throw InvalidInput("bound quiver: relation term with empty path");
      std::vector<int> arr;
      for (const auto& lab : t.path) {
        auto it = arrow_index.find(lab);
        if (it == arrow_index.end()) throw InvalidInput("bound quiver: unknown arrow '" + lab + "' in relation");
        arr.push_back(it->second);
      }
      for (std::size_t k = 0; k + 1 < arr.size(); ++k)
        if (q.arrows[static_cast<std::size_t>(arr[k])].target != q.arrows[static_cast<std::size_t>(arr[k + 1])].source)
          throw InvalidInput("bound quiver: relation term is not a path");
      if (len && *len != arr.size()) throw InvalidInput("bound quiver: relations must be homogeneous in path length");
      len = arr.size();
      std::pair<int, int> e{q.arrows[static_cast<std::size_t>(arr.front())].source, q.arrows[static_cast<std::size_t>(arr.back())].target};
      if (ends && *ends != e) throw InvalidInput("bound quiver: relation mixes paths with different endpoints");
      ends = e;
      auto it = index_of_nontrivial.find(arr);
      if (it != index_of_nontrivial.end()) v(it->second) += f.from_int(t.coeff);
    }
    rels.push_back(v);
  }
  // Two-sided ideal generated by the relations.
  std::vector<Matrix<S>> ops = table;
  for (Index j = 0; j < n; ++j) {
    Matrix<S> r = zeros(f, n, n);
    for (Index i = 0; i < n; ++i) r.row(i) = table[static_cast<std::size_t>(i)].row(j);
    ops.push_back(r);
  }
  Subspace<S> ideal = spin(rows_to_matrix(rels, n), ops, n);
  for (Index i = 0; i < n; ++i)
    if (static_cast<int>(paths[static_cast<std::size_t>(i)].arrows.size()) == L && !ideal.contains(unit_vector(f, n, i)))
      throw InvalidInput("bound quiver: arrow ideal does not vanish within the nilpotency bound " + std::to_string(L) +
                         " (infinite-dimensional or bound too small)");

  // Quotient basis: paths at the free columns of the ideal.
  auto keep = ideal.free_columns();
  Matrix<S> proj = ideal.quotient_projection();
  const Index d = static_cast<Index>(keep.size());
  std::vector<Matrix<S>> qt(static_cast<std::size_t>(d), zeros(f, d, d));
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      qt[static_cast<std::size_t>(a)].row(b) = table[static_cast<std::size_t>(keep[static_cast<std::size_t>(a)])].row(keep[static_cast<std::size_t>(b)]) * proj;
  std::vector<std::string> labels;
  for (Index i : keep) {
    const auto& p = paths[static_cast<std::size_t>(i)];
    if (p.arrows.empty()) {
      labels.push_back("e" + std::to_string(p.source + 1));
    } else {
      std::string s;
      for (int a : p.arrows) s += q.arrows[static_cast<std::size_t>(a)].label;
      labels.push_back(s);
    }
  }
  return FiniteDimAlgebra<S>(f, std::move(qt), std::move(labels));
}

}  // namespace spectra
