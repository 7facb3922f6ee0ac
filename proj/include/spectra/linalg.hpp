#pragma once

// Exact dense linear algebra over a field scalar `S`.  Vectors are row
// vectors and linear maps act on the right (v -> v * M), matching the
// convention used for right modules throughout the library.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "spectra/scalar.hpp"

namespace spectra {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <class S>
Matrix<S> zeros(const Field<S>& f, Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, f.zero());
}

template <class S>
RowVector<S> zero_vector(const Field<S>& f, Index n) {
  return RowVector<S>::Constant(n, f.zero());
}

template <class S>
Matrix<S> identity(const Field<S>& f, Index n) {
  Matrix<S> m = zeros(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class S>
RowVector<S> unit_vector(const Field<S>& f, Index n, Index i) {
  RowVector<S> v = zero_vector(f, n);
  v(i) = f.one();
  return v;
}

/// Rebinds literal residues to the modulus found among the entries so that
/// textual keys are canonical.  No-op for rationals.
template <class S>
void normalize(Matrix<S>& m) {
  if constexpr (std::is_same_v<S, Zp>) {
    std::uint32_t p = 0;
    for (Index i = 0; i < m.rows() && !p; ++i)
      for (Index j = 0; j < m.cols() && !p; ++j) p = m(i, j).modulus();
    if (!p) return;
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) m(i, j) = Zp(m(i, j).value(), p);
  }
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Vertical concatenation.
template <class S>
Matrix<S> stack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("stack: column mismatch");
  Matrix<S> out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

template <class S>
Matrix<S> rows_to_matrix(const std::vector<RowVector<S>>& rows, Index cols) {
  Matrix<S> m(static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) m.row(i) = rows[static_cast<std::size_t>(i)];
  return m;
}

template <class S>
struct RrefResult {
  Matrix<S> form;  ///< reduced row-echelon form, same shape as the input
  std::vector<Index> pivots;
  Index rank = 0;
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
template <class S>
RrefResult<S> rref(Matrix<S> m) {
  RrefResult<S> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = -1;
    for (Index r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.form = std::move(m);
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  return rref(m).rank;
}

/// Basis (as rows) of {x : M x = 0} for column vectors x.
template <class S>
Matrix<S> right_kernel(const Matrix<S>& m) {
  auto r = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<RowVector<S>> basis;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RowVector<S> v(n);
    for (Index j = 0; j < n; ++j) v(j) = S(0);
    v(free) = S(1);
    for (Index i = 0; i < r.rank; ++i) v(r.pivots[static_cast<std::size_t>(i)]) = -r.form(i, free);
    basis.push_back(v);
  }
  return rows_to_matrix(basis, n);
}

/// Basis (as rows) of {z : z M = 0}.
template <class S>
Matrix<S> left_kernel(const Matrix<S>& m) {
  Matrix<S> t = m.transpose();
  return right_kernel(t);
}

/// Some x with x * M = b, if one exists.
template <class S>
std::optional<RowVector<S>> solve_left(const Matrix<S>& m, const RowVector<S>& b) {
  // Augment: [M^T | b^T] x^T.
  Matrix<S> aug(m.cols(), m.rows() + 1);
  aug.leftCols(m.rows()) = m.transpose();
  aug.col(m.rows()) = b.transpose();
  auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.rows()) return std::nullopt;
  RowVector<S> x(m.rows());
  for (Index j = 0; j < m.rows(); ++j) x(j) = S(0);
  for (Index i = 0; i < r.rank; ++i) x(r.pivots[static_cast<std::size_t>(i)]) = r.form(i, m.rows());
  return x;
}

/// Inverse of a square matrix, if invertible.
template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  const Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: non-square matrix");
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) aug(i, n + j) = (i == j) ? S(1) : S(0);
  auto r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[static_cast<std::size_t>(n - 1)] != n - 1)) return std::nullopt;
  return Matrix<S>(r.form.rightCols(n));
}

template <class S>
S determinant(Matrix<S> m) {
  const Index n = m.rows();
  S det = S(1);
  for (Index c = 0; c < n; ++c) {
    Index piv = -1;
    for (Index r = c; r < n; ++r)
      if (!is_zero(m(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) return m.rows() ? m(0, 0) * S(0) : S(1);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    const S inv = S(1) / m(c, c);
    for (Index r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      const S factor = m(r, c) * inv;
      m.row(r) -= factor * m.row(c);
    }
  }
  return det;
}

/// Incrementally maintained reduced echelon basis.  `add` reports whether
/// the vector enlarged the span.
template <class S>
class EchelonBuilder {
 public:
  explicit EchelonBuilder(Index dim) : dim_(dim) {}

  Index dim() const { return dim_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  RowVector<S> reduce(RowVector<S> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S c = v(pivots_[i]);
      if (!is_zero(c)) v -= c * rows_[i];
    }
    return v;
  }

  bool contains(const RowVector<S>& v) const { return is_zero_matrix(reduce(v)); }

  bool add(const RowVector<S>& v0) {
    RowVector<S> v = reduce(v0);
    Index piv = -1;
    for (Index j = 0; j < dim_; ++j)
      if (!is_zero(v(j))) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    v *= S(1) / v(piv);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S c = rows_[i](piv);
      if (!is_zero(c)) rows_[i] -= c * v;
    }
    rows_.push_back(v);
    pivots_.push_back(piv);
    return true;
  }

  /// Basis in canonical reduced row-echelon order.
  Matrix<S> basis() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    Matrix<S> m(rank(), dim_);
    for (std::size_t i = 0; i < order.size(); ++i) m.row(static_cast<Index>(i)) = rows_[order[i]];
    return m;
  }

 private:
  Index dim_;
  std::vector<RowVector<S>> rows_;
  std::vector<Index> pivots_;
};

/// Subspace of S^n stored by its reduced row-echelon basis; two equal
/// subspaces have identical representations.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `gens`.
  static Subspace span(const Matrix<S>& gens, Index ambient) {
    Subspace s(ambient);
    if (gens.rows() == 0) return s;
    if (gens.cols() != ambient) throw std::invalid_argument("Subspace::span: dimension mismatch");
    auto r = rref(gens);
    s.basis_ = r.form.topRows(r.rank);
    normalize(s.basis_);
    s.pivots_ = std::move(r.pivots);
    return s;
  }
  static Subspace span(const std::vector<RowVector<S>>& gens, Index ambient) {
    return span(rows_to_matrix(gens, ambient), ambient);
  }
  static Subspace whole(const Field<S>& f, Index ambient) { return span(identity(f, ambient), ambient); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  RowVector<S> vector(Index i) const { return basis_.row(i); }

  bool contains(const RowVector<S>& v) const {
    RowVector<S> w = v;
    for (Index i = 0; i < dim(); ++i) {
      const S c = w(pivots_[static_cast<std::size_t>(i)]);
      if (!spectra::is_zero(c)) w -= c * basis_.row(i);
    }
    return is_zero_matrix(w);
  }
  bool contains(const Subspace& o) const {
    check(o);
    for (Index i = 0; i < o.dim(); ++i)
      if (!contains(RowVector<S>(o.basis_.row(i)))) return false;
    return true;
  }

  /// Coordinates of v with respect to basis(); v must lie in the subspace.
  RowVector<S> coordinates(const RowVector<S>& v) const {
    RowVector<S> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<std::size_t>(i)]);
    return c;
  }

  Subspace operator+(const Subspace& o) const {
    check(o);
    return span(stack(basis_, o.basis_), ambient_);
  }

  Subspace intersect(const Subspace& o) const {
    check(o);
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
    Matrix<S> z = left_kernel(Matrix<S>(stack(basis_, o.basis_)));
    Matrix<S> vecs = z.leftCols(dim()) * basis_;
    return span(vecs, ambient_);
  }

  /// Unit vectors at the non-pivot columns: a complement of this subspace.
  std::vector<Index> free_columns() const {
    std::vector<Index> out;
    std::size_t k = 0;
    for (Index j = 0; j < ambient_; ++j) {
      if (k < pivots_.size() && pivots_[k] == j) {
        ++k;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

  /// Matrix of the projection S^n -> S^n / this, in the coordinates given by
  /// free_columns().
  Matrix<S> quotient_projection() const {
    auto fc = free_columns();
    Matrix<S> p(ambient_, static_cast<Index>(fc.size()));
    for (Index i = 0; i < ambient_; ++i) {
      RowVector<S> e(ambient_);
      for (Index j = 0; j < ambient_; ++j) e(j) = (i == j) ? S(1) : S(0);
      RowVector<S> w = e;
      for (Index r = 0; r < dim(); ++r) {
        const S c = w(pivots_[static_cast<std::size_t>(r)]);
        if (!spectra::is_zero(c)) w -= c * basis_.row(r);
      }
      for (std::size_t j = 0; j < fc.size(); ++j) p(i, static_cast<Index>(j)) = w(fc[j]);
    }
    return p;
  }

  /// Image of the subspace under v -> v * m.
  Subspace image(const Matrix<S>& m) const {
    if (m.rows() != ambient_) throw std::invalid_argument("Subspace::image: dimension mismatch");
    if (dim() == 0) return Subspace(m.cols());
    return span(Matrix<S>(basis_ * m), m.cols());
  }

  /// Canonical text form; equal subspaces have equal keys.
  std::string key() const {
    std::ostringstream os;
    os << ambient_ << ':';
    for (Index i = 0; i < dim(); ++i) {
      if (i) os << ';';
      for (Index j = 0; j < ambient_; ++j) os << (j ? "," : "") << to_string(basis_(i, j));
    }
    return os.str();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.key() < b.key(); }

 private:
  void check(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

  Index ambient_ = 0;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

/// Smallest subspace containing the seed rows and closed under v -> v * op
/// for every operator.  Terminates after at most `dim` enlargements.
template <class S>
Subspace<S> spin(const Matrix<S>& seed, const std::vector<Matrix<S>>& operators, Index dim) {
  for (const auto& op : operators)
    if (op.rows() != dim || op.cols() != dim) throw std::invalid_argument("spin: operator dimension mismatch");
  if (seed.rows() && seed.cols() != dim) throw std::invalid_argument("spin: seed dimension mismatch");
  EchelonBuilder<S> eb(dim);
  std::vector<RowVector<S>> work;
  for (Index i = 0; i < seed.rows(); ++i) {
    RowVector<S> v = seed.row(i);
    if (eb.add(v)) work.push_back(v);
  }
  while (!work.empty()) {
    RowVector<S> v = work.back();
    work.pop_back();
    for (const auto& op : operators) {
      RowVector<S> w = v * op;
      if (eb.add(w)) work.push_back(w);
    }
  }
  return Subspace<S>::span(eb.basis(), dim);
}

template <class S>
Subspace<S> spin(const Subspace<S>& seed, const std::vector<Matrix<S>>& operators) {
  return spin(seed.basis(), operators, seed.ambient_dim());
}

template <class S>
bool is_invariant(const Subspace<S>& s, const std::vector<Matrix<S>>& operators) {
  for (const auto& op : operators)
    for (Index i = 0; i < s.dim(); ++i)
      if (!s.contains(RowVector<S>(s.basis().row(i) * op))) return false;
  return true;
}

}  // namespace spectra
