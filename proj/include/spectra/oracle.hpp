#pragma once

// Brute-force enumerators and definitional predicates over finite fields.
// Every fast algorithm in the library is checked against these.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "spectra/goldie.hpp"
#include "spectra/ideal.hpp"

namespace spectra {

struct EnumerationBudget {
  Index max_ambient_dim = 8;
  std::uint64_t max_field_size = 16;
  std::uint64_t max_count = 200000;
  double time_cap_seconds = 120.0;

  /// Defaults, with max_count overridden by SPECTRA_BUDGET when set.
  static EnumerationBudget from_env();
};

/// Number of subspaces of F_q^n (sum of Gaussian binomials).
std::uint64_t subspace_count(Index n, std::uint64_t q);

namespace detail {

class Deadline {
 public:
  explicit Deadline(double seconds) : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds))) {}
  void check(const char* what) const {
    if (std::chrono::steady_clock::now() > end_) throw BudgetExceeded(std::string(what) + ": time cap reached");
  }

 private:
  std::chrono::steady_clock::time_point end_;
};

inline void check_budget(Index n, std::uint64_t q, const EnumerationBudget& b, const char* what) {
  if (n > b.max_ambient_dim) throw BudgetExceeded(std::string(what) + ": ambient dimension exceeds budget");
  if (q > b.max_field_size) throw BudgetExceeded(std::string(what) + ": field size exceeds budget");
  if (subspace_count(n, q) > b.max_count) throw BudgetExceeded(std::string(what) + ": subspace count exceeds budget");
}

}  // namespace detail

/// Every subspace of F_p^n, each once, generated from reduced echelon forms.
inline std::vector<Subspace<Zp>> enumerate_subspaces(const PrimeField& f, Index n,
                                                     const EnumerationBudget& budget = EnumerationBudget::from_env()) {
  const std::uint64_t q = f.size();
  detail::check_budget(n, q, budget, "enumerate_subspaces");
  detail::Deadline deadline(budget.time_cap_seconds);
  std::vector<Subspace<Zp>> out;
  out.emplace_back(n);
  for (Index r = 1; r <= n; ++r) {
    // Choose pivot columns as an increasing r-subset of {0..n-1}.
    std::vector<Index> piv(static_cast<std::size_t>(r));
    for (Index i = 0; i < r; ++i) piv[static_cast<std::size_t>(i)] = i;
    while (true) {
      // Free positions: row i, column c > piv[i] that is not a pivot.
      std::vector<std::pair<Index, Index>> free;
      for (Index i = 0; i < r; ++i)
        for (Index c = piv[static_cast<std::size_t>(i)] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
      std::uint64_t total = 1;
      for (std::size_t k = 0; k < free.size(); ++k) total *= q;
      for (std::uint64_t code = 0; code < total; ++code) {
        Matrix<Zp> m = zeros(f, r, n);
        for (Index i = 0; i < r; ++i) m(i, piv[static_cast<std::size_t>(i)]) = f.one();
        std::uint64_t x = code;
        for (const auto& [i, c] : free) {
          m(i, c) = f.element(x % q);
          x /= q;
        }
        out.push_back(Subspace<Zp>::span(m, n));
      }
      deadline.check("enumerate_subspaces");
      // Next r-subset.
      Index i = r - 1;
      while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - r + i) --i;
      if (i < 0) break;
      ++piv[static_cast<std::size_t>(i)];
      for (Index k = i + 1; k < r; ++k) piv[static_cast<std::size_t>(k)] = piv[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
  return out;
}

/// All vectors of a subspace (q^dim of them).
inline std::vector<RowVector<Zp>> subspace_elements(const PrimeField& f, const Subspace<Zp>& v) {
  const std::uint64_t q = f.size();
  std::uint64_t total = 1;
  for (Index i = 0; i < v.dim(); ++i) total *= q;
  std::vector<RowVector<Zp>> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    RowVector<Zp> x = zero_vector(f, v.ambient_dim());
    std::uint64_t c = code;
    for (Index i = 0; i < v.dim(); ++i) {
      const Zp coeff = f.element(c % q);
      c /= q;
      if (!coeff.is_zero()) x += coeff * v.vector(i);
    }
    out.push_back(x);
  }
  return out;
}

inline std::vector<TwoSidedIdeal<Zp>> enumerate_two_sided_ideals(const AlgebraPtr<Zp>& a,
                                                                 const EnumerationBudget& b = EnumerationBudget::from_env()) {
  std::vector<TwoSidedIdeal<Zp>> out;
  const auto ops = detail::both_sided_ops(*a);
  for (auto& s : enumerate_subspaces(a->field(), a->dim(), b))
    if (is_invariant(s, ops)) out.emplace_back(a, std::move(s));
  return out;
}

inline std::vector<Subspace<Zp>> enumerate_right_ideals(const AlgebraPtr<Zp>& a,
                                                        const EnumerationBudget& b = EnumerationBudget::from_env()) {
  std::vector<Subspace<Zp>> out;
  for (auto& s : enumerate_subspaces(a->field(), a->dim(), b))
    if (is_invariant(s, a->right_ops())) out.push_back(std::move(s));
  return out;
}

inline std::vector<Subspace<Zp>> enumerate_submodules_brute(const RightModule<Zp>& m,
                                                            const EnumerationBudget& b = EnumerationBudget::from_env()) {
  std::vector<Subspace<Zp>> out;
  for (auto& s : enumerate_subspaces(m.field(), m.dim(), b))
    if (is_invariant(s, m.action())) out.push_back(std::move(s));
  return out;
}

namespace oracle {

/// I is prime iff AB in I implies A in I or B in I, over all ideals A, B.
inline bool is_prime(const TwoSidedIdeal<Zp>& i, const std::vector<TwoSidedIdeal<Zp>>& ideals) {
  if (i.is_whole()) throw PreconditionError("oracle::is_prime: the whole algebra is not a proper ideal");
  for (const auto& x : ideals)
    for (const auto& y : ideals)
      if (i.contains(ideal_product(x, y)) && !i.contains(x) && !i.contains(y)) return false;
  return true;
}

/// Isomorphism by scanning every element of Hom(M, N) for an invertible one.
inline bool is_isomorphic(const RightModule<Zp>& m, const RightModule<Zp>& n) {
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  const auto basis = hom_basis(m, n);
  const auto& f = m.field();
  const std::uint64_t q = f.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (total > 1000000 / q) throw BudgetExceeded("oracle::is_isomorphic: Hom space too large");
    total *= q;
  }
  for (std::uint64_t code = 1; code < total; ++code) {
    Matrix<Zp> h = zeros(f, m.dim(), n.dim());
    std::uint64_t c = code;
    for (const auto& b : basis) {
      const Zp coeff = f.element(c % q);
      c /= q;
      if (!coeff.is_zero()) h += coeff * b;
    }
    if (rank(h) == m.dim()) return true;
  }
  return false;
}

/// Nonzero submodules of m.
inline std::vector<Subspace<Zp>> nonzero_submodules(const RightModule<Zp>& m) {
  std::vector<Subspace<Zp>> out;
  for (auto& s : enumerate_submodules_brute(m))
    if (!s.is_zero()) out.push_back(std::move(s));
  return out;
}

/// No nonzero submodule of M is isomorphic to a submodule of M/L, for every
/// nonzero submodule L.
inline bool is_monoform(const RightModule<Zp>& m) {
  if (m.dim() == 0) throw PreconditionError("oracle::is_monoform: zero module");
  const auto subs = nonzero_submodules(m);
  for (const auto& l : subs) {
    if (l.is_whole()) continue;
    const auto qm = quotient_module(m, l).module;
    for (const auto& k : nonzero_submodules(qm)) {
      const auto kk = restrict_to(qm, k);
      for (const auto& n : subs)
        if (n.dim() == k.dim() && is_isomorphic(restrict_to(m, n), kk)) return false;
    }
  }
  return true;
}

/// Every nonzero submodule contains a submodule isomorphic to M.
inline bool is_compressible(const RightModule<Zp>& m) {
  if (m.dim() == 0) throw PreconditionError("oracle::is_compressible: zero module");
  const auto subs = nonzero_submodules(m);
  for (const auto& l : subs) {
    bool found = false;
    for (const auto& k : subs)
      if (k.dim() == m.dim() && l.contains(k) && is_isomorphic(restrict_to(m, k), m)) found = true;
    if (!found) return false;
  }
  return true;
}

/// Every nonzero submodule has the same annihilator as M.
inline bool is_prime_object(const RightModule<Zp>& m) {
  if (m.dim() == 0) throw PreconditionError("oracle::is_prime_object: zero module");
  const auto ann = annihilator_space(m);
  for (const auto& l : nonzero_submodules(m))
    if (!(annihilator_space(restrict_to(m, l)) == ann)) return false;
  return true;
}

/// L meets every nonzero submodule.
inline bool is_essential(const RightModule<Zp>& m, const Subspace<Zp>& l) {
  for (const auto& n : nonzero_submodules(m))
    if (n.intersect(l).is_zero()) return false;
  return true;
}

/// {v : the right ideal {a : va = 0} is essential in A_A}.
inline Subspace<Zp> singular_space(const RightModule<Zp>& m) {
  const auto& a = *m.algebra();
  const auto right_ideals = enumerate_right_ideals(m.algebra());
  auto essential = [&](const Subspace<Zp>& r) {
    for (const auto& x : right_ideals)
      if (!x.is_zero() && x.intersect(r).is_zero()) return false;
    return true;
  };
  std::vector<RowVector<Zp>> hits;
  for (const auto& v : subspace_elements(m.field(), Subspace<Zp>::whole(m.field(), m.dim()))) {
    // Right annihilator of v: kernel of a -> v a.
    Matrix<Zp> va = zeros(m.field(), a.dim(), m.dim());
    for (Index i = 0; i < a.dim(); ++i) va.row(i) = v * m.act(i);
    const Subspace<Zp> ann = Subspace<Zp>::span(left_kernel(va), a.dim());
    if (essential(ann)) hits.push_back(v);
  }
  const auto z = Subspace<Zp>::span(hits, m.dim());
  // The definition yields a set; it must already be a subspace.
  if (subspace_elements(m.field(), z).size() != hits.size()) throw InvariantViolation("oracle::singular_space: not a subspace");
  return z;
}

/// Prime ideals Ann(H) over the prime submodules H of M.
inline std::vector<Subspace<Zp>> mass(const RightModule<Zp>& m) {
  std::vector<Subspace<Zp>> out;
  for (const auto& h : nonzero_submodules(m)) {
    const auto sub = restrict_to(m, h);
    if (!is_prime_object(sub)) continue;
    const auto ann = annihilator_space(sub);
    if (std::find(out.begin(), out.end(), ann) == out.end()) out.push_back(ann);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every essential submodule contains a copy of M.
inline bool is_essentially_compressible(const RightModule<Zp>& m) {
  if (m.dim() == 0) throw PreconditionError("oracle::is_essentially_compressible: zero module");
  const auto subs = nonzero_submodules(m);
  for (const auto& l : subs) {
    if (!is_essential(m, l)) continue;
    bool found = false;
    for (const auto& k : subs)
      if (k.dim() == m.dim() && l.contains(k) && is_isomorphic(restrict_to(m, k), m)) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle

struct CorpusEntry {
  std::string name;
  AlgebraPtr<Zp> algebra;
};

/// Deterministic fixture algebras over F2 and F3 of dimension <= 6.  The
/// seed only permutes the generated part; named fixtures come first.
std::vector<CorpusEntry> corpus(std::uint64_t seed = 0);

/// Looks up a named fixture in corpus(0).
AlgebraPtr<Zp> corpus_algebra(const std::string& name);

}  // namespace spectra
