#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spectra/oracle.hpp"

namespace testing {

using namespace spectra;

inline const PrimeField F2(2);
inline const PrimeField F3(3);
inline const RationalField QQ{};

template <class S>
Matrix<S> mat(const Field<S>& f, std::vector<std::vector<std::int64_t>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows[0].size()) : 0;
  Matrix<S> m = zeros(f, r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = f.from_int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

template <class S>
RowVector<S> vec(const Field<S>& f, std::vector<std::int64_t> xs) {
  RowVector<S> v = zero_vector(f, static_cast<Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Index>(i)) = f.from_int(xs[i]);
  return v;
}

template <class S>
Poly<S> poly(const Field<S>& f, std::vector<std::int64_t> c) {
  std::vector<S> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return Poly<S>(std::move(v));
}

inline Matrix<Zp> random_matrix(const PrimeField& f, Index r, Index c, std::mt19937_64& rng) {
  Matrix<Zp> m = zeros(f, r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = f.random(rng);
  return m;
}

/// Corpus entries over F2 of dimension at most `max_dim`.
inline std::vector<CorpusEntry> small_f2_corpus(Index max_dim = 4) {
  std::vector<CorpusEntry> out;
  for (auto& e : corpus(0))
    if (e.algebra->field().size() == 2 && e.algebra->dim() <= max_dim) out.push_back(e);
  return out;
}

template <class S>
AlgebraPtr<S> t2(const Field<S>& f) {
  return share(upper_triangular(f, 2));
}

}  // namespace testing
