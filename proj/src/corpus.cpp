#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>

#include "spectra/oracle.hpp"

namespace spectra {

EnumerationBudget EnumerationBudget::from_env() {
  EnumerationBudget b;
  if (const char* env = std::getenv("SPECTRA_BUDGET")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) b.max_count = v;
    } catch (const std::exception&) {
      throw InvalidInput(std::string("SPECTRA_BUDGET must be a positive integer, got '") + env + "'");
    }
  }
  return b;
}

std::uint64_t subspace_count(Index n, std::uint64_t q) {
  // Gaussian binomials via the recurrence G(n, k) = G(n-1, k-1) + q^k G(n-1, k).
  std::vector<std::uint64_t> row{1};
  for (Index m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(m) + 1, 0);
    std::uint64_t qk = 1;
    for (Index k = 0; k <= m; ++k) {
      std::uint64_t v = 0;
      if (k >= 1) v += row[static_cast<std::size_t>(k - 1)];
      if (k < m) v += qk * row[static_cast<std::size_t>(k)];
      next[static_cast<std::size_t>(k)] = v;
      qk *= q;
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : row) total += v;
  return total;
}

namespace {

BoundQuiver cycle_quiver() {
  BoundQuiver q;
  q.vertices = 2;
  q.arrows = {{0, 1, "a"}, {1, 0, "b"}};
  q.relations = {{{1, {"a", "b"}}}, {{1, {"b", "a"}}}};
  q.nilpotency_bound = 2;
  return q;
}

/// Arrow multisets on two vertices up to swapping the vertices.
std::vector<std::vector<std::pair<int, int>>> arrow_configurations(int vertices) {
  std::vector<std::pair<int, int>> kinds;
  for (int s = 0; s < vertices; ++s)
    for (int t = 0; t < vertices; ++t) kinds.emplace_back(s, t);
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  auto canonical = [&](std::vector<std::pair<int, int>> arrows) {
    std::sort(arrows.begin(), arrows.end());
    if (vertices == 2) {
      auto swapped = arrows;
      for (auto& [s, t] : swapped) s = 1 - s, t = 1 - t;
      std::sort(swapped.begin(), swapped.end());
      arrows = std::min(arrows, swapped);
    }
    return arrows;
  };
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    auto one = canonical({kinds[i]});
    if (seen.insert(one).second) out.push_back(one);
  }
  for (std::size_t i = 0; i < kinds.size(); ++i)
    for (std::size_t j = i; j < kinds.size(); ++j) {
      auto two = canonical({kinds[i], kinds[j]});
      if (seen.insert(two).second) out.push_back(two);
    }
  return out;
}

/// kQ modulo all paths of length `bound`.
std::optional<BoundQuiver> truncated_path_algebra(int vertices, const std::vector<std::pair<int, int>>& arrows, int bound) {
  BoundQuiver q;
  q.vertices = vertices;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    q.arrows.push_back({arrows[i].first, arrows[i].second, std::string(1, static_cast<char>('a' + i))});
  q.nilpotency_bound = bound;
  // All paths of length `bound` become relations.
  std::vector<std::vector<int>> paths;
  for (std::size_t i = 0; i < arrows.size(); ++i) paths.push_back({static_cast<int>(i)});
  for (int len = 1; len < bound; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& p : paths)
      for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[static_cast<std::size_t>(p.back())].second == arrows[i].first) {
          auto e = p;
          e.push_back(static_cast<int>(i));
          next.push_back(e);
        }
    paths = std::move(next);
  }
  if (paths.empty() && bound > 2) return std::nullopt;  // same algebra as a smaller bound
  for (const auto& p : paths) {
    BoundQuiver::Term t;
    for (int i : p) t.path.push_back(q.arrows[static_cast<std::size_t>(i)].label);
    q.relations.push_back({t});
  }
  return q;
}

std::string quiver_name(int vertices, const std::vector<std::pair<int, int>>& arrows, int bound) {
  std::string s = "quiver" + std::to_string(vertices) + "[";
  for (std::size_t i = 0; i < arrows.size(); ++i)
    s += (i ? "," : "") + std::to_string(arrows[i].first + 1) + ">" + std::to_string(arrows[i].second + 1);
  return s + "]/J^" + std::to_string(bound);
}

}  // namespace

std::vector<CorpusEntry> corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> named, generated;
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    const std::string fp = "_f" + std::to_string(p);
    auto add = [&](const std::string& name, FiniteDimAlgebra<Zp> a) { named.push_back({name + fp, share(std::move(a))}); };
    auto poly = [&](std::vector<std::int64_t> c) {
      std::vector<Zp> v;
      for (auto x : c) v.push_back(f.from_int(x));
      return Poly<Zp>(std::move(v));
    };
    add("field", product_of_copies(f, 1));
    add("t2", upper_triangular(f, 2));
    add("t3", upper_triangular(f, 3));
    add("m2", matrix_algebra(f, 2));
    add("prod2", product_of_copies(f, 2));
    add("prod3", product_of_copies(f, 3));
    add("fx2", truncated_polynomial(f, 2));
    add("fx3", truncated_polynomial(f, 3));
    add("fx4", truncated_polynomial(f, 4));
    add("fx2x", polynomial_quotient(f, poly({0, 1, 1})));
    add("fx21", polynomial_quotient(f, poly({1, 0, 1})));
    add("fx3x2", polynomial_quotient(f, poly({0, 0, 1, 1})));
    add("c2", cyclic_group_algebra(f, 2));
    add("c3", cyclic_group_algebra(f, 3));
    add("cycle2", bound_quiver_algebra(f, cycle_quiver()));
    add("t2xfield", direct_product(upper_triangular(f, 2), product_of_copies(f, 1)));

    for (int v : {1, 2})
      for (const auto& arrows : arrow_configurations(v))
        for (int bound : {2, 3}) {
          auto q = truncated_path_algebra(v, arrows, bound);
          if (!q) continue;
          auto a = bound_quiver_algebra(f, *q);
          if (a.dim() > 6) continue;
          generated.push_back({quiver_name(v, arrows, bound) + fp, share(std::move(a))});
        }
  }
  std::shuffle(generated.begin(), generated.end(), std::mt19937_64(seed));
  named.insert(named.end(), generated.begin(), generated.end());
  return named;
}

AlgebraPtr<Zp> corpus_algebra(const std::string& name) {
  for (auto& e : corpus(0))
    if (e.name == name) return e.algebra;
  throw PreconditionError("corpus: no fixture named " + name);
}

}  // namespace spectra
