#pragma once

// Univariate polynomials over an exact field, with factorization over prime
// fields (squarefree decomposition + Berlekamp) and partial factorization
// over Q (rational roots, quadratic factors via Kronecker).

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/linalg.hpp"

namespace spectra {

template <class S>
class Poly {
 public:
  Poly() = default;
  /// Coefficients low-to-high.
  explicit Poly(std::vector<S> c) : c_(std::move(c)) { trim(); }

  static Poly constant(const S& a) { return Poly(std::vector<S>{a}); }
  static Poly monomial(const S& a, std::size_t deg) {
    std::vector<S> c(deg + 1, a * S(0));
    c[deg] = a;
    return Poly(std::move(c));
  }
  /// x - a
  static Poly linear_root(const S& a) { return Poly(std::vector<S>{-a, a * S(0) + S(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
  S lead() const { return c_.empty() ? S(0) : c_.back(); }

  Poly monic() const {
    if (c_.empty()) return *this;
    const S inv = S(1) / c_.back();
    std::vector<S> c = c_;
    for (auto& x : c) x *= inv;
    return Poly(std::move(c));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const S& s, const Poly& a) { return constant(s) * a; }

  /// Quotient and remainder; throws on division by zero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<S> r = a.c_;
    std::vector<S> q(a.c_.size() - b.c_.size() + 1, S(0));
    const S inv = S(1) / b.c_.back();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      const S f = r[static_cast<std::size_t>(i) + b.c_.size() - 1] * inv;
      q[static_cast<std::size_t>(i)] = f;
      if (is_zero_scalar(f)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[static_cast<std::size_t>(i) + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<S> d(c_.size() - 1, S(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<int>(i));
    return Poly(std::move(d));
  }

  S eval(const S& x) const {
    S acc = S(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(M) for a square matrix M.
  Matrix<S> eval(const Matrix<S>& m) const {
    const Index n = m.rows();
    Matrix<S> acc = Matrix<S>::Constant(n, n, S(0) * (n ? m(0, 0) : S(0)));
    Matrix<S> id = acc;
    for (Index i = 0; i < n; ++i) id(i, i) = S(1);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = Matrix<S>(acc * m) + (*it) * id;
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const S& a = c_[static_cast<std::size_t>(i)];
      if (is_zero_scalar(a)) continue;
      if (!first) os << " + ";
      first = false;
      const bool one = (a == S(1));
      if (i == 0 || !one) os << to_string(a);
      if (i >= 1) os << var;
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

 private:
  static bool is_zero_scalar(const S& a) { return spectra::is_zero(a); }
  void trim() {
    while (!c_.empty() && spectra::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  while (!b.is_zero()) {
    Poly<S> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s a + t b = g = gcd(a, b), g monic.
template <class S>
std::tuple<Poly<S>, Poly<S>, Poly<S>> ext_gcd(const Poly<S>& a, const Poly<S>& b) {
  Poly<S> r0 = a, r1 = b;
  Poly<S> s0 = Poly<S>::constant(S(1)), s1;
  Poly<S> t0, t1 = Poly<S>::constant(S(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<S> s2 = s0 - q * s1;
    Poly<S> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const S inv = S(1) / r0.lead();
  return {r0.monic(), Poly<S>::constant(inv) * s0, Poly<S>::constant(inv) * t0};
}

template <class S>
Poly<S> pow_mod(Poly<S> base, std::uint64_t e, const Poly<S>& mod) {
  Poly<S> acc = Poly<S>::constant(S(1)) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) acc = (acc * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return acc;
}

template <class S>
struct PolyFactor {
  Poly<S> factor;  ///< monic
  int multiplicity = 1;
  bool irreducible = true;  ///< false when the factor could not be split further
};

template <class S>
struct Factorization {
  S unit;  ///< leading coefficient
  std::vector<PolyFactor<S>> factors;
  bool complete() const {
    return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.irreducible; });
  }
};

namespace detail {

template <class S>
void sort_factors(std::vector<PolyFactor<S>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coeffs();
    const auto& cb = b.factor.coeffs();
    for (std::size_t i = ca.size(); i-- > 0;)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return a.multiplicity < b.multiplicity;
  });
}

/// Squarefree decomposition over F_p: list of (squarefree monic, multiplicity).
inline std::vector<std::pair<Poly<Zp>, int>> squarefree_fp(const Poly<Zp>& f0, std::uint32_t p) {
  std::vector<std::pair<Poly<Zp>, int>> out;
  Poly<Zp> f = f0.monic();
  if (f.degree() <= 0) return out;
  Poly<Zp> c = gcd(f, f.derivative());
  Poly<Zp> w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly<Zp> y = gcd(w, c);
    Poly<Zp> z = w / y;
    if (z.degree() > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    // c is a p-th power.
    std::vector<Zp> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
    for (auto& [g, m] : squarefree_fp(Poly<Zp>(root), p)) out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

/// Berlekamp splitting of a squarefree monic polynomial over F_p.
inline std::vector<Poly<Zp>> berlekamp(const Poly<Zp>& f, std::uint32_t p) {
  const int n = f.degree();
  if (n <= 1) return {f};
  const Field<Zp> F(p);
  Matrix<Zp> q = zeros(F, n, n);
  Poly<Zp> xp = pow_mod(Poly<Zp>(std::vector<Zp>{F.zero(), F.one()}), p, f);
  Poly<Zp> cur = Poly<Zp>::constant(F.one());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) q(i, j) = F.bind(cur.coeff(static_cast<std::size_t>(j)));
    q(i, i) -= F.one();
    cur = (cur * xp) % f;
  }
  Matrix<Zp> ker = left_kernel(q);  // v (Q - I) = 0
  const auto r = static_cast<std::size_t>(ker.rows());
  std::vector<Poly<Zp>> factors{f};
  if (r == 1) return factors;
  for (Index k = 0; k < ker.rows() && factors.size() < r; ++k) {
    std::vector<Zp> coeffs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) coeffs[static_cast<std::size_t>(j)] = ker(k, j);
    Poly<Zp> v(coeffs);
    if (v.degree() <= 0) continue;
    std::vector<Poly<Zp>> next;
    for (const auto& g : factors) {
      if (g.degree() <= 1) {
        next.push_back(g);
        continue;
      }
      Poly<Zp> rest = g;
      for (std::uint32_t s = 0; s < p && rest.degree() > 0; ++s) {
        Poly<Zp> h = gcd(rest, v - Poly<Zp>::constant(F.from_int(s)));
        if (h.degree() > 0 && h.degree() < rest.degree()) {
          next.push_back(h);
          rest = rest / h;
        } else if (h.degree() == rest.degree()) {
          break;
        }
      }
      if (rest.degree() > 0) next.push_back(rest.monic());
    }
    factors = std::move(next);
  }
  return factors;
}

inline std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > BigInt(1000000000000LL)) throw CapabilityError("rational root search: coefficient too large");
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// Integer polynomial (primitive, content removed) proportional to f.
inline std::vector<BigInt> integer_coeffs(const Poly<Rational>& f) {
  BigInt l = 1;
  for (const auto& c : f.coeffs()) l = boost::multiprecision::lcm(l, c.denominator());
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    out.push_back(c.numerator() * (l / c.denominator()));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g != 0)
    for (auto& c : out) c /= g;
  return out;
}

inline std::optional<Poly<Rational>> find_quadratic_factor(const Poly<Rational>& f) {
  auto ic = integer_coeffs(f);
  Poly<Rational> fi;
  {
    std::vector<Rational> c;
    for (auto& x : ic) c.emplace_back(x, BigInt(1));
    fi = Poly<Rational>(c);
  }
  const std::vector<long long> pts{0, 1, -1};
  std::vector<std::vector<BigInt>> cand;
  for (long long t : pts) {
    Rational v = fi.eval(Rational(t));
    if (v.is_zero()) return Poly<Rational>::linear_root(Rational(t)) * Poly<Rational>::constant(Rational(1));
    auto ds = divisors(v.numerator());
    std::vector<BigInt> both;
    for (auto& d : ds) {
      both.push_back(d);
      both.push_back(-d);
    }
    cand.push_back(std::move(both));
  }
  for (const auto& a : cand[0])
    for (const auto& b : cand[1])
      for (const auto& c : cand[2]) {
        // q(0)=a, q(1)=b, q(-1)=c -> q = a + ((b-c)/2) x + ((b+c)/2 - a) x^2
        Rational q0(a, 1), q1 = Rational(b - c, 2), q2 = Rational(b + c, 2) - Rational(a, 1);
        if (q2.is_zero()) continue;
        Poly<Rational> q(std::vector<Rational>{q0, q1, q2});
        if ((fi % q).is_zero()) return q.monic();
      }
  return std::nullopt;
}

inline void factor_squarefree_q(const Poly<Rational>& f, int mult, std::vector<PolyFactor<Rational>>& out) {
  Poly<Rational> g = f.monic();
  if (g.degree() <= 0) return;
  // Rational roots.
  bool found = true;
  while (found && g.degree() >= 1) {
    found = false;
    if (g.degree() == 1) break;
    auto ic = integer_coeffs(g);
    if (ic.front() == 0) {
      out.push_back({Poly<Rational>::linear_root(Rational(0)), mult, true});
      g = g / Poly<Rational>::linear_root(Rational(0));
      found = true;
      continue;
    }
    for (const auto& num : divisors(ic.front())) {
      for (const auto& den : divisors(ic.back())) {
        for (int sgn : {1, -1}) {
          Rational r(num * sgn, den);
          if (g.eval(r).is_zero()) {
            out.push_back({Poly<Rational>::linear_root(r), mult, true});
            g = g / Poly<Rational>::linear_root(r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (g.degree() <= 0) return;
  if (g.degree() <= 3) {
    out.push_back({g.monic(), mult, true});
    return;
  }
  if (g.degree() <= 5) {
    if (auto q = find_quadratic_factor(g)) {
      factor_squarefree_q(*q, mult, out);
      factor_squarefree_q(g / *q, mult, out);
    } else {
      out.push_back({g.monic(), mult, true});
    }
    return;
  }
  out.push_back({g.monic(), mult, false});
}

}  // namespace detail

/// Factorization into monic irreducibles with multiplicities.
inline Factorization<Zp> factor(const Poly<Zp>& f) {
  if (f.is_zero()) throw PreconditionError("factor: zero polynomial");
  const std::uint32_t p = f.lead().modulus();
  Factorization<Zp> out{f.lead(), {}};
  for (auto& [g, m] : detail::squarefree_fp(f, p))
    for (auto& h : detail::berlekamp(g, p)) out.factors.push_back({h.monic(), m, true});
  detail::sort_factors(out.factors);
  return out;
}

/// Factorization over Q.  Complete for degree <= 5 after removing repeated
/// factors; larger irreducible-looking pieces are flagged `irreducible = false`.
inline Factorization<Rational> factor(const Poly<Rational>& f) {
  if (f.is_zero()) throw PreconditionError("factor: zero polynomial");
  Factorization<Rational> out{f.lead(), {}};
  // Yun's squarefree decomposition (characteristic zero).
  Poly<Rational> a = f.monic();
  Poly<Rational> b = gcd(a, a.derivative());
  Poly<Rational> c = a / b;
  int i = 1;
  while (c.degree() > 0) {
    Poly<Rational> y = gcd(c, b);
    Poly<Rational> z = c / y;
    detail::factor_squarefree_q(z, i, out.factors);
    b = b / y;
    c = y;
    ++i;
  }
  detail::sort_factors(out.factors);
  return out;
}

/// Throws CapabilityError unless the factorization is complete.
template <class S>
Factorization<S> factor_complete(const Poly<S>& f) {
  auto fz = factor(f);
  if (!fz.complete()) throw CapabilityError("factorization of " + f.str() + " over Q is beyond the supported degree");
  return fz;
}

template <class S>
bool is_irreducible(const Poly<S>& f) {
  if (f.degree() <= 0) return false;
  auto fz = factor_complete(f);
  return fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
}

/// Minimal polynomial of the vector v under v -> v * m, relative to the
/// invariant subspace tracked by `base` (pass an empty builder for the
/// absolute minimal polynomial).  Extends `base` by the Krylov vectors.
template <class S>
Poly<S> relative_krylov_poly(const Matrix<S>& m, RowVector<S> v, EchelonBuilder<S>& base) {
  std::vector<RowVector<S>> seq;
  EchelonBuilder<S> local = base;
  std::vector<RowVector<S>> reduced;
  for (;;) {
    RowVector<S> w = base.reduce(v);
    if (!reduced.empty()) {
      Matrix<S> k = rows_to_matrix(reduced, m.rows());
      if (auto c = solve_left(k, w)) {
        std::vector<S> coeffs;
        for (Index i = 0; i < c->size(); ++i) coeffs.push_back(-(*c)(i));
        coeffs.push_back(S(1) + S(0) * w(0));
        for (const auto& r : seq) base.add(r);
        return Poly<S>(coeffs);
      }
    } else if (is_zero_matrix(w)) {
      return Poly<S>::constant(S(1) + S(0) * w(0));
    }
    reduced.push_back(w);
    seq.push_back(v);
    v = v * m;
  }
}

template <class S>
Poly<S> lcm(const Poly<S>& a, const Poly<S>& b) {
  return ((a * b) / gcd(a, b)).monic();
}

/// Minimal polynomial of a square matrix (acting on row vectors).
template <class S>
Poly<S> minimal_polynomial(const Matrix<S>& m) {
  const Index n = m.rows();
  Poly<S> acc;
  EchelonBuilder<S> covered(n);
  for (Index i = 0; i < n; ++i) {
    RowVector<S> e = RowVector<S>::Constant(n, m(0, 0) * S(0));
    e(i) = S(1) + m(0, 0) * S(0);
    if (covered.contains(e)) continue;
    EchelonBuilder<S> empty(n);
    Poly<S> g = relative_krylov_poly(m, e, empty);
    acc = acc.is_zero() ? g : lcm(acc, g);
    // Track the cyclic subspace generated by e to skip redundant vectors.
    RowVector<S> v = e;
    for (int k = 0; k < g.degree(); ++k) {
      covered.add(v);
      v = v * m;
    }
  }
  if (acc.is_zero()) acc = Poly<S>::constant(S(1));
  return acc;
}

/// Characteristic polynomial det(x I - M), via a Frobenius-type Krylov
/// decomposition.
template <class S>
Poly<S> characteristic_polynomial(const Matrix<S>& m) {
  const Index n = m.rows();
  Poly<S> acc;
  EchelonBuilder<S> w(n);
  for (Index i = 0; i < n && w.rank() < n; ++i) {
    RowVector<S> e = RowVector<S>::Constant(n, m(0, 0) * S(0));
    e(i) = S(1) + m(0, 0) * S(0);
    if (w.contains(e)) continue;
    Poly<S> g = relative_krylov_poly(m, e, w);
    acc = acc.is_zero() ? g : acc * g;
  }
  if (acc.is_zero()) acc = Poly<S>::constant(S(1));
  return acc;
}

}  // namespace spectra
