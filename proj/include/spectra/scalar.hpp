#pragma once

// Exact field elements usable as Eigen scalars: residues modulo a prime and
// arbitrary-precision rationals.  A `Field<S>` object carries the runtime
// data (the modulus) and produces elements.

#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace spectra {

/// Residue class modulo a prime p < 2^31.
///
/// Eigen materializes integer literals (`Scalar(0)`, `Scalar(1)`) without
/// knowing the modulus.  Such values are kept "unbound" (p == 0, signed
/// integer payload) and adopt the modulus of the first bound operand they
/// meet.  Two bound operands must share a modulus.
class Zp {
 public:
  Zp() = default;
  Zp(int v) : raw_(v) {}  // NOLINT: implicit literal conversion for Eigen
  Zp(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p == 0) {
      raw_ = v;
    } else {
      std::int64_t r = v % static_cast<std::int64_t>(p);
      raw_ = r < 0 ? r + p : r;
    }
  }

  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  /// Canonical representative in [0, p) (or the raw literal when unbound).
  std::int64_t value() const { return raw_; }

  bool is_zero() const { return raw_ == 0; }

  friend Zp operator+(const Zp& a, const Zp& b) {
    auto p = common(a, b);
    return Zp(a.in(p) + b.in(p), p);
  }
  friend Zp operator-(const Zp& a, const Zp& b) {
    auto p = common(a, b);
    return Zp(a.in(p) - b.in(p), p);
  }
  friend Zp operator*(const Zp& a, const Zp& b) {
    auto p = common(a, b);
    if (p == 0) return Zp(a.raw_ * b.raw_, 0);
    return Zp(static_cast<std::int64_t>((static_cast<std::uint64_t>(a.in(p)) *
                                         static_cast<std::uint64_t>(b.in(p))) %
                                        p),
              p);
  }
  friend Zp operator/(const Zp& a, const Zp& b) { return a * b.inverse(); }
  Zp operator-() const { return p_ == 0 ? Zp(-raw_, 0) : Zp(-raw_, p_); }
  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }
  Zp& operator/=(const Zp& o) { return *this = *this / o; }

  friend bool operator==(const Zp& a, const Zp& b) {
    auto p = common(a, b);
    return a.in(p) == b.in(p);
  }
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }
  /// Total order on canonical representatives (used for deterministic sorting).
  friend bool operator<(const Zp& a, const Zp& b) {
    auto p = common(a, b);
    return a.in(p) < b.in(p);
  }

  Zp inverse() const {
    if (p_ == 0) {
      if (raw_ == 1 || raw_ == -1) return *this;
      throw std::domain_error("Zp: inverse of unbound literal");
    }
    if (raw_ == 0) throw std::domain_error("Zp: division by zero");
    return pow(p_ - 2);
  }

  Zp pow(std::uint64_t e) const {
    Zp base = *this;
    Zp acc(1, p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.raw_; }

 private:
  static std::uint32_t common(const Zp& a, const Zp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw std::invalid_argument("Zp: modulus mismatch");
    return a.p_ ? a.p_ : b.p_;
  }
  std::int64_t in(std::uint32_t p) const {
    if (p == 0 || p_ == p) return raw_;
    std::int64_t r = raw_ % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }

  std::int64_t raw_ = 0;
  std::uint32_t p_ = 0;
};

using BigInt = boost::multiprecision::cpp_int;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

/// Rational number with arbitrary-precision numerator and denominator,
/// always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT: implicit literal conversion for Eigen
  Rational(long long v) : q_(v) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den) : q_(num, den) {}
  explicit Rational(BigRational q) : q_(std::move(q)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(q_); }
  BigInt denominator() const { return boost::multiprecision::denominator(q_); }
  const BigRational& raw() const { return q_; }
  bool is_zero() const { return q_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.q_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.q_ / b.q_);
  }
  Rational operator-() const { return Rational(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  Rational inverse() const { return Rational(1) / *this; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.q_.str(); }

 private:
  BigRational q_;
};

inline std::string to_string(const Zp& a) { return std::to_string(a.value()); }
inline std::string to_string(const Rational& a) { return a.raw().str(); }

inline bool is_zero(const Zp& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return a.is_zero(); }

// Eigen occasionally asks for these through ADL; exact scalars are their own "real" part.
inline const Zp& conj(const Zp& x) { return x; }
inline const Zp& real(const Zp& x) { return x; }
inline Zp imag(const Zp&) { return Zp(0); }
inline Zp abs(const Zp& x) { return x; }
inline Zp abs2(const Zp& x) { return x * x; }
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational abs(const Rational& x) { return x < Rational(0) ? -x : x; }
inline Rational abs2(const Rational& x) { return x * x; }

/// Runtime descriptor of the coefficient field of scalar type `S`.
template <class S>
class Field;

template <>
class Field<Zp> {
 public:
  using Scalar = Zp;
  explicit Field(std::uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("Field<Zp>: modulus must be a prime >= 2");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("Field<Zp>: modulus " + std::to_string(p) + " is not prime");
  }
  Zp zero() const { return Zp(0, p_); }
  Zp one() const { return Zp(1, p_); }
  Zp from_int(std::int64_t v) const { return Zp(v, p_); }
  Zp bind(const Zp& v) const { return Zp(v.value(), p_); }
  std::uint32_t characteristic() const { return p_; }
  bool is_finite() const { return true; }
  /// Number of elements.
  std::uint64_t size() const { return p_; }
  Zp element(std::uint64_t i) const { return Zp(static_cast<std::int64_t>(i), p_); }
  std::uint64_t index_of(const Zp& v) const { return static_cast<std::uint64_t>(bind(v).value()); }
  template <class Rng>
  Zp random(Rng& rng) const {
    std::uniform_int_distribution<std::int64_t> d(0, p_ - 1);
    return Zp(d(rng), p_);
  }
  std::string name() const { return "F" + std::to_string(p_); }
  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <>
class Field<Rational> {
 public:
  using Scalar = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(static_cast<long long>(v)); }
  const Rational& bind(const Rational& v) const { return v; }
  std::uint32_t characteristic() const { return 0; }
  bool is_finite() const { return false; }
  std::uint64_t size() const { return 0; }
  Rational element(std::uint64_t) const { throw std::logic_error("Field<Rational>: not enumerable"); }
  std::uint64_t index_of(const Rational&) const { throw std::logic_error("Field<Rational>: not enumerable"); }
  template <class Rng>
  Rational random(Rng& rng) const {
    std::uniform_int_distribution<long long> d(-9, 9);
    return Rational(d(rng));
  }
  std::string name() const { return "Q"; }
  friend bool operator==(const Field&, const Field&) { return true; }
};

using PrimeField = Field<Zp>;
using RationalField = Field<Rational>;

template <class S>
inline constexpr bool is_finite_scalar_v = std::is_same_v<S, Zp>;

}  // namespace spectra

namespace Eigen {

template <>
struct NumTraits<spectra::Zp> : GenericNumTraits<spectra::Zp> {
  using Real = spectra::Zp;
  using NonInteger = spectra::Zp;
  using Nested = spectra::Zp;
  using Literal = spectra::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<spectra::Rational> : GenericNumTraits<spectra::Rational> {
  using Real = spectra::Rational;
  using NonInteger = spectra::Rational;
  using Nested = spectra::Rational;
  using Literal = spectra::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
