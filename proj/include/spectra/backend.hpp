#pragma once

// The common spectrum interface shared by artinian and commutative backends.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spectra {

/// A point of the atom spectrum, identified by its canonical label.
struct Atom {
  std::string label;
  friend bool operator==(const Atom& a, const Atom& b) { return a.label == b.label; }
  friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
};

/// A point of the molecule spectrum (a prime two-sided ideal), identified by
/// its canonical label.
struct Molecule {
  std::string label;
  friend bool operator==(const Molecule& a, const Molecule& b) { return a.label == b.label; }
  friend bool operator!=(const Molecule& a, const Molecule& b) { return !(a == b); }
};

/// Reduced / irreducible / integral.  Empty when the notion does not apply
/// to the backend.
struct PropertyFlags {
  std::optional<bool> reduced;
  std::optional<bool> irreducible;
  std::optional<bool> integral;
  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

/// The reduced part Mod(A/I), with the ideal found by each route.
struct ReducedPartDescriptor {
  std::string atomic_ideal;     ///< Jacobson radical (or its symbolic analogue)
  std::string molecular_ideal;  ///< prime radical
  std::string category;         ///< e.g. "Mod(A/J)" or "Mod Z/6"
  bool is_whole_category = false;
};

struct ArtinianizationDescriptor {
  bool identity = false;
  std::string category;
  std::vector<Atom> atoms;  ///< the minimal atoms the quotient is supported on
};

/// The Goldie localizing subcategory X = W * W and the quotient by it.
struct GoldieDescriptor {
  std::string w_ideal;              ///< ideal whose closed subcategory is W
  std::string x_ideal;              ///< ideal whose closed subcategory is X
  std::vector<Atom> x_support;      ///< ASupp X
  std::vector<Atom> surviving;      ///< ASpec of the quotient
  bool quotient_is_zero = false;
  bool quotient_is_whole = false;   ///< X = 0
};

struct QuotientRingDescriptor {
  enum class Kind { Self, FractionField, ProductOfFields, MatrixOverDivision };
  Kind kind = Kind::Self;
  std::string data;
  std::string embedding;
};

std::string to_string(QuotientRingDescriptor::Kind k);

/// Outcome of sampling the three defining clauses of a classical right
/// quotient ring.
struct QuotientRingCheck {
  int samples = 0;
  int regular_samples = 0;
  bool injective = true;
  bool regular_become_invertible = true;
  bool fractions_cover = true;
  bool ok() const { return injective && regular_become_invertible && fractions_cover; }
};

/// One named check of the verification suite.
struct Assertion {
  enum class Status { Pass, Fail, Skipped };
  std::string name;
  std::string claim;   ///< the statement being checked
  Status status = Status::Pass;
  std::string detail;
};

std::string to_string(Assertion::Status s);

class SpectrumBackend {
 public:
  virtual ~SpectrumBackend() = default;

  virtual std::string name() const = 0;
  /// "artinian", "int", "int_mod", "poly", "poly_quot" or "graded_poly".
  virtual std::string kind() const = 0;
  /// False when only a window of an infinite spectrum is exposed.
  virtual bool complete() const = 0;
  virtual std::string scope() const { return complete() ? "complete" : "window"; }

  virtual std::vector<Atom> atoms() const = 0;
  virtual std::vector<Molecule> molecules() const = 0;
  virtual bool atom_leq(const Atom& a, const Atom& b) const = 0;
  virtual bool molecule_leq(const Molecule& a, const Molecule& b) const = 0;

  /// Throws HypothesisError when the atom has no prime monoform representative.
  virtual Molecule phi(const Atom& a) const = 0;
  virtual Atom psi(const Molecule& r) const = 0;

  /// Flags from the atom side (radical of the category, |AMin|).
  virtual PropertyFlags atomic_flags() const = 0;
  /// Flags from the molecule side (prime radical, |MMin|, primeness of 0).
  virtual PropertyFlags molecular_flags() const = 0;

  virtual bool has_noetherian_generator() const { return true; }
  virtual bool is_artinian() const = 0;
  virtual bool is_semiprime() const = 0;

  /// Throws InvariantViolation if the two routes disagree.
  virtual ReducedPartDescriptor reduced_part() const = 0;
  virtual ArtinianizationDescriptor artinianization() const = 0;
  virtual GoldieDescriptor goldie() const = 0;
  /// Throws HypothesisError unless the backend is semiprime.
  virtual QuotientRingDescriptor classical_quotient_ring() const = 0;
  virtual QuotientRingCheck check_quotient_ring(int samples, std::uint64_t seed) const = 0;

  /// Backend-specific checks appended to the verification suite.
  virtual std::vector<Assertion> extra_assertions() const { return {}; }
  /// Informational notes for reports.
  virtual std::vector<std::string> notes() const { return {}; }
};

// Order helpers shared by reports and classifications.

std::vector<Atom> minimal_atoms(const SpectrumBackend& b);
std::vector<Molecule> minimal_molecules(const SpectrumBackend& b);
/// Atoms below `a` (the closure of {a} in the localizing topology).
std::vector<Atom> atoms_below(const SpectrumBackend& b, const Atom& a);
/// Atoms above `a`.
std::vector<Atom> atoms_above(const SpectrumBackend& b, const Atom& a);

bool contains(const std::vector<Atom>& xs, const Atom& a);
bool contains(const std::vector<Molecule>& xs, const Molecule& m);
std::vector<std::string> labels(const std::vector<Atom>& xs);
std::vector<std::string> labels(const std::vector<Molecule>& xs);

}  // namespace spectra
