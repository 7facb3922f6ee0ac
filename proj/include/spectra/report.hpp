#pragma once

// Spectrum reports, the correspondence verification suite, and JSON / DOT
// serialization.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spectra/backend.hpp"

namespace spectra {

inline constexpr int kSchemaVersion = 1;

struct SpectrumReport {
  std::string backend;
  std::string kind;
  std::string scope;
  bool complete = true;
  std::vector<Atom> atoms;
  std::vector<std::pair<std::string, std::string>> atom_order;  ///< strict relations a < b
  std::vector<Molecule> molecules;
  std::vector<std::pair<std::string, std::string>> molecule_order;
  std::vector<std::pair<std::string, std::optional<std::string>>> phi;  ///< empty where undefined
  std::vector<std::pair<std::string, std::string>> psi;
  std::vector<Atom> amin;
  std::vector<Molecule> mmin;
  PropertyFlags atomic_flags;
  PropertyFlags molecular_flags;
  std::vector<std::string> notes;
};

SpectrumReport build_report(const SpectrumBackend& b);

struct Verification {
  SpectrumReport report;
  std::vector<Assertion> assertions;
  bool passed() const;
  std::size_t count(Assertion::Status s) const;
};

/// Runs the full assertion suite on a backend.
Verification verify_correspondence(const SpectrumBackend& b);

/// Number of antichains of a finite poset given by its <= relation, which
/// equals the number of its upward-closed subsets.
std::size_t count_antichains(const std::vector<std::vector<bool>>& leq);

nlohmann::ordered_json flags_json(const PropertyFlags& f);
nlohmann::ordered_json to_json(const SpectrumReport& r);
nlohmann::ordered_json to_json(const Assertion& a);
nlohmann::ordered_json to_json(const Verification& v);

/// Hasse diagrams of both spectra with phi (dashed) and psi (dotted) arrows.
std::string hasse_dot(const SpectrumReport& r);

}  // namespace spectra
