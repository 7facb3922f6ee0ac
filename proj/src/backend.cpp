#include "spectra/backend.hpp"

#include <algorithm>

namespace spectra {

std::string to_string(QuotientRingDescriptor::Kind k) {
  switch (k) {
    case QuotientRingDescriptor::Kind::Self: return "self";
    case QuotientRingDescriptor::Kind::FractionField: return "fraction-field";
    case QuotientRingDescriptor::Kind::ProductOfFields: return "product-of-fields";
    case QuotientRingDescriptor::Kind::MatrixOverDivision: return "matrix-over-division";
  }
  return "?";
}

std::string to_string(Assertion::Status s) {
  switch (s) {
    case Assertion::Status::Pass: return "pass";
    case Assertion::Status::Fail: return "FAIL";
    case Assertion::Status::Skipped: return "skipped";
  }
  return "?";
}

std::vector<Atom> minimal_atoms(const SpectrumBackend& b) {
  const auto all = b.atoms();
  std::vector<Atom> out;
  for (const auto& a : all) {
    bool minimal = true;
    for (const auto& c : all)
      if (c != a && b.atom_leq(c, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<Molecule> minimal_molecules(const SpectrumBackend& b) {
  const auto all = b.molecules();
  std::vector<Molecule> out;
  for (const auto& m : all) {
    bool minimal = true;
    for (const auto& c : all)
      if (c != m && b.molecule_leq(c, m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  return out;
}

std::vector<Atom> atoms_below(const SpectrumBackend& b, const Atom& a) {
  std::vector<Atom> out;
  for (const auto& c : b.atoms())
    if (b.atom_leq(c, a)) out.push_back(c);
  return out;
}

std::vector<Atom> atoms_above(const SpectrumBackend& b, const Atom& a) {
  std::vector<Atom> out;
  for (const auto& c : b.atoms())
    if (b.atom_leq(a, c)) out.push_back(c);
  return out;
}

bool contains(const std::vector<Atom>& xs, const Atom& a) { return std::find(xs.begin(), xs.end(), a) != xs.end(); }

bool contains(const std::vector<Molecule>& xs, const Molecule& m) {
  return std::find(xs.begin(), xs.end(), m) != xs.end();
}

std::vector<std::string> labels(const std::vector<Atom>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.label);
  return out;
}

std::vector<std::string> labels(const std::vector<Molecule>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.label);
  return out;
}

}  // namespace spectra
