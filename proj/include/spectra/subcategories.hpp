#pragma once

// Subcategory descriptors.  A closed subcategory of Mod A is recorded by the
// two-sided ideal I with the subcategory equal to Mod(A/I); localizing and
// locally closed localizing subcategories by their supports.

#include <cstddef>
#include <string>
#include <vector>

#include "spectra/backend.hpp"

namespace spectra {

struct LocalizingSubcatDescriptor {
  std::vector<Atom> atom_support;
  bool prime = false;           ///< complement of the closure of one atom
  bool maximal_proper = false;
};

struct LocalizingClassification {
  std::vector<LocalizingSubcatDescriptor> subcategories;
  std::size_t prime_count = 0;
  std::size_t maximal_proper_count = 0;
};

/// All localizing subsets (upward-closed subsets of ASpec) of a complete
/// backend with at most `max_atoms` atoms.
LocalizingClassification classify_localizing(const SpectrumBackend& b, std::size_t max_atoms = 8);

/// The prime localizing subcategory attached to an atom: its support is the
/// complement of the atoms below it.
LocalizingSubcatDescriptor prime_localizing(const SpectrumBackend& b, const Atom& a);

struct LocallyClosedLocalizingDescriptor {
  std::vector<Molecule> molecule_support;
};

/// All upward-closed subsets of the (possibly windowed) molecule order.
std::vector<LocallyClosedLocalizingDescriptor> classify_locally_closed_localizing(const SpectrumBackend& b,
                                                                                  std::size_t max_molecules = 16);

bool is_upward_closed(const SpectrumBackend& b, const std::vector<Atom>& xs);
bool is_upward_closed(const SpectrumBackend& b, const std::vector<Molecule>& xs);

}  // namespace spectra
