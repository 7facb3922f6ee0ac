#include "spectra/subcategories.hpp"

#include "spectra/errors.hpp"

namespace spectra {

bool is_upward_closed(const SpectrumBackend& b, const std::vector<Atom>& xs) {
  for (const auto& x : xs)
    for (const auto& y : b.atoms())
      if (b.atom_leq(x, y) && !contains(xs, y)) return false;
  return true;
}

bool is_upward_closed(const SpectrumBackend& b, const std::vector<Molecule>& xs) {
  for (const auto& x : xs)
    for (const auto& y : b.molecules())
      if (b.molecule_leq(x, y) && !contains(xs, y)) return false;
  return true;
}

LocalizingSubcatDescriptor prime_localizing(const SpectrumBackend& b, const Atom& a) {
  LocalizingSubcatDescriptor d;
  const auto below = atoms_below(b, a);
  for (const auto& x : b.atoms())
    if (!contains(below, x)) d.atom_support.push_back(x);
  d.prime = true;
  return d;
}

LocalizingClassification classify_localizing(const SpectrumBackend& b, std::size_t max_atoms) {
  if (!b.complete()) throw PreconditionError("classify_localizing: needs the complete atom spectrum");
  const auto atoms = b.atoms();
  if (atoms.size() > max_atoms)
    throw BudgetExceeded("classify_localizing: " + std::to_string(atoms.size()) + " atoms exceed the bound " +
                         std::to_string(max_atoms));
  std::vector<std::vector<Atom>> prime_supports;
  for (const auto& a : atoms) prime_supports.push_back(prime_localizing(b, a).atom_support);

  LocalizingClassification out;
  const std::size_t n = atoms.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    LocalizingSubcatDescriptor d;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) d.atom_support.push_back(atoms[i]);
    if (!is_upward_closed(b, d.atom_support)) continue;
    for (const auto& p : prime_supports)
      if (p.size() == d.atom_support.size()) {
        bool same = true;
        for (const auto& x : p) same = same && contains(d.atom_support, x);
        d.prime = d.prime || same;
      }
    out.subcategories.push_back(std::move(d));
  }
  // Maximal proper: proper, and no other proper one strictly contains it.
  for (auto& d : out.subcategories) {
    if (d.atom_support.size() == n) continue;
    bool maximal = true;
    for (const auto& e : out.subcategories) {
      if (e.atom_support.size() == n || e.atom_support.size() <= d.atom_support.size()) continue;
      bool sup = true;
      for (const auto& x : d.atom_support) sup = sup && contains(e.atom_support, x);
      if (sup) maximal = false;
    }
    d.maximal_proper = maximal;
  }
  for (const auto& d : out.subcategories) {
    out.prime_count += d.prime ? 1 : 0;
    out.maximal_proper_count += d.maximal_proper ? 1 : 0;
  }
  return out;
}

std::vector<LocallyClosedLocalizingDescriptor> classify_locally_closed_localizing(const SpectrumBackend& b,
                                                                                  std::size_t max_molecules) {
  const auto mols = b.molecules();
  if (mols.size() > max_molecules)
    throw BudgetExceeded("classify_locally_closed_localizing: " + std::to_string(mols.size()) +
                         " molecules exceed the bound " + std::to_string(max_molecules));
  std::vector<LocallyClosedLocalizingDescriptor> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << mols.size()); ++mask) {
    LocallyClosedLocalizingDescriptor d;
    for (std::size_t i = 0; i < mols.size(); ++i)
      if (mask >> i & 1) d.molecule_support.push_back(mols[i]);
    if (is_upward_closed(b, d.molecule_support)) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace spectra
