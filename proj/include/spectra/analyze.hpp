#pragma once

// Report assembly behind the command-line front end.

#include <cstdint>

#include "json.hpp"
#include "spectra/fixture.hpp"
#include "spectra/report.hpp"

namespace spectra {

struct AnalyzeOptions {
  bool atoms = false;
  bool molecules = false;
  bool phi_psi = false;
  bool radical = false;
  bool subcats = false;
  bool goldie = false;
  std::uint64_t seed = 0;
  int quotient_samples = 100;

  /// No section flag set means every section.
  bool any() const { return atoms || molecules || phi_psi || radical || subcats || goldie; }
};

/// The analysis report.  HypothesisError inside a section is recorded as an
/// "unavailable" entry; other errors propagate.
nlohmann::ordered_json analyze(const LoadedFixture& f, AnalyzeOptions opts);

/// Per-module invariants for the modules a fixture declares.
nlohmann::ordered_json module_report(const LoadedFixture& f);

}  // namespace spectra
