#pragma once

// Fixture files: line-oriented `key = value` entries under `[section]` or
// `[section argument]` headers; `#` starts a comment.  Polynomials are
// coefficient lists, low degree first.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectra/artinian.hpp"
#include "spectra/commutative.hpp"
#include "spectra/errors.hpp"

namespace spectra {

class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct FixtureEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct FixtureSection {
  std::string name;
  std::string argument;
  int line = 0;
  std::vector<FixtureEntry> entries;

  const FixtureEntry* find(const std::string& key) const;
  /// Throws ParseError naming the section when the key is missing.
  const FixtureEntry& get(const std::string& key) const;
  std::vector<const FixtureEntry*> all(const std::string& key) const;
};

struct Fixture {
  std::vector<FixtureSection> sections;

  const FixtureSection* section(const std::string& name) const;
  std::vector<const FixtureSection*> all(const std::string& name) const;
};

/// Equality of content, ignoring line numbers.
bool same_content(const Fixture& a, const Fixture& b);

Fixture parse_fixture(const std::string& text);
Fixture load_fixture_file(const std::string& path);
std::string serialize_fixture(const Fixture& f);

// Value helpers (errors carry the entry's line).
std::vector<std::int64_t> parse_int_list(const FixtureEntry& e);
std::int64_t parse_int(const FixtureEntry& e);

/// A fixture turned into a backend, plus any modules it declares.
struct LoadedFixture {
  std::shared_ptr<const SpectrumBackend> backend;
  std::shared_ptr<const ArtinianBackend<Zp>> fp;         ///< artinian over F_p
  std::shared_ptr<const ArtinianBackend<Rational>> q;    ///< artinian over Q
  std::shared_ptr<const GradedBackend> graded;
  std::shared_ptr<const IntegerBackend> integers;
  std::vector<std::pair<std::string, RightModule<Zp>>> fp_modules;
  std::vector<std::pair<std::string, RightModule<Rational>>> q_modules;
  std::vector<std::pair<std::string, GradedModuleDescriptor>> graded_modules;
};

/// Builds the backend.  `window` overrides the fixture's window entry;
/// infinite backends without any window raise ParseError.
LoadedFixture load_backend(const Fixture& f, std::optional<int> window = std::nullopt);

/// The algebra described by an artinian fixture.
template <class S>
AlgebraPtr<S> fixture_algebra(const Fixture& f, const Field<S>& field);

}  // namespace spectra
