// spectra: command-line front end for the spectrum library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spectra/analyze.hpp"
#include "spectra/closed.hpp"
#include "spectra/oracle_check.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kParse = 2;
constexpr int kCapability = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw spectra::InvalidInput("cannot write " + path);
  out << text;
}

std::optional<int> window_of(int w) { return w >= 0 ? std::optional<int>(w) : std::nullopt; }

int cmd_analyze(const std::string& path, const spectra::AnalyzeOptions& opts, int window, const std::string& out) {
  const auto f = spectra::load_backend(spectra::load_fixture_file(path), window_of(window));
  write_output(spectra::analyze(f, opts).dump(2) + "\n", out);
  return kOk;
}

int cmd_verify(const std::string& path, int window, bool as_json) {
  const auto f = spectra::load_backend(spectra::load_fixture_file(path), window_of(window));
  const auto v = spectra::verify_correspondence(*f.backend);
  if (as_json) {
    json j;
    j["schema_version"] = spectra::kSchemaVersion;
    j["backend"] = v.report.backend;
    j["scope"] = v.report.scope;
    j["verification"] = spectra::to_json(v);
    j["flags"] = {{"atomic", spectra::flags_json(v.report.atomic_flags)},
                  {"molecular", spectra::flags_json(v.report.molecular_flags)}};
    j["notes"] = v.report.notes;
    std::cout << j.dump(2) << "\n";
  } else {
    using S = spectra::Assertion::Status;
    std::cout << "backend: " << v.report.backend << " (" << v.report.scope << ")\n";
    for (const auto& a : v.assertions) {
      std::cout << (a.status == S::Pass ? "PASS " : a.status == S::Fail ? "FAIL " : "SKIP ") << a.name;
      if (!a.detail.empty()) std::cout << ": " << a.detail;
      if (a.status == S::Fail) std::cout << " [violated: " << a.claim << "]";
      std::cout << "\n";
    }
    for (const auto& n : v.report.notes) std::cout << "note: " << n << "\n";
    auto flag = [](const std::optional<bool>& x) { return x ? (*x ? "true" : "false") : "n/a"; };
    const auto& fl = v.report.atomic_flags;
    std::cout << "flags: reduced=" << flag(fl.reduced) << " irreducible=" << flag(fl.irreducible)
              << " integral=" << flag(fl.integral) << "\n";
    std::cout << (v.passed() ? "verify: PASS" : "verify: FAIL") << " (" << v.assertions.size() << " assertions, "
              << v.count(S::Pass) << " passed, " << v.count(S::Fail) << " failed, " << v.count(S::Skipped)
              << " skipped)\n";
  }
  return v.passed() ? kOk : kFailed;
}

int cmd_hasse(const std::string& path, int window, const std::string& dot, bool closed) {
  const auto f = spectra::load_backend(spectra::load_fixture_file(path), window_of(window));
  if (closed) {
    if (f.fp) write_output(spectra::closed_lattice_dot(*f.fp), dot);
    else if (f.q) write_output(spectra::closed_lattice_dot(*f.q), dot);
    else throw spectra::CapabilityError("hasse --closed: needs an artinian fixture");
    return kOk;
  }
  write_output(spectra::hasse_dot(spectra::build_report(*f.backend)), dot);
  return kOk;
}

json comparison_json(const spectra::OracleComparison& c) {
  json j;
  j["algebra"] = c.algebra;
  j["modules"] = c.modules;
  j["checked"] = c.checked();
  j["disagreements"] = c.disagreement_count();
  j["predicates"] = json::array();
  for (const auto& t : c.tallies)
    j["predicates"].push_back({{"name", t.name}, {"checked", t.checked}, {"disagreements", t.disagreements}});
  return j;
}

int cmd_oracle(const std::string& path, bool exhaustive, bool corpus, bool as_json) {
  std::vector<spectra::OracleComparison> results;
  if (corpus) {
    for (const auto& e : spectra::corpus(0)) {
      if (e.algebra->field().size() != 2 || e.algebra->dim() > 4) continue;
      spectra::ArtinianBackend<spectra::Zp> b(e.algebra, e.name);
      results.push_back(spectra::compare_with_oracle(b, {}, exhaustive));
    }
  } else {
    if (path.empty()) throw spectra::InvalidInput("oracle: give a fixture path or --corpus");
    const auto f = spectra::load_backend(spectra::load_fixture_file(path));
    if (!f.fp) throw spectra::CapabilityError("oracle: needs an artinian fixture over a prime field");
    results.push_back(spectra::compare_with_oracle(*f.fp, f.fp_modules, exhaustive));
  }
  std::size_t bad = 0;
  for (const auto& r : results) bad += r.disagreement_count();
  if (as_json) {
    json j;
    j["schema_version"] = spectra::kSchemaVersion;
    j["exhaustive"] = exhaustive;
    j["results"] = json::array();
    for (const auto& r : results) j["results"].push_back(comparison_json(r));
    j["disagreements"] = bad;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << r.algebra << ": " << r.checked() << " comparisons on " << r.modules << " modules, "
                << r.disagreement_count() << " disagreements\n";
      for (const auto& t : r.tallies)
        for (const auto& d : t.disagreements) std::cout << "  " << t.name << ": " << d << "\n";
    }
    std::cout << (bad == 0 ? "oracle: AGREE" : "oracle: DISAGREE") << "\n";
  }
  return bad == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atom and molecule spectra of module categories"};
  app.require_subcommand(1);

  std::string path, out, dot;
  int window = -1;
  std::uint64_t seed = 0;
  bool as_json = false, exhaustive = false, corpus = false, closed = false;
  spectra::AnalyzeOptions opts;

  auto* analyze = app.add_subcommand("analyze", "JSON report of the spectra of a fixture");
  analyze->add_option("fixture", path, "fixture file")->required();
  analyze->add_flag("--atoms", opts.atoms, "atom spectrum section");
  analyze->add_flag("--molecules", opts.molecules, "molecule spectrum section");
  analyze->add_flag("--phi-psi", opts.phi_psi, "phi and psi maps");
  analyze->add_flag("--radical", opts.radical, "reduced part and artinianization");
  analyze->add_flag("--subcats", opts.subcats, "subcategory classifications");
  analyze->add_flag("--goldie", opts.goldie, "Goldie subcategory and quotient ring");
  analyze->add_option("--window", window, "window size for infinite spectra");
  analyze->add_option("--seed", seed, "seed for sampled checks");
  analyze->add_flag("--json", as_json, "JSON output (the default)");
  analyze->add_option("--out", out, "write the report to a file");

  auto* verify = app.add_subcommand("verify", "run the correspondence assertion suite");
  verify->add_option("fixture", path, "fixture file")->required();
  verify->add_option("--window", window, "window size for infinite spectra");
  verify->add_option("--seed", seed, "unused; accepted for uniformity");
  verify->add_flag("--json", as_json, "JSON output");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagrams of both spectra in DOT");
  hasse->add_option("fixture", path, "fixture file")->required();
  hasse->add_option("--window", window, "window size for infinite spectra");
  hasse->add_option("--dot", dot, "output path (stdout when omitted)");
  hasse->add_flag("--closed", closed, "lattice of closed subcategories with radical ideal instead");

  auto* oracle = app.add_subcommand("oracle", "compare fast predicates with brute-force definitions");
  oracle->add_option("fixture", path, "artinian fixture over a prime field");
  oracle->add_flag("--exhaustive", exhaustive, "also test every right ideal and cyclic quotient");
  oracle->add_flag("--corpus", corpus, "run on the built-in corpus over F2 up to dimension 4");
  oracle->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  opts.seed = seed;

  try {
    if (*analyze) return cmd_analyze(path, opts, window, out);
    if (*verify) return cmd_verify(path, window, as_json);
    if (*hasse) return cmd_hasse(path, window, dot, closed);
    if (*oracle) return cmd_oracle(path, exhaustive, corpus, as_json);
  } catch (const spectra::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const spectra::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kCapability;
  } catch (const spectra::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kCapability;
  } catch (const spectra::HypothesisError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kCapability;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kFailed;
}
