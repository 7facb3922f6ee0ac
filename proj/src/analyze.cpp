#include "spectra/analyze.hpp"

#include "spectra/goldie.hpp"
#include "spectra/subcategories.hpp"

namespace spectra {

namespace {

using json = nlohmann::ordered_json;

template <class F>
json guarded(F&& f) {
  try {
    return f();
  } catch (const HypothesisError& e) {
    return json{{"unavailable", e.what()}};
  }
}

json pairs_json(const std::vector<std::pair<std::string, std::string>>& xs) {
  json j = json::array();
  for (const auto& [x, y] : xs) j.push_back({x, y});
  return j;
}

json phi_psi_section(const SpectrumBackend& b, const SpectrumReport& r) {
  json j;
  j["phi"] = json::object();
  for (const auto& [a, m] : r.phi) {
    if (m) j["phi"][a] = *m;
    else j["phi"][a] = nullptr;
  }
  j["psi"] = json::object();
  for (const auto& [m, a] : r.psi) j["psi"][m] = a;
  bool identity = true;
  for (const auto& m : b.molecules()) identity = identity && b.phi(b.psi(m)) == m;
  j["phi_psi_identity"] = identity;
  j["checked_molecules"] = r.molecules.size();
  return j;
}

json radical_section(const SpectrumBackend& b) {
  json j;
  j["reduced_part"] = guarded([&] {
    const auto d = b.reduced_part();
    return json{{"atomic_ideal", d.atomic_ideal},
                {"molecular_ideal", d.molecular_ideal},
                {"routes_agree", d.atomic_ideal == d.molecular_ideal},
                {"category", d.category},
                {"is_whole_category", d.is_whole_category}};
  });
  j["artinianization"] = guarded([&] {
    const auto d = b.artinianization();
    return json{{"identity", d.identity}, {"category", d.category}, {"atoms", labels(d.atoms)}};
  });
  return j;
}

json subcats_section(const SpectrumBackend& b) {
  json j;
  if (b.complete()) {
    const auto c = classify_localizing(b);
    json loc;
    loc["count"] = c.subcategories.size();
    loc["prime_count"] = c.prime_count;
    loc["maximal_proper_count"] = c.maximal_proper_count;
    loc["subcategories"] = json::array();
    for (const auto& d : c.subcategories)
      loc["subcategories"].push_back(
          {{"atom_support", labels(d.atom_support)}, {"prime", d.prime}, {"maximal_proper", d.maximal_proper}});
    j["localizing"] = loc;
  } else {
    j["localizing"] = json{{"unavailable", "localizing classification needs the complete atom spectrum"}};
  }
  const auto lc = classify_locally_closed_localizing(b);
  json l;
  l["count"] = lc.size();
  l["subcategories"] = json::array();
  for (const auto& d : lc) l["subcategories"].push_back(labels(d.molecule_support));
  if (!b.complete()) l["scope"] = b.scope();
  j["locally_closed_localizing"] = l;
  j["prime_localizing"] = json::object();
  for (const auto& a : b.atoms()) j["prime_localizing"][a.label] = labels(prime_localizing(b, a).atom_support);
  return j;
}

json goldie_section(const SpectrumBackend& b, const AnalyzeOptions& opts) {
  json j;
  j["semiprime"] = b.is_semiprime();
  j["goldie"] = guarded([&] {
    const auto g = b.goldie();
    return json{{"w_ideal", g.w_ideal},
                {"x_ideal", g.x_ideal},
                {"x_support", labels(g.x_support)},
                {"surviving_atoms", labels(g.surviving)},
                {"quotient_is_zero", g.quotient_is_zero},
                {"quotient_is_whole", g.quotient_is_whole}};
  });
  j["classical_quotient_ring"] = guarded([&] {
    const auto q = b.classical_quotient_ring();
    const auto c = b.check_quotient_ring(opts.quotient_samples, opts.seed);
    return json{{"kind", to_string(q.kind)},
                {"data", q.data},
                {"embedding", q.embedding},
                {"check",
                 {{"samples", c.samples},
                  {"regular_samples", c.regular_samples},
                  {"injective", c.injective},
                  {"regular_become_invertible", c.regular_become_invertible},
                  {"fractions_cover", c.fractions_cover}}}};
  });
  return j;
}

template <class S>
json artinian_module_json(const ArtinianBackend<S>& b, const RightModule<S>& m) {
  json j;
  j["dim"] = m.dim();
  j["ass"] = labels(b.ass_atoms(m));
  j["asupp"] = labels(b.asupp(m));
  j["mass"] = labels(b.mass(m));
  j["msupp"] = labels(b.msupp(m));
  if (m.dim() == 0) return j;
  j["monoform"] = is_monoform(m);
  j["compressible"] = is_compressible(m);
  j["prime"] = is_prime_object(m);
  j["singular_dim"] = singular_space(m).dim();
  j["nonsingular"] = is_nonsingular(m);
  j["essentially_compressible"] = is_essentially_compressible(m);
  return j;
}

}  // namespace

json module_report(const LoadedFixture& f) {
  json j = json::object();
  if (f.fp)
    for (const auto& [name, m] : f.fp_modules) j[name] = artinian_module_json(*f.fp, m);
  if (f.q)
    for (const auto& [name, m] : f.q_modules) j[name] = artinian_module_json(*f.q, m);
  if (f.graded)
    for (const auto& [name, m] : f.graded_modules)
      j[name] = {{"ass", labels(f.graded->ass_atoms(m))},
                 {"asupp", labels(f.graded->asupp(m))},
                 {"mass", labels(f.graded->mass(m))},
                 {"prime", f.graded->is_prime_object(m)}};
  return j;
}

json analyze(const LoadedFixture& f, AnalyzeOptions opts) {
  if (!opts.any()) opts.atoms = opts.molecules = opts.phi_psi = opts.radical = opts.subcats = opts.goldie = true;
  const SpectrumBackend& b = *f.backend;
  const SpectrumReport r = build_report(b);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["backend"] = r.backend;
  j["kind"] = r.kind;
  j["scope"] = r.scope;
  j["complete"] = r.complete;
  if (opts.atoms)
    j["atoms"] = {{"labels", labels(r.atoms)},
                  {"count", r.atoms.size()},
                  {"order", pairs_json(r.atom_order)},
                  {"minimal", labels(r.amin)},
                  {"flags", flags_json(r.atomic_flags)}};
  if (opts.molecules)
    j["molecules"] = {{"labels", labels(r.molecules)},
                      {"count", r.molecules.size()},
                      {"order", pairs_json(r.molecule_order)},
                      {"minimal", labels(r.mmin)},
                      {"flags", flags_json(r.molecular_flags)}};
  if (opts.phi_psi) j["phi_psi"] = phi_psi_section(b, r);
  if (opts.radical) j["radical"] = radical_section(b);
  if (opts.subcats) j["subcategories"] = subcats_section(b);
  if (opts.goldie) j["goldie"] = goldie_section(b, opts);
  const json mods = module_report(f);
  if (!mods.empty()) j["modules"] = mods;
  j["notes"] = r.notes;
  return j;
}

}  // namespace spectra
