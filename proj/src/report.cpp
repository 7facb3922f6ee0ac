#include "spectra/report.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "spectra/errors.hpp"
#include "spectra/subcategories.hpp"

namespace spectra {

namespace {

using Status = Assertion::Status;

Assertion make(std::string name, std::string claim) { return {std::move(name), std::move(claim), Status::Pass, ""}; }

void fail(Assertion& a, const std::string& why) {
  a.status = Status::Fail;
  if (!a.detail.empty()) a.detail += "; ";
  a.detail += why;
}

void skip(Assertion& a, const std::string& why) {
  a.status = Status::Skipped;
  a.detail = why;
}

template <class T, class Leq>
void check_partial_order(Assertion& a, const std::vector<T>& xs, Leq leq) {
  for (const auto& x : xs) {
    if (!leq(x, x)) fail(a, "not reflexive at " + x.label);
    for (const auto& y : xs) {
      if (x != y && leq(x, y) && leq(y, x)) fail(a, "not antisymmetric at " + x.label + ", " + y.label);
      if (!leq(x, y)) continue;
      for (const auto& z : xs)
        if (leq(y, z) && !leq(x, z)) fail(a, "not transitive at " + x.label + ", " + y.label + ", " + z.label);
    }
  }
  if (a.status == Status::Pass) a.detail = std::to_string(xs.size()) + " elements";
}

std::optional<Molecule> try_phi(const SpectrumBackend& b, const Atom& a) {
  try {
    return b.phi(a);
  } catch (const HypothesisError&) {
    return std::nullopt;
  }
}

std::string flag_str(const std::optional<bool>& f) { return f ? (*f ? "true" : "false") : "n/a"; }

std::string flags_str(const PropertyFlags& f) {
  return "reduced=" + flag_str(f.reduced) + " irreducible=" + flag_str(f.irreducible) + " integral=" + flag_str(f.integral);
}

template <class T, class Leq>
std::vector<std::vector<bool>> leq_matrix(const std::vector<T>& xs, Leq leq) {
  std::vector<std::vector<bool>> m(xs.size(), std::vector<bool>(xs.size(), false));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) m[i][j] = leq(xs[i], xs[j]);
  return m;
}

}  // namespace

std::size_t count_antichains(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::size_t count = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      ++count;
      return;
    }
    rec(i + 1);
    for (auto c : chosen)
      if (leq[c][i] || leq[i][c]) return;
    chosen.push_back(i);
    rec(i + 1);
    chosen.pop_back();
  };
  rec(0);
  return count;
}

SpectrumReport build_report(const SpectrumBackend& b) {
  SpectrumReport r;
  r.backend = b.name();
  r.kind = b.kind();
  r.scope = b.scope();
  r.complete = b.complete();
  r.atoms = b.atoms();
  r.molecules = b.molecules();
  for (const auto& x : r.atoms)
    for (const auto& y : r.atoms)
      if (x != y && b.atom_leq(x, y)) r.atom_order.emplace_back(x.label, y.label);
  for (const auto& x : r.molecules)
    for (const auto& y : r.molecules)
      if (x != y && b.molecule_leq(x, y)) r.molecule_order.emplace_back(x.label, y.label);
  bool partial = false;
  for (const auto& x : r.atoms) {
    auto m = try_phi(b, x);
    partial = partial || !m;
    r.phi.emplace_back(x.label, m ? std::optional<std::string>(m->label) : std::nullopt);
  }
  for (const auto& m : r.molecules) r.psi.emplace_back(m.label, b.psi(m).label);
  r.amin = minimal_atoms(b);
  r.mmin = minimal_molecules(b);
  r.atomic_flags = b.atomic_flags();
  r.molecular_flags = b.molecular_flags();
  r.notes = b.notes();
  if (partial) r.notes.push_back("phi partial: some atoms have no prime monoform representative");
  if (!r.complete) r.notes.push_back("spectrum windowed: assertions are scoped to " + r.scope);
  return r;
}

bool Verification::passed() const {
  return std::none_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.status == Status::Fail; });
}

std::size_t Verification::count(Assertion::Status s) const {
  return static_cast<std::size_t>(
      std::count_if(assertions.begin(), assertions.end(), [s](const Assertion& a) { return a.status == s; }));
}

Verification verify_correspondence(const SpectrumBackend& b) {
  Verification v;
  v.report = build_report(b);
  const auto& atoms = v.report.atoms;
  const auto& mols = v.report.molecules;
  auto aleq = [&](const Atom& x, const Atom& y) { return b.atom_leq(x, y); };
  auto mleq = [&](const Molecule& x, const Molecule& y) { return b.molecule_leq(x, y); };

  std::vector<std::optional<Molecule>> phi;
  for (const auto& x : atoms) phi.push_back(try_phi(b, x));
  std::vector<Atom> psi;
  for (const auto& m : mols) psi.push_back(b.psi(m));

  auto a1 = make("atom-order", "the order on ASpec is a partial order");
  check_partial_order(a1, atoms, aleq);
  v.assertions.push_back(a1);

  auto a2 = make("molecule-order", "the order on MSpec is a partial order");
  check_partial_order(a2, mols, mleq);
  v.assertions.push_back(a2);

  auto a3 = make("phi-psi-identity", "phi(psi(r)) = r for every molecule r");
  for (std::size_t i = 0; i < mols.size(); ++i) {
    auto back = try_phi(b, psi[i]);
    if (!back) fail(a3, "phi undefined on psi(" + mols[i].label + ") = " + psi[i].label);
    else if (*back != mols[i]) fail(a3, "phi(psi(" + mols[i].label + ")) = " + back->label);
  }
  if (a3.status == Status::Pass) a3.detail = std::to_string(mols.size()) + " molecules";
  v.assertions.push_back(a3);

  auto a4 = make("phi-monotone", "a <= b implies phi(a) <= phi(b)");
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (phi[i] && phi[j] && aleq(atoms[i], atoms[j]) && !mleq(*phi[i], *phi[j]))
        fail(a4, atoms[i].label + " <= " + atoms[j].label + " but images are not ordered");
  v.assertions.push_back(a4);

  auto a5 = make("psi-monotone", "r <= s implies psi(r) <= psi(s)");
  for (std::size_t i = 0; i < mols.size(); ++i)
    for (std::size_t j = 0; j < mols.size(); ++j)
      if (mleq(mols[i], mols[j]) && !aleq(psi[i], psi[j]))
        fail(a5, mols[i].label + " <= " + mols[j].label + " but images are not ordered");
  v.assertions.push_back(a5);

  auto a6 = make("adjunction", "psi(r) <= a iff r <= phi(a)");
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!phi[i]) continue;
    for (std::size_t j = 0; j < mols.size(); ++j) {
      ++pairs;
      if (aleq(psi[j], atoms[i]) != mleq(mols[j], *phi[i])) fail(a6, "fails at " + atoms[i].label + ", " + mols[j].label);
    }
  }
  if (a6.status == Status::Pass) a6.detail = std::to_string(pairs) + " pairs";
  v.assertions.push_back(a6);

  auto a7 = make("minimal-bijection", "phi restricts to a bijection AMin -> MMin with inverse psi");
  const auto& amin = v.report.amin;
  const auto& mmin = v.report.mmin;
  if (!b.has_noetherian_generator()) {
    skip(a7, "hypothesis fails: no noetherian generator");
  } else {
    std::vector<Molecule> image;
    for (const auto& a : amin) {
      auto m = try_phi(b, a);
      if (!m) {
        fail(a7, "phi undefined on minimal atom " + a.label);
        continue;
      }
      if (!contains(mmin, *m)) fail(a7, "phi(" + a.label + ") = " + m->label + " is not minimal");
      if (contains(image, *m)) fail(a7, "phi not injective on AMin at " + m->label);
      image.push_back(*m);
      if (b.psi(*m) != a) fail(a7, "psi(phi(" + a.label + ")) != " + a.label);
    }
    for (const auto& m : mmin)
      if (!contains(amin, b.psi(m))) fail(a7, "psi(" + m.label + ") is not a minimal atom");
    if (amin.size() != mmin.size()) fail(a7, "|AMin| = " + std::to_string(amin.size()) + ", |MMin| = " + std::to_string(mmin.size()));
    if (a7.status == Status::Pass) a7.detail = "|AMin| = |MMin| = " + std::to_string(amin.size());
  }
  v.assertions.push_back(a7);

  auto a8 = make("minimal-finite", "AMin and MMin are finite and every point lies above a minimal one");
  for (const auto& a : atoms)
    if (std::none_of(amin.begin(), amin.end(), [&](const Atom& m) { return aleq(m, a); }))
      fail(a8, a.label + " lies above no minimal atom");
  for (const auto& r : mols)
    if (std::none_of(mmin.begin(), mmin.end(), [&](const Molecule& m) { return mleq(m, r); }))
      fail(a8, r.label + " lies above no minimal molecule");
  if (!atoms.empty() && amin.empty()) fail(a8, "no minimal atom");
  v.assertions.push_back(a8);

  auto a9 = make("reduced-part", "ared = mred: the atomic and molecular radicals coincide");
  try {
    auto rp = b.reduced_part();
    a9.detail = rp.category;
  } catch (const HypothesisError& e) {
    skip(a9, e.what());
  } catch (const InvariantViolation& e) {
    fail(a9, e.what());
  }
  v.assertions.push_back(a9);

  auto a10 = make("property-flags", "atomic and molecular reduced / irreducible / integral flags agree");
  if (v.report.atomic_flags != v.report.molecular_flags)
    fail(a10, "atomic " + flags_str(v.report.atomic_flags) + " vs molecular " + flags_str(v.report.molecular_flags));
  else
    a10.detail = flags_str(v.report.atomic_flags);
  v.assertions.push_back(a10);

  for (auto& extra : b.extra_assertions()) v.assertions.push_back(std::move(extra));

  auto a13 = make("localizing-classification",
                  "localizing subcategories <-> upward-closed subsets of ASpec; primes <-> atoms; maximal proper <-> AMin");
  if (!b.complete()) {
    skip(a13, "spectrum is windowed");
  } else {
    auto c = classify_localizing(b, 16);
    const std::size_t expect = count_antichains(leq_matrix(atoms, aleq));
    if (c.subcategories.size() != expect)
      fail(a13, std::to_string(c.subcategories.size()) + " subcategories, expected " + std::to_string(expect));
    if (c.prime_count != atoms.size()) fail(a13, std::to_string(c.prime_count) + " prime ones for " + std::to_string(atoms.size()) + " atoms");
    if (c.maximal_proper_count != amin.size())
      fail(a13, std::to_string(c.maximal_proper_count) + " maximal proper ones for |AMin| = " + std::to_string(amin.size()));
    if (a13.status == Status::Pass)
      a13.detail = std::to_string(c.subcategories.size()) + " subcategories, " + std::to_string(c.prime_count) + " prime, " +
                   std::to_string(c.maximal_proper_count) + " maximal proper";
  }
  v.assertions.push_back(a13);

  auto a14 = make("locally-closed-classification",
                  "locally closed localizing subcategories <-> upward-closed subsets of MSpec");
  {
    auto c = classify_locally_closed_localizing(b, 20);
    const std::size_t expect = count_antichains(leq_matrix(mols, mleq));
    if (c.size() != expect) fail(a14, std::to_string(c.size()) + " subcategories, expected " + std::to_string(expect));
    else a14.detail = std::to_string(c.size()) + " subcategories";
  }
  v.assertions.push_back(a14);
  return v;
}

nlohmann::ordered_json flags_json(const PropertyFlags& f) {
  nlohmann::ordered_json j;
  auto put = [&](const char* k, const std::optional<bool>& x) {
    if (x) j[k] = *x;
    else j[k] = nullptr;
  };
  put("reduced", f.reduced);
  put("irreducible", f.irreducible);
  put("integral", f.integral);
  return j;
}

nlohmann::ordered_json to_json(const SpectrumReport& r) {
  nlohmann::ordered_json j;
  j["backend"] = r.backend;
  j["kind"] = r.kind;
  j["complete"] = r.complete;
  j["scope"] = r.scope;
  j["atoms"] = labels(r.atoms);
  j["atom_order"] = nlohmann::ordered_json::array();
  for (const auto& [x, y] : r.atom_order) j["atom_order"].push_back({x, y});
  j["molecules"] = labels(r.molecules);
  j["molecule_order"] = nlohmann::ordered_json::array();
  for (const auto& [x, y] : r.molecule_order) j["molecule_order"].push_back({x, y});
  j["phi"] = nlohmann::ordered_json::object();
  for (const auto& [a, m] : r.phi) {
    if (m) j["phi"][a] = *m;
    else j["phi"][a] = nullptr;
  }
  j["psi"] = nlohmann::ordered_json::object();
  for (const auto& [m, a] : r.psi) j["psi"][m] = a;
  j["amin"] = labels(r.amin);
  j["mmin"] = labels(r.mmin);
  j["flags"] = {{"atomic", flags_json(r.atomic_flags)}, {"molecular", flags_json(r.molecular_flags)}};
  j["notes"] = r.notes;
  return j;
}

nlohmann::ordered_json to_json(const Assertion& a) {
  return {{"name", a.name}, {"claim", a.claim}, {"status", to_string(a.status)}, {"detail", a.detail}};
}

nlohmann::ordered_json to_json(const Verification& v) {
  nlohmann::ordered_json j;
  j["passed"] = v.passed();
  j["assertions"] = nlohmann::ordered_json::array();
  for (const auto& a : v.assertions) j["assertions"].push_back(to_json(a));
  j["counts"] = {{"pass", v.count(Status::Pass)}, {"fail", v.count(Status::Fail)}, {"skipped", v.count(Status::Skipped)}};
  return j;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Covering relations of a strict order given as pairs.
std::vector<std::pair<std::string, std::string>> covers(const std::vector<std::pair<std::string, std::string>>& lt) {
  auto less = [&](const std::string& x, const std::string& y) {
    return std::find(lt.begin(), lt.end(), std::make_pair(x, y)) != lt.end();
  };
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [x, y] : lt) {
    bool direct = true;
    for (const auto& [p, z] : lt)
      if (p == x && z != y && less(z, y)) direct = false;
    if (direct) out.emplace_back(x, y);
  }
  return out;
}

}  // namespace

std::string hasse_dot(const SpectrumReport& r) {
  std::ostringstream os;
  os << "digraph spectra {\n  rankdir=BT;\n";
  os << "  subgraph cluster_aspec {\n    label=\"ASpec\";\n";
  for (const auto& a : r.atoms) os << "    " << quote("a:" + a.label) << " [label=" << quote(a.label) << ", shape=ellipse];\n";
  os << "  }\n  subgraph cluster_mspec {\n    label=\"MSpec\";\n";
  for (const auto& m : r.molecules) os << "    " << quote("m:" + m.label) << " [label=" << quote(m.label) << ", shape=box];\n";
  os << "  }\n";
  for (const auto& [x, y] : covers(r.atom_order)) os << "  " << quote("a:" + x) << " -> " << quote("a:" + y) << ";\n";
  for (const auto& [x, y] : covers(r.molecule_order)) os << "  " << quote("m:" + x) << " -> " << quote("m:" + y) << ";\n";
  for (const auto& [a, m] : r.phi)
    if (m) os << "  " << quote("a:" + a) << " -> " << quote("m:" + *m) << " [style=dashed, label=\"phi\", constraint=false];\n";
  for (const auto& [m, a] : r.psi)
    os << "  " << quote("m:" + m) << " -> " << quote("a:" + a) << " [style=dotted, label=\"psi\", constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace spectra
