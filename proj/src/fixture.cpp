#include "spectra/fixture.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace spectra {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::int64_t to_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

const FixtureEntry* FixtureSection::find(const std::string& key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

const FixtureEntry& FixtureSection::get(const std::string& key) const {
  if (const auto* e = find(key)) return *e;
  throw ParseError(line, "section [" + name + "] is missing the key '" + key + "'");
}

std::vector<const FixtureEntry*> FixtureSection::all(const std::string& key) const {
  std::vector<const FixtureEntry*> out;
  for (const auto& e : entries)
    if (e.key == key) out.push_back(&e);
  return out;
}

const FixtureSection* Fixture::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<const FixtureSection*> Fixture::all(const std::string& name) const {
  std::vector<const FixtureSection*> out;
  for (const auto& s : sections)
    if (s.name == name) out.push_back(&s);
  return out;
}

bool same_content(const Fixture& a, const Fixture& b) {
  if (a.sections.size() != b.sections.size()) return false;
  for (std::size_t i = 0; i < a.sections.size(); ++i) {
    const auto& x = a.sections[i];
    const auto& y = b.sections[i];
    if (x.name != y.name || x.argument != y.argument || x.entries.size() != y.entries.size()) return false;
    for (std::size_t k = 0; k < x.entries.size(); ++k)
      if (x.entries[k].key != y.entries[k].key || x.entries[k].value != y.entries[k].value) return false;
  }
  return true;
}

Fixture parse_fixture(const std::string& text) {
  Fixture f;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError(line, "unterminated section header");
      const auto w = words(s.substr(1, s.size() - 2));
      if (w.empty()) throw ParseError(line, "empty section header");
      FixtureSection sec;
      sec.name = w[0];
      for (std::size_t i = 1; i < w.size(); ++i) sec.argument += (i > 1 ? " " : "") + w[i];
      sec.line = line;
      f.sections.push_back(std::move(sec));
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    if (f.sections.empty()) throw ParseError(line, "entry before any [section] header");
    const std::string key = trim(s.substr(0, eq));
    if (key.empty()) throw ParseError(line, "empty key");
    f.sections.back().entries.push_back({key, trim(s.substr(eq + 1)), line});
  }
  if (f.sections.empty()) throw ParseError(0, "fixture has no sections");
  return f;
}

Fixture load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open fixture file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_fixture(os.str());
}

std::string serialize_fixture(const Fixture& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.sections.size(); ++i) {
    const auto& s = f.sections[i];
    if (i) os << "\n";
    os << "[" << s.name << (s.argument.empty() ? "" : " " + s.argument) << "]\n";
    for (const auto& e : s.entries) os << e.key << " = " << e.value << "\n";
  }
  return os.str();
}

std::vector<std::int64_t> parse_int_list(const FixtureEntry& e) {
  std::vector<std::int64_t> out;
  for (const auto& p : split(e.value, ',')) {
    if (p.empty()) throw ParseError(e.line, "empty item in list '" + e.value + "'");
    out.push_back(to_int(p, e.line));
  }
  return out;
}

std::int64_t parse_int(const FixtureEntry& e) { return to_int(e.value, e.line); }

namespace {

struct FieldSpec {
  bool rational = false;
  std::uint32_t p = 0;
};

FieldSpec parse_field(const FixtureEntry& e) {
  std::string v = e.value;
  if (v == "Q" || v == "QQ") return {true, 0};
  if (!v.empty() && (v[0] == 'F' || v[0] == 'f')) v = v.substr(1);
  const auto p = to_int(v, e.line);
  if (p < 2 || !is_prime_integer(p)) throw ParseError(e.line, "field characteristic must be a prime, got " + e.value);
  return {false, static_cast<std::uint32_t>(p)};
}

template <class S>
Poly<S> parse_poly(const Field<S>& f, const FixtureEntry& e) {
  std::vector<S> c;
  for (auto x : parse_int_list(e)) c.push_back(f.from_int(x));
  Poly<S> p(std::move(c));
  if (p.degree() < 1) throw ParseError(e.line, "polynomial must have degree >= 1");
  return p;
}

template <class S>
Index label_index(const std::vector<std::string>& labels, const std::string& name, int line) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<Index>(i);
  throw ParseError(line, "unknown basis label '" + name + "'");
}

template <class S>
FiniteDimAlgebra<S> structure_constants_algebra(const Fixture& fx, const Field<S>& f) {
  const auto* sec = fx.section("constants");
  if (!sec) throw ParseError(0, "builder structure_constants needs a [constants] section");
  const auto n = parse_int(sec->get("dim"));
  if (n < 1 || n > 64) throw ParseError(sec->get("dim").line, "dim must be between 1 and 64");
  std::vector<std::string> labels;
  if (const auto* l = sec->find("labels")) labels = split(l->value, ',');
  else
    for (Index i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  if (static_cast<Index>(labels.size()) != n) throw ParseError(sec->line, "label count differs from dim");
  std::vector<Matrix<S>> table(static_cast<std::size_t>(n), zeros(f, n, n));
  for (const auto& e : sec->entries) {
    if (e.key == "dim" || e.key == "labels" || e.key == "unit") continue;
    const auto star = e.key.find('*');
    if (star == std::string::npos) throw ParseError(e.line, "expected a product 'x*y = coefficients'");
    const Index i = label_index<S>(labels, trim(e.key.substr(0, star)), e.line);
    const Index j = label_index<S>(labels, trim(e.key.substr(star + 1)), e.line);
    const auto c = parse_int_list(e);
    if (static_cast<Index>(c.size()) != n) throw ParseError(e.line, "product needs " + std::to_string(n) + " coefficients");
    for (Index k = 0; k < n; ++k) table[static_cast<std::size_t>(i)](j, k) = f.from_int(c[static_cast<std::size_t>(k)]);
  }
  std::optional<RowVector<S>> unit;
  if (const auto* u = sec->find("unit")) {
    const auto c = parse_int_list(*u);
    if (static_cast<Index>(c.size()) != n) throw ParseError(u->line, "unit needs " + std::to_string(n) + " coefficients");
    RowVector<S> v = zero_vector(f, n);
    for (Index k = 0; k < n; ++k) v(k) = f.from_int(c[static_cast<std::size_t>(k)]);
    unit = v;
  }
  try {
    return FiniteDimAlgebra<S>(f, std::move(table), std::move(labels), unit);
  } catch (const InvalidInput& e) {
    throw ParseError(sec->line, e.what());
  }
}

BoundQuiver parse_quiver(const Fixture& fx) {
  const auto* sec = fx.section("quiver");
  if (!sec) throw ParseError(0, "builder quiver needs a [quiver] section");
  BoundQuiver q;
  q.vertices = static_cast<int>(parse_int(sec->get("vertices")));
  if (q.vertices < 1) throw ParseError(sec->get("vertices").line, "need at least one vertex");
  for (const auto* e : sec->all("arrow")) {
    // a: 1 -> 2
    const auto colon = e->value.find(':');
    const auto arrow = e->value.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw ParseError(e->line, "expected 'label: source -> target'");
    BoundQuiver::Arrow a;
    a.label = trim(e->value.substr(0, colon));
    a.source = static_cast<int>(to_int(trim(e->value.substr(colon + 1, arrow - colon - 1)), e->line)) - 1;
    a.target = static_cast<int>(to_int(trim(e->value.substr(arrow + 2)), e->line)) - 1;
    if (a.source < 0 || a.source >= q.vertices || a.target < 0 || a.target >= q.vertices)
      throw ParseError(e->line, "arrow endpoint out of range");
    q.arrows.push_back(a);
  }
  for (const auto* e : sec->all("relation")) {
    // Terms separated by + or -, each "[c*] label label ...".
    std::vector<BoundQuiver::Term> rel;
    std::string cur;
    int sign = 1;
    auto flush = [&] {
      const std::string t = trim(cur);
      cur.clear();
      if (t.empty()) return;
      BoundQuiver::Term term;
      std::string body = t;
      term.coeff = sign;
      if (const auto star = t.find('*'); star != std::string::npos) {
        term.coeff = sign * to_int(trim(t.substr(0, star)), e->line);
        body = t.substr(star + 1);
      }
      term.path = words(body);
      if (term.path.empty()) throw ParseError(e->line, "empty path in relation");
      rel.push_back(term);
    };
    for (char c : e->value) {
      if (c == '+' || c == '-') {
        flush();
        sign = c == '-' ? -1 : 1;
      } else {
        cur += c;
      }
    }
    flush();
    if (rel.empty()) throw ParseError(e->line, "empty relation");
    q.relations.push_back(rel);
  }
  if (const auto* n = sec->find("nilpotency")) q.nilpotency_bound = static_cast<int>(parse_int(*n));
  return q;
}

template <class S>
Matrix<S> parse_matrix(const Field<S>& f, const FixtureEntry& e, Index dim) {
  const auto rows = split(e.value, ';');
  if (static_cast<Index>(rows.size()) != dim) throw ParseError(e.line, "matrix needs " + std::to_string(dim) + " rows");
  Matrix<S> m = zeros(f, dim, dim);
  for (Index i = 0; i < dim; ++i) {
    const auto w = words(rows[static_cast<std::size_t>(i)]);
    if (static_cast<Index>(w.size()) != dim) throw ParseError(e.line, "matrix row needs " + std::to_string(dim) + " entries");
    for (Index j = 0; j < dim; ++j) m(i, j) = f.from_int(to_int(w[static_cast<std::size_t>(j)], e.line));
  }
  return m;
}

template <class S>
std::vector<std::pair<std::string, RightModule<S>>> parse_modules(const Fixture& fx, const ArtinianBackend<S>& b) {
  std::vector<std::pair<std::string, RightModule<S>>> out;
  const auto& a = b.algebra();
  for (const auto* sec : fx.all("module")) {
    const std::string name = sec->argument.empty() ? "M" + std::to_string(out.size() + 1) : sec->argument;
    if (const auto* p = sec->find("preset")) {
      const auto w = words(p->value);
      if (w.empty()) throw ParseError(p->line, "empty preset");
      auto pick = [&](std::size_t expect) {
        if (w.size() != 2) throw ParseError(p->line, "preset '" + w[0] + "' needs an index");
        const auto i = to_int(w[1], p->line);
        if (i < 1 || static_cast<std::size_t>(i) > expect) throw ParseError(p->line, "index out of range");
        return static_cast<std::size_t>(i - 1);
      };
      if (w[0] == "regular") out.emplace_back(name, RightModule<S>::regular(a));
      else if (w[0] == "simple") out.emplace_back(name, b.simples()[pick(b.simples().size())].representative);
      else if (w[0] == "envelope")
        out.emplace_back(name, b.envelope(b.simples()[pick(b.simples().size())].representative).module);
      else if (w[0] == "quotient")
        out.emplace_back(name, b.quotient_regular_module(b.molecules()[pick(b.primes().size())]));
      else
        throw ParseError(p->line, "unknown preset '" + w[0] + "'");
      continue;
    }
    const auto dim = parse_int(sec->get("dim"));
    if (dim < 0 || dim > 64) throw ParseError(sec->get("dim").line, "module dim must be between 0 and 64");
    std::vector<Matrix<S>> action;
    for (const auto& label : a->labels()) {
      const auto* e = sec->find("act " + label);
      if (!e) throw ParseError(sec->line, "module " + name + " is missing 'act " + label + "'");
      action.push_back(parse_matrix(a->field(), *e, dim));
    }
    try {
      out.emplace_back(name, RightModule<S>(a, std::move(action), dim));
    } catch (const InvalidInput& e) {
      throw ParseError(sec->line, e.what());
    }
  }
  return out;
}

std::vector<std::pair<std::string, GradedModuleDescriptor>> parse_graded_modules(const Fixture& fx) {
  std::vector<std::pair<std::string, GradedModuleDescriptor>> out;
  for (const auto* sec : fx.all("module")) {
    GradedModuleDescriptor d;
    if (const auto* e = sec->find("free"))
      for (auto x : parse_int_list(*e)) d.free_shifts.push_back(static_cast<int>(x));
    if (const auto* e = sec->find("torsion"))
      for (const auto& item : split(e->value, ',')) {
        const auto at = item.find('@');
        if (at == std::string::npos) throw ParseError(e->line, "torsion items are 'length@shift'");
        const auto l = to_int(trim(item.substr(0, at)), e->line);
        if (l < 1) throw ParseError(e->line, "torsion length must be positive");
        d.torsion.emplace_back(static_cast<int>(l), static_cast<int>(to_int(trim(item.substr(at + 1)), e->line)));
      }
    out.emplace_back(sec->argument.empty() ? "M" + std::to_string(out.size() + 1) : sec->argument, d.canonical());
  }
  return out;
}

int required_window(const FixtureSection& alg, std::optional<int> window) {
  if (window) return *window;
  if (const auto* w = alg.find("window")) return static_cast<int>(parse_int(*w));
  throw ParseError(alg.line, "window required for infinite spectra (set 'window' or pass --window)");
}

}  // namespace

template <class S>
AlgebraPtr<S> fixture_algebra(const Fixture& fx, const Field<S>& f) {
  const auto* alg = fx.section("algebra");
  if (!alg) throw ParseError(0, "missing [algebra] section");
  const auto& builder = alg->get("builder");
  auto size = [&] {
    const auto& e = alg->get("n");
    const auto n = parse_int(e);
    if (n < 1 || n > 8) throw ParseError(e.line, "n must be between 1 and 8");
    return static_cast<int>(n);
  };
  const std::string& b = builder.value;
  try {
    if (b == "field") return share(product_of_copies(f, 1));
    if (b == "product") return share(product_of_copies(f, size()));
    if (b == "upper_triangular") return share(upper_triangular(f, size()));
    if (b == "matrix") return share(matrix_algebra(f, size()));
    if (b == "truncated_poly") return share(truncated_polynomial(f, size()));
    if (b == "cyclic_group") return share(cyclic_group_algebra(f, size()));
    if (b == "poly_quot") return share(polynomial_quotient(f, parse_poly(f, alg->get("polynomial")).monic()));
    if (b == "structure_constants") return share(structure_constants_algebra(fx, f));
    if (b == "quiver") return share(bound_quiver_algebra(f, parse_quiver(fx)));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(builder.line, e.what());
  }
  throw ParseError(builder.line, "unknown builder '" + b + "'");
}

template AlgebraPtr<Zp> fixture_algebra(const Fixture&, const Field<Zp>&);
template AlgebraPtr<Rational> fixture_algebra(const Fixture&, const Field<Rational>&);

namespace {

LoadedFixture build_backend(const Fixture& fx, const FixtureSection* alg, std::optional<int> window) {
  const auto& kind = alg->get("kind");
  const std::string name = alg->find("name") ? alg->find("name")->value : "A";
  LoadedFixture out;
  if (kind.value == "artinian") {
    const auto fs = parse_field(alg->get("field"));
    if (fs.rational) {
      auto b = std::make_shared<ArtinianBackend<Rational>>(fixture_algebra(fx, RationalField{}), name);
      out.q_modules = parse_modules(fx, *b);
      out.q = b;
      out.backend = b;
    } else {
      auto b = std::make_shared<ArtinianBackend<Zp>>(fixture_algebra(fx, PrimeField(fs.p)), name);
      out.fp_modules = parse_modules(fx, *b);
      out.fp = b;
      out.backend = b;
    }
    return out;
  }
  if (kind.value == "int") {
    auto b = std::make_shared<IntegerBackend>(required_window(*alg, window));
    out.integers = b;
    out.backend = b;
    return out;
  }
  if (kind.value == "int_mod") {
    out.backend = std::make_shared<IntModBackend>(parse_int(alg->get("modulus")));
    return out;
  }
  if (kind.value == "poly" || kind.value == "poly_quot") {
    const auto fs = parse_field(alg->get("field"));
    if (kind.value == "poly") {
      const int w = required_window(*alg, window);
      if (fs.rational) out.backend = std::make_shared<PolyBackend<Rational>>(RationalField{}, w);
      else out.backend = std::make_shared<PolyBackend<Zp>>(PrimeField(fs.p), w);
    } else {
      const auto& e = alg->get("polynomial");
      if (fs.rational) out.backend = std::make_shared<PolyQuotBackend<Rational>>(RationalField{}, parse_poly(RationalField{}, e));
      else out.backend = std::make_shared<PolyQuotBackend<Zp>>(PrimeField(fs.p), parse_poly(PrimeField(fs.p), e));
    }
    return out;
  }
  if (kind.value == "graded_poly") {
    const int w = required_window(*alg, window);
    if (w < 0) throw ParseError(alg->line, "window must be non-negative");
    const std::string fname = alg->find("field") ? alg->find("field")->value : "k";
    auto b = std::make_shared<GradedBackend>(-w, w, fname);
    out.graded_modules = parse_graded_modules(fx);
    out.graded = b;
    out.backend = b;
    return out;
  }
  throw ParseError(kind.line, "unknown kind '" + kind.value + "'");
}

}  // namespace

LoadedFixture load_backend(const Fixture& fx, std::optional<int> window) {
  const auto* alg = fx.section("algebra");
  if (!alg) throw ParseError(0, "missing [algebra] section");
  try {
    return build_backend(fx, alg, window);
  } catch (const PreconditionError& e) {
    // Out-of-range sizes, windows and moduli come from the fixture.
    throw ParseError(alg->line, e.what());
  }
}

}  // namespace spectra
