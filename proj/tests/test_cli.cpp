#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "spectra/analyze.hpp"
#include "spectra/fixture.hpp"

using namespace spectra;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SPECTRA_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(SPECTRA_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_error_line(const std::string& text) {
  try {
    parse_fixture(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("fixture") {
  TEST_CASE("every fixture round-trips through serialization") {
    for (const char* name : {"t2_f2.alg", "field_f2.alg", "fx2.alg", "cycle_quiver.alg", "m2_q.alg", "z.alg", "z12.alg",
                             "f2x.alg", "f3x_quot.alg", "graded_kx.alg"}) {
      CAPTURE(name);
      const auto a = load_fixture_file(fixture(name));
      const auto text = serialize_fixture(a);
      const auto b = parse_fixture(text);
      CHECK(same_content(a, b));
      CHECK(serialize_fixture(b) == text);
    }
  }

  TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("[algebra]\nkind = int\nwindow\n") == 3);
    CHECK(parse_error_line("# comment\n\n[algebra\n") == 3);
    CHECK(parse_error_line("kind = int\n") == 1);
    CHECK_THROWS_AS(load_fixture_file(fixture("broken.alg")), ParseError);
    CHECK_THROWS_AS(load_fixture_file(fixture("does_not_exist.alg")), InvalidInput);
  }

  TEST_CASE("backend construction") {
    const auto z = parse_fixture("[algebra]\nkind = int\n");
    CHECK_THROWS_WITH_AS(load_backend(z), doctest::Contains("window required"), ParseError);
    CHECK(load_backend(z, 5).backend->atoms().size() == 3);
    CHECK_THROWS_AS(load_backend(z, 0), ParseError);

    const auto t = load_backend(load_fixture_file(fixture("t2_f2.alg")));
    REQUIRE(t.fp);
    CHECK(t.fp_modules.size() == 2);
    CHECK(t.backend->name() == "T2(F2)");

    const auto g = load_backend(load_fixture_file(fixture("graded_kx.alg")));
    REQUIRE(g.graded);
    CHECK(g.graded_modules.size() == 2);

    const auto bad_kind = parse_fixture("[algebra]\nkind = banana\n");
    CHECK_THROWS_AS(load_backend(bad_kind), ParseError);
    const auto bad_action = parse_fixture(
        "[algebra]\nkind = artinian\nfield = F2\nbuilder = field\n[module M]\ndim = 2\nact e1 = 1 1 ; 0 1\n");
    CHECK_THROWS_AS(load_backend(bad_action), InvalidInput);
  }

  TEST_CASE("structure constants and quivers") {
    const auto fx = load_backend(load_fixture_file(fixture("fx2.alg")));
    REQUIRE(fx.fp);
    CHECK(fx.fp->algebra()->dim() == 2);
    const auto cq = load_backend(load_fixture_file(fixture("cycle_quiver.alg")));
    REQUIRE(cq.fp);
    CHECK(cq.fp->atoms().size() == 2);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(run("analyze " + fixture("t2_f2.alg")).code == 0);
    CHECK(run("analyze " + fixture("broken.alg")).code == 2);
    CHECK(run("analyze " + fixture("does_not_exist.alg")).code == 2);
    CHECK(run("").code == 2);
    CHECK(run("analyze --no-such-flag " + fixture("t2_f2.alg")).code == 2);
    CHECK(run("analyze " + fixture("z.alg") + " --window 0").code == 2);
    CHECK(run("analyze " + fixture("f2x.alg") + " --window 20").code == 3);
    CHECK(run("oracle " + fixture("m2_q.alg")).code == 3);
  }

  TEST_CASE("analyze sections") {
    const auto atoms = run("analyze " + fixture("t2_f2.alg") + " --atoms");
    REQUIRE(atoms.code == 0);
    const auto j = json::parse(atoms.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["atoms"]["count"] == 2);
    CHECK_FALSE(j.contains("molecules"));
    CHECK(j["modules"]["E1"]["mass"] == json::array({"P1"}));

    const auto z = run("analyze " + fixture("z.alg") + " --phi-psi --window 10");
    REQUIRE(z.code == 0);
    const auto jz = json::parse(z.out);
    CHECK(jz["phi_psi"]["phi_psi_identity"] == true);
    CHECK(jz["phi_psi"]["checked_molecules"] == 5);

    const auto g = run("analyze " + fixture("graded_kx.alg") + " --radical --phi-psi");
    REQUIRE(g.code == 0);
    const auto jg = json::parse(g.out);
    CHECK(jg["radical"]["reduced_part"].contains("unavailable"));
    CHECK(jg["phi_psi"]["phi"]["generic"].is_null());
  }

  TEST_CASE("analyze writes to a file") {
    const std::string out = std::string(SPECTRA_FIXTURES) + "/../build_cli_out.json";
    REQUIRE(run("analyze " + fixture("z12.alg") + " --out " + out).code == 0);
    const auto j = json::parse(slurp(out));
    CHECK(j["radical"]["reduced_part"]["category"] == "Mod Z/6");
    std::remove(out.c_str());
  }

  TEST_CASE("verify") {
    const auto t = run("verify " + fixture("t2_f2.alg"));
    CHECK(t.code == 0);
    CHECK(t.out.find("verify: PASS (14 assertions") != std::string::npos);

    const auto g = run("verify " + fixture("graded_kx.alg"));
    CHECK(g.code == 0);
    CHECK(g.out.find("phi partial") != std::string::npos);

    const auto fx = run("verify " + fixture("fx2.alg"));
    CHECK(fx.code == 0);
    CHECK(fx.out.find("reduced=false irreducible=true") != std::string::npos);

    const auto js = run("verify " + fixture("z12.alg") + " --json");
    REQUIRE(js.code == 0);
    CHECK(json::parse(js.out)["verification"]["passed"] == true);
  }

  TEST_CASE("hasse") {
    const auto f = run("hasse " + fixture("field_f2.alg"));
    REQUIRE(f.code == 0);
    CHECK(f.out.find("\"a:S1\" [label") != std::string::npos);
    CHECK(f.out.find("\"m:P1\" [label") != std::string::npos);
    CHECK(f.out.find("\"a:S2\"") == std::string::npos);

    const auto z = run("hasse " + fixture("z.alg") + " --window 5");
    REQUIRE(z.code == 0);
    std::size_t atoms = 0;
    for (auto pos = z.out.find("shape=ellipse"); pos != std::string::npos; pos = z.out.find("shape=ellipse", pos + 1))
      ++atoms;
    CHECK(atoms == 3);

    const auto c = run("hasse " + fixture("t2_f2.alg") + " --closed");
    REQUIRE(c.code == 0);
    CHECK(c.out.find("digraph closed") != std::string::npos);
    CHECK(run("hasse " + fixture("z.alg") + " --closed").code == 3);
  }

  TEST_CASE("oracle") {
    const auto r = run("oracle " + fixture("t2_f2.alg") + " --exhaustive");
    CHECK(r.code == 0);
    CHECK(r.out.find("oracle: AGREE") != std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    for (const char* name : {"t2_f2.alg", "graded_kx.alg", "m2_q.alg"}) {
      CAPTURE(name);
      const auto a = run("analyze " + fixture(name) + " --seed 3");
      const auto b = run("analyze " + fixture(name) + " --seed 3");
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }
}
