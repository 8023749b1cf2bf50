#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "delooping/error.hpp"
#include "delooping/report.hpp"
#include "support.hpp"

using namespace dl;
using dltest::fixture;
using dltest::fixture_path;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run deloop(const std::string& args) {
  Run r;
  const std::string cmd = std::string(DL_DELOOP_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string alg(const char* name) { return fixture_path(std::string(name) + ".alg"); }

std::string error_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse errors carry line and column") {
  std::string e = error_text([] { parse_algebra("name t\nvertices 1 2\narrow x: 1 -> 3\n"); });
  CHECK(e.find("ParseError") != std::string::npos);
  CHECK(e.find("line 3, column 15") != std::string::npos);
  CHECK(error_text([] { parse_algebra("vertices 1\nfoo bar\n"); }).find("line 2") != std::string::npos);
  CHECK(error_text([] { parse_module("dims 1:1\nmap q [[1]]\n", fixture("fixA")); }).find("ParseError") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]", 2, 2, Field()), Error);
  CHECK(parse_scalar("-3/6", Field()) == Scalar(mpq_class(-1, 2)));
  CHECK(parse_matrix("[[1/2, 0], [0, 1]]", 2, 2, Field())(0, 0) == Scalar(mpq_class(1, 2)));
}

TEST_CASE("module files round-trip") {
  std::mt19937_64 rng(31);
  for (const char* name : {"fixA", "fixMono", "fixKR-L", "fixCyl"}) {
    AlgPtr a = fixture(name);
    for (int t = 0; t < 3; ++t) {
      Module m = dltest::random_module(a, rng);
      Module back = parse_module(print_module(m, "M"), a);
      CHECK(back.same_data(m));
    }
  }
  AlgPtr kr = fixture("fixKR-A");
  Module m2 = dltest::fixture_module("kr-a-m2.mod", kr);
  CHECK(m2.same_data(dltest::kr_module(kr, 2)));
}

TEST_CASE("algebra files round-trip") {
  for (const char* name : {"fixA", "fixMono", "fixKR-A", "fixKR-L", "fixCyl"}) {
    AlgPtr a = fixture(name);
    AlgPtr b = parse_algebra(print_algebra(*a));
    CHECK(b->name() == a->name());
    CHECK(b->dim() == a->dim());
    CHECK(print_algebra(*b) == print_algebra(*a));
  }
}

TEST_CASE("certificate parse errors") {
  AlgPtr a = fixture("fixMono");
  CHECK_THROWS_AS(parse_certificate("k 1\nbound 1\ntarget S1\nwibble\n", a), Error);
  CHECK_THROWS_AS(parse_certificate("k 1\nbound 1\ntarget S9\n", a), Error);
  CHECK_THROWS_AS(parse_certificate("k 1\nbound 1\ntarget S1\nterm S2\nmap 3\nend\n", a), Error);
  CHECK_THROWS_AS(parse_certificate("k 1\nbound 1\ntarget S1\n"), Error);
}

TEST_CASE("command line: usage errors") {
  CHECK(deloop("").code == 64);
  CHECK(deloop("frobnicate").code == 64);
  CHECK(deloop("dell " + alg("fixMono") + " --method sideways").code == 64);
  CHECK(deloop("dell").code == 64);
}

TEST_CASE("command line: errors in inputs") {
  const std::string tmp = (std::filesystem::temp_directory_path() / "deloop-bad.alg").string();
  std::ofstream(tmp) << "vertices 1 2\narrow x: 1 -> 3\n";
  Run r = deloop("alg check " + tmp);
  CHECK(r.code == 1);
  CHECK(r.out.find("ParseError") != std::string::npos);
  CHECK(deloop("alg check /nonexistent.alg").code == 1);
  CHECK(deloop("dell " + alg("fixMono") + " --module Q7").code == 1);
}

TEST_CASE("command line: computations") {
  Run check = deloop("alg check " + alg("fixMono"));
  CHECK(check.code == 0);
  CHECK(check.out.find("dimension 16") != std::string::npos);

  Run d = deloop("dell " + alg("fixMono") + " --module S1 --json");
  REQUIRE(d.code == 0);
  auto j = nlohmann::json::parse(d.out);
  CHECK(j.dump().find("\"value\":2") != std::string::npos);

  Run f = deloop("monomial-findim " + alg("fixMono") + " --op --json");
  CHECK(f.code == 0);
  auto fj = nlohmann::json::parse(f.out);
  CHECK(fj["findim"] == 1);
  CHECK(fj["s"] == 0);

  Run cyl = deloop("tset " + alg("fixCyl") + " --dim-cap 12");
  CHECK(cyl.code == 2);
  CHECK(cyl.out.find("no finite closure") != std::string::npos);
}

TEST_CASE("command line: dell of S2 over the one-point extension") {
  Run r = deloop("dell " + alg("fixKR-L") + " --module S2 --cap 6 --method adjoint");
  CHECK(r.code == 2);
  CHECK(r.out.find("exceeds cap") != std::string::npos);
}

TEST_CASE("command line: certificates") {
  Run ok = deloop("verify " + fixture_path("kr-s2.cert"));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("k-ddell(S2) ≤ 1 confirmed") != std::string::npos);

  const std::string tmp = (std::filesystem::temp_directory_path() / "deloop-bad.cert").string();
  std::ofstream(tmp) << "algebra " << alg("fixMono") << "\nk 1\nbound 0\ntarget S1\nterm S1\nmap 0\nblock 1 [[1]]\nend\n";
  Run bad = deloop("verify " + tmp);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("witness-fails") != std::string::npos);

  const std::string out = (std::filesystem::temp_directory_path() / "deloop-found.cert").string();
  Run found = deloop("ddell " + alg("fixMono") + " --module S1 -o " + out);
  CHECK(found.code == 0);
  CHECK(deloop("verify " + out).code == 0);
}

TEST_CASE("command line: report") {
  Run r = deloop("report " + alg("fixMono") + " --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["invariants"]["dell"]["value"] == 2);
  CHECK(j["invariants"]["ddell"]["value"] == 1);
  CHECK(j["invariants"]["subddell"]["value"] == 1);
  CHECK(j["invariants"]["findim_op"]["value"] == 1);
  CHECK(j["unknowns"].empty());
  Run again = deloop("report " + alg("fixMono") + " --json");
  CHECK(again.out == r.out);
}
