#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pathkit/cli.hpp"
#include "pathkit/report.hpp"

using namespace pathkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string squash(std::string s) {
  std::erase_if(s, [](char c) { return c == ' ' || c == '\n'; });
  return s;
}

}  // namespace

TEST_CASE("parse and reduce") {
  Run r = run({"parse", "(\\x.x) z"});
  CHECK(r.code == 0);
  CHECK(r.out == "(\\x.x) z\n");
  r = run({"parse", "\\x."});
  CHECK(r.code == 2);
  CHECK(r.err.find("pathkit:") == 0);
  CHECK(r.out.empty());

  r = run({"reduce", "(\\x.x) z"});
  CHECK(r.code == 0);
  CHECK(r.out == "z\n");
  r = run({"reduce", "(\\y.y x)(\\w.z w)", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eta @ arg") != std::string::npos);
  CHECK(run({"reduce", "(\\x.x x)(\\x.x x)", "--fuel", "10"}).code == 3);
}

TEST_CASE("path") {
  Run r = run({"path", "(\\y.y x)(\\w.z w)", "z x"});
  CHECK(r.code == 0);
  CHECK(squash(r.out) == squash("τ(η((λy.yx)(λw.zw),(λy.yx)z), β((λy.yx)z,zx))"));
  r = run({"path", "(\\x.x) z", "z", "--style", "structural"});
  CHECK(r.out == "beta((\\x.x) z)\n");
  CHECK(run({"path", "\\x.x", "\\y.z"}).code == 1);
  CHECK(run({"path", "(\\x.x x)(\\x.x x)", "z", "--fuel", "20"}).code == 3);
  CHECK(run({"path", "x", "y", "--style", "fancy"}).code == 2);
}

TEST_CASE("normalize and eq") {
  Run r = run({"normalize", "sigma(rho(a))"});
  CHECK(r.code == 0);
  CHECK(r.out == "rho(a)\n");
  r = run({"normalize", "sigma(sigma(sigma(rho(a))))", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ss @ root") != std::string::npos);
  CHECK(run({"normalize", "tau(beta((\\x.x) z), beta((\\x.x) w))"}).code == 2);
  CHECK(run({"normalize", "sigma(sigma(sigma(rho(a))))", "--fuel", "1"}).code == 3);

  r = run({"eq", "sigma(sigma(beta((\\x.x) z)))", "beta((\\x.x) z)"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = run({"eq", "beta((\\x.x) z)", "rho(z)"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
}

TEST_CASE("hcomp") {
  Run r = run({"hcomp", "sigma(sigma(beta((\\x.x) z)));beta((\\x.x) z)", "sigma(rho(z));rho(z)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("|> ss @ first") != std::string::npos);
  CHECK(r.out.find("|> sr @ second") != std::string::npos);
  CHECK(run({"hcomp", "rho(a);rho(b)", "rho(a)"}).code == 2);
}

TEST_CASE("check") {
  Run r = run({"check", "pentagon", "--samples", "50", "--seed", "3"});
  CHECK(r.code == 0);
  CheckReport rep = report_from_json(r.out);
  CHECK(rep.law == "pentagon");
  CHECK(rep.samples == 50);
  CHECK(rep.passed());
  CHECK(rep.oracle_confirmed == 10);
  CHECK_FALSE(rep.elapsed_ms);

  CHECK(run({"check", "pentagon", "--samples", "50", "--seed", "3", "--json"}).out == r.out);
  CHECK(run({"check", "pentagon", "--samples", "50", "--seed", "3", "--serial"}).out == r.out);
  CHECK(report_from_json(run({"check", "groupoid", "--samples", "20", "--timing"}).out).elapsed_ms);

  r = run({"check", "triangle", "--samples", "20", "--summary"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("triangle: pass, 20 samples, 0 failures", 0) == 0);

  // The standard rules are not confluent: some sampled paths have two normal forms.
  r = run({"check", "confluence", "--samples", "500", "--depth", "6", "--seed", "1"});
  CHECK(r.code == 1);
  CHECK_FALSE(report_from_json(r.out).passed());

  r = run({"check", "interchange", "--samples", "5", "--oracle", "--oracle-cap", "2"});
  CHECK(r.code == 3);
  CHECK(report_from_json(r.out).oracle_unknown > 0);

  CHECK(run({"check", "nonsense"}).code == 2);
  CHECK(run({"check", "groupoid", "--depth", "0"}).code == 2);
  CHECK(run({"check", "groupoid", "--json", "--summary"}).code == 2);
}

TEST_CASE("check writes to a file") {
  auto file = std::filesystem::temp_directory_path() / "pathkit_cli_test_report.json";
  Run r = run({"check", "groupoid", "--samples", "10", "--out", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(file);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(report_from_json(text.str()).samples == 10);
  std::filesystem::remove(file);
}

TEST_CASE("PATHKIT_SEED is the seed fallback") {
  ::setenv("PATHKIT_SEED", "12", 1);
  Run from_env = run({"check", "groupoid", "--samples", "10"});
  ::unsetenv("PATHKIT_SEED");
  Run explicit_seed = run({"check", "groupoid", "--samples", "10", "--seed", "12"});
  CHECK(from_env.out == explicit_seed.out);
  CHECK(report_from_json(from_env.out).seed == 12);

  ::setenv("PATHKIT_SEED", "twelve", 1);
  CHECK(run({"check", "groupoid", "--samples", "10"}).code == 2);
  ::unsetenv("PATHKIT_SEED");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eq", "rho(a)"}).code == 2);
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check") != std::string::npos);
}
