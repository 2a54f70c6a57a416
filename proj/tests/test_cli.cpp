#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stirling2adic/cli.hpp"

using namespace s2a;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("stirling subcommand backends") {
  CHECK(run({"stirling", "8", "3", "--exact"}).out == "966\n");
  CHECK(run({"stirling", "8", "3", "--mod", "4"}).out == "6\n");
  CHECK(run({"stirling", "4", "3", "--via-gf", "--mod", "8"}).out == "6\n");
  auto all = run({"stirling", "12", "7", "--all-backends", "--mod", "16"});
  CHECK(all.code == 0);
  CHECK(all.out.find("exact 627396\n") != std::string::npos);
  CHECK(all.out.find("mod 37572\n") != std::string::npos);     // 627396 mod 2^16
  CHECK(all.out.find("via-gf 37572\n") != std::string::npos);
  CHECK(run({"stirling", "30", "40", "--exact"}).out == "0\n");
}

TEST_CASE("stirling usage errors exit 2") {
  CHECK(run({"stirling", "8", "3"}).code == 2);                         // no backend
  CHECK(run({"stirling", "8", "3", "--exact", "--mod", "4"}).code == 2);  // two
  CHECK(run({"stirling", "8", "3", "--via-gf"}).code == 2);             // gf needs mod
  CHECK(run({"stirling", "8"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("capacity errors are reported with the cap") {
  auto r = run({"stirling", "4000", "7", "--exact", "--exact-cap", "1000"});
  CHECK(r.code == 2);
  CHECK(r.err.find("exceeds cap 1000") != std::string::npos);
  CHECK(run({"stirling", "4000", "7", "--exact", "--exact-cap", "4000"}).code == 0);
}

TEST_CASE("stirling-diff") {
  CHECK(run({"stirling-diff", "2", "1", "2", "3"}).out == "960\n");
  CHECK(run({"stirling-diff", "1", "2", "2", "3"}).out == "-960\n");
  CHECK(run({"stirling-diff", "3", "3", "4", "5"}).out == "0\n");
  CHECK(run({"stirling-diff", "0", "1", "2", "3"}).code == 2);
}

TEST_CASE("nu2-diff") {
  auto r = run({"nu2-diff", "2", "1", "2", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("exact(6)", 0) == 0);
  CHECK(run({"nu2-diff", "2", "1", "3", "3"}).out.rfind("exact(4)", 0) == 0);
  CHECK(run({"nu2-diff", "3", "3", "5", "7"}).out.rfind("infinite", 0) == 0);
  CHECK(run({"nu2-diff", "1", "2", "2", "3"}).code == 2);  // a < b
}

TEST_CASE("verify exit codes and text output") {
  auto pass = run({"verify", "lemma2.8"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("lemma2.8: pass") != std::string::npos);
  CHECK(run({"verify", "bogus"}).code == 2);
  auto trimmed = run({"verify", "thm1.3", "--grid", "n=2..6"});
  CHECK(trimmed.code == 0);
  CHECK(trimmed.out.find("thm1.3: pass") != std::string::npos);
  CHECK(trimmed.out.find("exception-instance") != std::string::npos);
}

TEST_CASE("json reports are byte-identical across runs and worker counts") {
  std::vector<std::string> args{"verify", "lemma2.9", "--format", "json"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto c = run({"verify", "lemma2.9", "--format", "json", "--workers", "2"});
  // worker count changes the config header; the body must be unchanged
  auto body_of = [](const std::string& s) { return s.substr(s.find("\"body\"")); };
  CHECK(body_of(a.out) == body_of(c.out));
  CHECK(a.out.find("\"tool-version\"") != std::string::npos);
  CHECK(a.out.find("timestamp") == std::string::npos);
}

TEST_CASE("csv and file output") {
  auto csv = run({"verify", "lemma2.8", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("record,claim,params,expected,observed,detail\n", 0) == 0);
  CHECK(csv.out.find("summary,lemma2.8") != std::string::npos);

  auto path = std::filesystem::temp_directory_path() / "s2a_cli_test_report.json";
  std::filesystem::remove(path);
  auto r = run({"verify", "lemma2.8", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream read;
  read << in.rdbuf();
  CHECK(read.str().find("\"claim\": \"lemma2.8\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("explore emits a well-formed fit") {
  auto text = run({"explore", "3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("constant f = 0") != std::string::npos);
  auto json = run({"explore", "5", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"constant\": 2") != std::string::npos);
  CHECK(json.out.find("\"claim\": \"conjecture1.1\"") != std::string::npos);
  CHECK(run({"explore", "2"}).code == 2);
  auto csv = run({"explore", "3", "--format", "csv", "--grid", "n=3..5"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("k,a,b,n,nu2,f,censored\n", 0) == 0);
}

TEST_CASE("workers env var is the default, flag wins") {
  setenv("STIRLING2ADIC_WORKERS", "2", 1);
  auto a = run({"verify", "lemma2.8", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out.find("workers=2") != std::string::npos);
  auto b = run({"verify", "lemma2.8", "--format", "json", "--workers", "1"});
  CHECK(b.out.find("workers=1") != std::string::npos);
  setenv("STIRLING2ADIC_WORKERS", "zero", 1);
  CHECK(run({"verify", "lemma2.8"}).code == 2);
  unsetenv("STIRLING2ADIC_WORKERS");
}

TEST_CASE("help exits 0") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"stirling", "--help"}).code == 0);
}

TEST_CASE("exit 1 when a verification cannot reach pass") {
  // a precision cap of 4 leaves most instances inconclusive: partial, not pass
  auto r = run({"verify", "thm1.2i", "--cap", "4", "--grid", "a=2..6", "--grid",
                "b=1..5", "--grid", "n=2..5"});
  CHECK(r.code == 1);
  CHECK(r.out.find("partial") != std::string::npos);
}

TEST_CASE("prior-work findings do not fail the run") {
  auto r = run({"verify", "thm1.1", "--grid", "k=4,5", "--grid", "n=2..5",
                "--grid", "a=2..5", "--grid", "b=1..4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("thm1.1: pass") != std::string::npos);
  CHECK(r.out.find("formula-mismatch") != std::string::npos);
  CHECK(r.out.find("k = 2^n boundary") != std::string::npos);
}

TEST_CASE("json renders big integers as decimal strings") {
  auto r = run({"stirling", "100", "50", "--exact", "--format", "json"});
  CHECK(r.code == 0);
  // S(100,50) is far beyond 2^53; it must be quoted for lossless consumers
  CHECK(r.out.find("\"value\": \"") != std::string::npos);
  CHECK(r.out.find("992013900\"") != std::string::npos);  // known low digits
  auto small = run({"stirling", "8", "3", "--exact", "--format", "json"});
  CHECK(small.out.find("\"value\": 966") != std::string::npos);
}
