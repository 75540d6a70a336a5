// Drives the built command line binary end to end. The binary path comes from
// the GKRAW_CLI environment variable (set by the test harness).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("GKRAW_CLI");
  REQUIRE_MESSAGE(p != nullptr, "GKRAW_CLI must point at the built binary");
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("compute emits the exact table as json") {
    auto r = run("compute --N 1 --alpha 0 --c 1 --method dpsystem --mode exact");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["mode"] == "exact");
    CHECK(doc["params"]["N"] == 1);
    CHECK(doc["coeffs"][0]["a_sq"] == "0");
    CHECK(doc["coeffs"][0]["b"] == "1/2");
    CHECK(doc["coeffs"][1]["a_sq"] == "1/4");
    CHECK(doc["coeffs"][1]["b"] == "1/2");
    CHECK(doc["coeffs"][2]["a_sq"] == "0");
    CHECK_FALSE(doc["coeffs"][2].contains("b"));
  }

  TEST_CASE("identical output bytes on repeated invocation") {
    const char* cmd = "compute --N 6 --alpha 1/2 --c 1 --method stieltjes";
    CHECK(run(cmd).out == run(cmd).out);
  }

  TEST_CASE("decimal parameters are parsed exactly") {
    auto r = run("compute --N 2 --alpha 0.8 --c 2");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["params"]["alpha"] == "4/5");
  }

  TEST_CASE("csv format and file output") {
    std::string path = "/tmp/gkraw_cli_test.csv";
    auto r = run("compute --N 1 --alpha 0 --c 1 --format csv --digits 6 --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream f(path);
    std::string header, row0;
    std::getline(f, header);
    std::getline(f, row0);
    CHECK(header == "n,a_sq,b");
    CHECK(row0 == "0,0,5e-1");
    std::remove(path.c_str());
  }

  TEST_CASE("usage errors exit 1 and name the precondition") {
    CHECK(run("compute --N 1 --alpha 1 --c 1").exit_code == 1);
    CHECK(run("compute --N 0 --alpha 0 --c 1").exit_code == 1);
    CHECK(run("compute --N 1 --alpha 0 --c 1 --mode float:-3").exit_code == 1);
    CHECK(run("compute --N 1 --alpha 0 --c 1 --format yaml").exit_code == 1);
    CHECK(run("nonsense").exit_code == 1);
  }

  TEST_CASE("compare: exact agreement and float divergence report") {
    auto r = run("compare --N 20 --alpha 1/2 --c 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "identical (42 entries)\n");
    auto rf = run("compare --N 12 --alpha -1 --c 2 --mode float:64");
    CHECK(rf.exit_code == 0);
    CHECK(rf.out.find("max |dpsystem - stieltjes|") != std::string::npos);
  }

  TEST_CASE("perturb reports a clean run for delta = 0") {
    auto r = run("perturb --N 10 --alpha -1 --c 2 --delta 0 --bits 256");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["failed"] == false);
    CHECK(doc["first_nonpositive"] == -1);
    CHECK(doc["profile"].size() == 12);
  }

  TEST_CASE("default float precision comes from the environment") {
    auto r = run("compute --N 2 --alpha 0 --c 1 --mode float");
    CHECK(json::parse(r.out)["mode"] == "float:512");
    std::string cmd = std::string("GKRAW_DEFAULT_PREC=96 ") + cli_path() +
                      " compute --N 2 --alpha 0 --c 1 --mode float 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    pclose(pipe);
    CHECK(json::parse(out)["mode"] == "float:96");
  }

  TEST_CASE("shoot finds the hand root on the two-point lattice") {
    auto r = run("shoot --N 1 --alpha 0 --c 1 --bits 192 --lo -4 --hi -3 --scan 128 --digits 10");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["closed_form_y0"] == "-3.5e0");
    bool found = false;
    for (const auto& root : doc["roots"])
      if (root["y0"] == "-3.5e0") found = true;
    CHECK(found);
  }

  TEST_CASE("certify passes clean and fails under tampering") {
    auto ok = run("certify --N 6 --alpha 1/2 --c 1 --n 3 --suites compat,kummer,p5 --levels 3");
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out)["passed"] == true);
    auto bad = run("certify --N 6 --alpha 1/2 --c 1 --n 3 --suites p5 --levels 3 --tamper-y 1/1000");
    CHECK(bad.exit_code == 3);
    auto doc = json::parse(bad.out);
    CHECK(doc["passed"] == false);
  }

  TEST_CASE("figure data files") {
    auto r = run("figures --id 1 --outdir /tmp --digits 8");
    CHECK(r.exit_code == 0);
    std::ifstream f("/tmp/figure1.csv");
    REQUIRE(f.good());
    int rows = 0;
    for (std::string line; std::getline(f, line);) ++rows;
    CHECK(rows == 83);  // header + n = 0..81
    std::remove("/tmp/figure1.csv");
  }
}
