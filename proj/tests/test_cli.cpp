// Runs the sincpow executable and checks exit codes, schemas and determinism.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& exe, const std::string& args) {
  const std::string cmd = exe + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Run cli(const std::string& args) { return run(SINCPOW_CLI_PATH, args); }

}  // namespace

TEST_CASE("eval") {
  const Run r = cli("eval --p 1 --format json");
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(std::fabs(doc["value"].get<double>() - 1.0) <= 1e-10);
  for (const char* key : {"p", "value", "error_bound", "truncation_radius", "panels_used"}) {
    CHECK(doc.contains(key));
  }

  const Run two = cli("eval --p 2.0");
  REQUIRE(two.status == 0);
  CHECK(two.out.rfind("p,value,error_bound,truncation_radius,panels_used\n2,0.6666666666", 0) == 0);
}

TEST_CASE("usage and numerical exit codes") {
  CHECK(cli("eval --p 0.7").status == 2);
  CHECK(cli("eval").status == 2);
  CHECK(cli("eval --p 2 --tol 0").status == 2);
  CHECK(cli("eval --p 2 --format xml").status == 2);
  CHECK(cli("eval --p 2 --bogus").status == 2);
  CHECK(cli("").status == 2);
  CHECK(cli("exact --n 0").status == 2);
  CHECK(cli("certify --p-from 0.5 --p-to 1").status == 2);
  CHECK(cli("certify --p-from 2 --p-to 1").status == 2);
  CHECK(cli("certify --p-from 1 --p-to 2 --step 0").status == 2);
  CHECK(cli("bspline --n 3 --x 1/0").status == 2);
  CHECK(cli("p0 --tol -1").status == 2);
  CHECK(cli("eval --p 1 --tol 1e-30").status == 3);
  CHECK(cli("--help").status == 0);
}

TEST_CASE("exact") {
  const Run three = cli("exact --n 3");
  CHECK(three.status == 0);
  CHECK(three.out == "n,exact,decimal\n3,11/20,0.550000000000000\n");
  CHECK(cli("exact --n 1").out.find(",1/1,") != std::string::npos);
  CHECK(cli("exact --n 4").out.find(",151/315,") != std::string::npos);
}

TEST_CASE("certify") {
  const Run single = cli("certify --p-from 1 --p-to 1");
  CHECK(single.status == 0);
  std::istringstream lines(single.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "p,integral,error_bound,c_factor,improved_bound,unit_bound,ball_bound,ratio,verdict");
  CHECK(row.rfind("1,1,0,", 0) == 0);
  CHECK(row.substr(row.size() - 4) == "pass");
  CHECK_FALSE(std::getline(lines, extra));

  const Run grid = cli("certify --p-from 1 --p-to 2 --step 0.25 --format json");
  CHECK(grid.status == 0);
  const auto doc = nlohmann::json::parse(grid.out);
  REQUIRE(doc.size() == 5);
  CHECK(doc[0]["p"] == 1.0);
  CHECK(doc[4]["p"] == 2.0);
  for (const auto& obj : doc) CHECK(obj["verdict"] == "pass");
}

TEST_CASE("certify with C(p) lowered by 5% fails") {
  const Run r = run(SINCPOW_INJECTED_CLI_PATH, "certify --p-from 1 --p-to 3 --step 0.5");
  CHECK(r.status == 1);
  CHECK(r.out.find("fail") != std::string::npos);
  // scan reports the same table but never fails on verdicts
  CHECK(run(SINCPOW_INJECTED_CLI_PATH, "scan --p-from 1 --p-to 3 --step 0.5").status == 0);
}

TEST_CASE("p0") {
  const Run def = cli("p0");
  CHECK(def.status == 0);
  CHECK(def.out.rfind("p0,residual\n1.8414", 0) == 0);
  const Run loose = cli("p0 --tol 1e-8 --format json");
  const Run tight = cli("p0 --tol 1e-12 --format json");
  const double a = nlohmann::json::parse(loose.out)["p0"].get<double>();
  const double b = nlohmann::json::parse(tight.out)["p0"].get<double>();
  CHECK(std::fabs(a - b) <= 1e-8);
  CHECK(std::fabs(nlohmann::json::parse(tight.out)["residual"].get<double>()) <= 1e-11);
}

TEST_CASE("bspline") {
  CHECK(cli("bspline --n 4 --x 1/2").out == "n,x,value,decimal\n4,1/2,23/48,0.479166666666667\n");
  CHECK(cli("bspline --n 3 --x 0").out.find(",3/4,") != std::string::npos);
  CHECK(cli("bspline --n 2 --x 0.5").out.find(",1/2,1/2,") != std::string::npos);
}

TEST_CASE("scan output is byte-identical across runs and --out writes a file") {
  const std::string args = "scan --p-from 1.5 --p-to 2.5 --step 0.25";
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);

  const auto path = std::filesystem::temp_directory_path() / "sincpow_cli_test.csv";
  std::filesystem::remove(path);
  const Run to_file = cli(args + " --out " + path.string());
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == a.out);
  std::filesystem::remove(path);
}

TEST_CASE("check runs every property once and passes") {
  const Run r = cli("check");
  CHECK(r.status == 0);
  for (const char* name :
       {"oracle_equivalence", "plancherel", "bspline_closed_form_vs_recursion", "partition_of_unity",
        "bspline_symmetry_support", "majorant_grid", "monotonicity", "sandwich", "chain_grid",
        "p0_reproduction", "crossover_consistency", "correction_factor_monotone",
        "asymptotic_ratio", "tail_enclosure"}) {
    const std::string needle = std::string(" ") + name + "  ";
    const auto first = r.out.find(needle);
    CHECK_MESSAGE(first != std::string::npos, name);
    CHECK_MESSAGE(r.out.find(needle, first + 1) == std::string::npos, name);
  }
}
