#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;

  friend bool operator==(const RunResult& a, const RunResult& b) {
    return a.exit_code == b.exit_code && a.out == b.out;
  }
};

std::string binary_path() {
  const char* path = std::getenv("ROMANKIT_BIN");
  REQUIRE_MESSAGE(path != nullptr, "ROMANKIT_BIN must point at the romankit binary");
  return path;
}

std::string golden_dir() {
  const char* path = std::getenv("ROMANKIT_GOLDEN_DIR");
  REQUIRE_MESSAGE(path != nullptr, "ROMANKIT_GOLDEN_DIR must point at tests/golden");
  return path;
}

RunResult run(const std::string& args) {
  std::string command = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("missing golden file: " + path).c_str());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("eval prints exact values") {
  CHECK(run("eval roman 6 -2") == RunResult{0, "-1/56\n"});
  CHECK(run("eval knuth 2 5").out == "1/30*e\n");
  CHECK(run("eval roman 3 2,2,-1").out == "3/2\n");
  CHECK(run("eval gamma 6 3").out == "20\n");
  CHECK(run("eval trivial -7 3").out == "1\n");
  CHECK(run("eval q:2 4 2").out == "35\n");
  CHECK(run("eval knuth -2 -1").out == "-1*e\n");
}

TEST_CASE("eval json shape") {
  RunResult r = run("eval roman 6 -2 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["scheme"] == "roman");
  CHECK(doc["n"] == 6);
  CHECK(doc["k"] == -2);
  CHECK(doc["value"] == "-1/56");

  doc = nlohmann::json::parse(run("eval roman 3 2,2,-1 --format json").out);
  CHECK(doc["k"] == nlohmann::json::array({2, 2, -1}));
  CHECK(doc["value"] == "3/2");
}

TEST_CASE("exit codes") {
  CHECK(run("verify bogus-name").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("eval roman 1").exit_code == 2);          // missing k
  CHECK(run("eval q:1 4 2").exit_code == 3);          // q = 1 is out of domain
  CHECK(run("eval wibble 4 2").exit_code == 2);       // unknown scheme
  CHECK(run("table no-such-table").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("verify sweeps") {
  RunResult r = run("verify pascal-gamma -10..10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("failed=0") != std::string::npos);

  r = run("verify complementation -12..12 q:3/2 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["identity"] == "complementation");
  CHECK(doc["scheme"] == "q:3/2");
  CHECK(doc["bounds"] == nlohmann::json::array({-12, 12}));
  CHECK(doc["applicable"] == 25 * 25);
  CHECK(doc["held"] == 25 * 25);
  CHECK(doc["failed"] == 0);
  CHECK(doc["failures"].empty());

  r = run("verify all -8..8 roman --format json");
  CHECK(r.exit_code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc.is_array());
  CHECK(doc.size() == 8);
  for (const auto& report : doc) CHECK(report["failed"] == 0);
}

TEST_CASE("identical invocations are byte-identical") {
  for (const char* args : {"table roman-coefficients --format csv",
                           "verify rotation-reflection -6..6 --format json",
                           "ledger --format json"}) {
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("table output matches the committed goldens") {
  const std::string dir = golden_dir();
  const char* names[] = {"roman-factorials", "roman-coefficients", "gamma-coefficients",
                         "region-1", "region-2", "region-3", "region-4", "region-5",
                         "region-6", "resistance"};
  for (const std::string name : names) {
    for (const std::string format : {"plain", "csv", "json"}) {
      RunResult r = run("table " + name + " --format " + format);
      CHECK(r.exit_code == 0);
      std::string extension = format == "plain" ? "txt" : format;
      CHECK_MESSAGE(r.out == slurp(dir + "/" + name + "." + extension),
                    (name + "." + extension).c_str());
    }
  }
}

TEST_CASE("ledger output") {
  RunResult r = run("ledger");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("resistance-table n=7") != std::string::npos);
  CHECK(r.out.find("151/340") != std::string::npos);
  CHECK(r.out.find("151/420") != std::string::npos);
  CHECK(r.out.find("knuth-factorial-product") != std::string::npos);

  auto doc = nlohmann::json::parse(run("ledger --format json").out);
  CHECK(doc.is_array());
  CHECK(doc.size() >= 6);
}

TEST_CASE("--out writes the same bytes to a file") {
  std::string path = "/tmp/romankit_test_out.csv";
  RunResult direct = run("table resistance --format csv");
  RunResult redirected = run("table resistance --format csv --out " + path);
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}
