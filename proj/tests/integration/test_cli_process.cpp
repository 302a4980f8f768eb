#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef ENTMONO_CLI_PATH
#error "ENTMONO_CLI_PATH must name the entmono executable"
#endif

namespace {

struct Proc {
  int code = -1;
  std::string out;
};

// Runs the installed binary through the shell; stderr is discarded.
Proc cli(const std::string& args) {
  const std::string cmd = std::string("\"") + ENTMONO_CLI_PATH + "\" " + args + " 2>/dev/null";
  Proc p;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) p.out.append(buf, n);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("measure on a state file matches the preset") {
  const std::string path = "integration_state.json";
  {
    std::ofstream f(path);
    f << std::setprecision(17);
    const double r = 1.0 / std::sqrt(2.0);
    f << "{\"n_qubits\": 2, \"amplitudes\": [[" << r << ", 0], [0, 0], [0, 0], [" << r << ", 0]]}";
  }
  const Proc file = cli("measure --state " + path + " --kind eof --partition 'A|B'");
  const Proc preset = cli("measure --preset bell --kind eof --partition 'A|B'");
  std::remove(path.c_str());
  REQUIRE(file.code == 0);
  REQUIRE(preset.code == 0);
  const auto a = nlohmann::json::parse(file.out), b = nlohmann::json::parse(preset.out);
  CHECK(a["value"] == b["value"]);
  CHECK(a["value"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string path = "integration_sweep.csv";
  const Proc direct = cli("sweep --preset example1 --family tsallis --steps 5");
  const Proc to_file = cli("sweep --preset example1 --family tsallis --steps 5 --out " + path);
  REQUIRE(direct.code == 0);
  REQUIRE(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("unwritable output path is an error") {
  CHECK(cli("corpus --suite grids --out /nonexistent-dir/x.json").code == 2);
}

TEST_CASE("verify walks through the selectors") {
  CHECK(cli("verify --preset example1 --theorem thm1-concurrence --auto").code == 0);
  CHECK(cli("verify --preset example1 --theorem thm2-concurrence --auto --alpha 3").code == 0);
  CHECK(cli("verify --preset example1 --theorem thm3-eof --auto").code == 0);
  CHECK(cli("verify --preset example1 --theorem thm7-cren --auto --alpha 2.5").code == 0);
  CHECK(cli("verify --preset example1 --theorem thm9-tsallis --q 2.5 --auto").code == 0);
  CHECK(cli("verify --preset example1 --theorem thm13-renyi --aacute 3 --auto").code == 0);
  CHECK(cli("verify --preset example1 --theorem thm11-teoa --q 1.5 --budget 100").code == 3);
  CHECK(cli("verify --preset example1 --theorem thm15-reoa --aacute 1.2 --budget 100").code == 3);
  CHECK(cli("verify --preset example1 --theorem thm15-reoa").code == 2);
  CHECK(cli("verify --preset example1 --theorem thm1-concurrence --mu 2.1 --ell 2").code == 1);
  CHECK(cli("verify --preset ghz:5 --theorem thm2-concurrence --mu 1 --ell 1").code == 3);
}

TEST_CASE("verify report is valid JSON with the expected verdict") {
  const Proc p = cli("verify --preset example1 --theorem thm3-eof --auto");
  REQUIRE(p.code == 0);
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["mu"][0].get<double>() == doctest::Approx(2.33339404125).epsilon(1e-10));
  CHECK(j["ell"][0].get<double>() == doctest::Approx(2.14136155176).epsilon(1e-10));
}

TEST_CASE("corpus runs every suite") {
  const Proc p = cli("corpus --samples 50 --seed 5");
  REQUIRE(p.code == 0);
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["suites"].size() == 6);
  for (const auto& s : j["suites"]) CHECK(s["status"] == "pass");
}

TEST_CASE("usage errors") {
  CHECK(cli("").code == 2);
  CHECK(cli("measure --preset nope --partition 'A|B'").code == 2);
  CHECK(cli("sweep --preset example1 --bounds ours,zzz").code == 2);
  CHECK(cli("verify --preset example1 --theorem thm1-concurrence --alpha 1").code == 2);
}
