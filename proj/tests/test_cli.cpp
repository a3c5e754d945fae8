#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "skewinfo/catalog.hpp"
#include "skewinfo/json_io.hpp"
#include "skewinfo/observable_bounds.hpp"

using namespace skewinfo;
using nlohmann::json;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SKEWCTL_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) {
    s.pop_back();
  }
  return s;
}

const char* kRoot3Over2 = "0.8660254037844386";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("skew prints 12-significant-digit scalars") {
  const CmdResult zero = run_cli("skew --state bloch:0,0,0 --observable pauli.z");
  CHECK(zero.exit_code == 0);
  CHECK(trimmed(zero.out) == "0");

  const CmdResult half = run_cli(std::string("skew --state bloch:") + kRoot3Over2 +
                                 ",0,0 --observable pauli.y");
  CHECK(half.exit_code == 0);
  CHECK(std::abs(std::stod(half.out) - 0.5) < 5e-8);
}

TEST_CASE("CLI output equals the in-process value bit-for-bit") {
  const CmdResult res =
      run_cli(std::string("skew --state bloch:") + kRoot3Over2 + ",0,0 --channel pd:0.1");
  CHECK(res.exit_code == 0);
  const DensityState rho = bloch_qubit({std::sqrt(3.0) / 2.0, 0.0, 0.0});
  CHECK(trimmed(res.out) == format_sig12(skew_channel(rho, phase_damping(0.1))));

  const CmdResult obs =
      run_cli(std::string("skew --state bloch:") + kRoot3Over2 + ",0,0 --observable spin1.x");
  CHECK(obs.exit_code == 2); // dimension mismatch surfaces as an input error
}

TEST_CASE("skew --json wraps the scalar") {
  const CmdResult res = run_cli("skew --state mixed:2 --observable pauli.x --json");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["value"].get<double>() == 0.0);
}

TEST_CASE("bounds obs matches the library report") {
  const CmdResult res = run_cli(std::string("bounds obs --state bloch:") + kRoot3Over2 +
                                ",0,0 --targets pauli");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  const ObservableBoundReport rep =
      report(bloch_qubit({std::sqrt(3.0) / 2.0, 0.0, 0.0}), pauli_observables());
  CHECK(j["n"] == 3);
  CHECK(j["sum_skew"].get<double>() == rep.sum_skew);
  CHECK(j["bounds"]["lb1"].get<double>() == rep.lb1);
  CHECK(j["bounds"]["lb0"].get<double>() == *rep.lb0);
  CHECK(j["bounds"]["lb0bar"].get<double>() == rep.lb0bar);
  CHECK(j["bounds"]["lb0_two"].is_null());
}

TEST_CASE("bounds obs accepts explicit target lists") {
  const CmdResult res =
      run_cli("bounds obs --state spin1:0.6,1.2 --targets spin1.x,spin1.y,spin1.z");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["n"] == 3);
  CHECK(std::abs(j["sum_skew"].get<double>() - analytic::spin1_sum(0.6, 1.2)) < 1e-9);
}

TEST_CASE("bounds chan emits the channel report") {
  const CmdResult res = run_cli(std::string("bounds chan --state bloch:") + kRoot3Over2 +
                                ",0,0 --targets pd:0.1,ad:0.1,bf:0.1");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["N"] == 3);
  CHECK(j["n_kraus"] == 2);
  CHECK(std::abs(j["bounds"]["thm3"].get<double>() - 0.019971675165083) < 1e-9);
  CHECK(std::abs(j["bounds"]["thm4"].get<double>() - 0.025108609546289) < 1e-9);
  CHECK(j["search_exhaustive"] == true);
}

TEST_CASE("matrix files round-trip through the CLI") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path state_path = dir / "skewctl_state.json";
  const fs::path obs_path = dir / "skewctl_obs.json";

  const DensityState rho = bloch_qubit({0.2, 0.1, -0.5});
  {
    std::ofstream out(state_path);
    out << nlohmann::ordered_json{{"rho", matrix_to_json(rho.matrix())}}.dump();
  }
  {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    std::ofstream out(obs_path);
    out << nlohmann::ordered_json{{"observable", matrix_to_json(m)}}.dump();
  }
  const CmdResult res = run_cli("skew --state " + state_path.string() + " --observable " +
                                obs_path.string());
  CHECK(res.exit_code == 0);
  ComplexMatrix sz(2, 2);
  sz << 1, 0, 0, -1;
  CHECK(trimmed(res.out) == format_sig12(skew_operator(rho, sz)));
  fs::remove(state_path);
  fs::remove(obs_path);
}

TEST_CASE("figure writes CSV to the requested path") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "skewctl_fig2.csv";
  const CmdResult res = run_cli("figure fig2 --res 5 --out " + path.string());
  CHECK(res.exit_code == 0);
  std::ifstream in(path);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "theta,sum,lb1,lb0,lb0bar");
  std::string first;
  REQUIRE(std::getline(in, first));
  CHECK(first == "0,1,0.980936347194,0.542893218813,0.5");
  fs::remove(path);
}

TEST_CASE("verify exits zero and reports deterministically") {
  const CmdResult res = run_cli("verify --suite lemmas --trials 50 --seed 7 --dims 2");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["pass"] == true);
  CHECK(j["suite"] == "lemmas");

  const CmdResult again = run_cli("verify --suite lemmas --trials 50 --seed 7 --dims 2");
  CHECK(again.out == res.out);
}

TEST_CASE("parse and validation failures exit with code 2") {
  CHECK(run_cli("skew --state bloch:2,0,0 --observable pauli.z").exit_code == 2);
  CHECK(run_cli("skew --state bloch:0,0 --observable pauli.z").exit_code == 2);
  CHECK(run_cli("skew --state nonsense:1 --observable pauli.z").exit_code == 2);
  CHECK(run_cli("skew --state bloch:0,0,0 --observable pauli").exit_code == 2);
  CHECK(run_cli("skew --state bloch:0,0,0").exit_code == 2);
  CHECK(run_cli("bounds obs --state bloch:0,0,0 --targets pauli.w").exit_code == 2);
  CHECK(run_cli("bounds chan --state bloch:0,0,0 --targets pd:1.5").exit_code == 2);
  CHECK(run_cli("figure fig7").exit_code == 2);
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("SKEWCTL_TOL_EQ must parse to a positive number") {
  const CmdResult bad = run_cli(
      "bounds obs --state bloch:0,0,0 --targets pauli ; true"); // control: valid call
  CHECK(bad.exit_code == 0);
  CmdResult res;
  {
    const std::string cmd = std::string("SKEWCTL_TOL_EQ=abc ") + SKEWCTL_BIN +
                            " bounds obs --state bloch:0,0,0 --targets pauli 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[256];
    while (std::fread(buffer, 1, sizeof buffer, pipe) > 0) {
    }
    res.exit_code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(res.exit_code == 2);
}

TEST_CASE("help succeeds") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("skew --help").exit_code == 0);
}

} // TEST_SUITE
