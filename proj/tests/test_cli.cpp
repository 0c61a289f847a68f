#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "cases.hpp"
#include "kp/report.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(KPSOLVE_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string config(const char* name) { return std::string(KP_CONFIG_DIR) + "/" + name + ".json"; }

fs::path fresh_dir(const char* name) {
  const fs::path d = fs::temp_directory_path() / name;
  fs::remove_all(d);
  return d;
}

nlohmann::json read_json(const fs::path& p) { return nlohmann::json::parse(std::ifstream(p)); }

}  // namespace

TEST_CASE("case subcommand writes report and density") {
  const auto out = fresh_dir("kp_cli_case");
  REQUIRE(run("case " + config("case1") + " --out " + out.string()) == 0);
  const auto rep = read_json(out / "report.json");
  CHECK(rep["a"].get<double>() == doctest::Approx(1.2766).epsilon(1e-4));
  std::vector<int> Ls;
  for (const auto& e : rep["admissible"]) Ls.push_back(e["L"].get<int>());
  CHECK(Ls == std::vector<int>{6, 45, 46});
  CHECK(rep.contains("residuals"));

  std::ifstream csv(out / "density.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "x,density,relative_density");
}

TEST_CASE("flag overrides take precedence") {
  const auto out = fresh_dir("kp_cli_override");
  REQUIRE(run("case " + config("case1") + " --r1 0.001 --alpha 0.02 --beta 0.415 --out " + out.string()) == 0);
  const auto rep = read_json(out / "report.json");
  CHECK(rep["t"].get<double>() == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("invalid input exits 2 before computing") {
  const auto out = fresh_dir("kp_cli_invalid");
  CHECK(run("case " + config("case1") + " --r1 0.5 --out " + out.string()) == 2);
  CHECK_FALSE(fs::exists(out / "report.json"));
  CHECK(run("case --e -1") == 2);
  CHECK(run("case --step 0.3") == 2);
  CHECK(run("bogus") == 2);
  CHECK(run("") == 2);
  CHECK(run("spectrum --kind q") == 2);
  CHECK(run("spectrum --kind t --grid 0.1,abc") == 2);
}

TEST_CASE("computation failure exits 1") {
  CHECK(run("case --alpha 50 --beta 5") == 1);
}

TEST_CASE("verify subcommand") {
  const auto out = fresh_dir("kp_cli_verify");
  CHECK(run("verify " + config("case1") + " --step 0.001 --out " + out.string()) == 0);
  const auto rep = read_json(out / "verify.json");
  CHECK(rep["pass"].get<bool>());
  CHECK(rep["L"].get<int>() == 6);
  CHECK(run("verify " + config("case2")) == 0);
  CHECK(run("verify " + config("case3") + " --L 11") == 0);
}

TEST_CASE("spectrum subcommand") {
  const auto out = fresh_dir("kp_cli_spectrum");
  REQUIRE(run("spectrum " + config("fig4a") + " --grid 0.6,1 --out " + out.string()) == 0);
  std::ifstream csv(out / "spectrum.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "swept_value,L");
  CHECK(fs::exists(out / "spectrum_inverse.csv"));
  const auto j = read_json(out / "spectrum.json");
  CHECK(j["rows"].size() == 2);

  const auto empty = fresh_dir("kp_cli_empty");
  CHECK(run("spectrum " + config("fig4b") + " --grid \"\" --out " + empty.string()) == 0);
  CHECK(read_json(empty / "spectrum.json")["rows"].empty());
}

TEST_CASE("negative control: corrupted recurrence sign fails the jump check") {
  kp::CaseSpec spec;
  const auto c = kp::test::case1();
  spec.params = c.params;
  spec.R0 = c.R0;
  spec.R1 = c.R1;
  const kp::Propagator flipped = [](const kp::ModelParams& p, const kp::SiteTable& sites,
                                    const kp::CoefficientPair& init) {
    kp::ModelParams q = p;
    q.alpha = -q.alpha;
    q.beta = -q.beta;
    return kp::propagate(q, sites, init);
  };
  const auto bad = kp::run_verification(spec, 6, flipped);
  CHECK_FALSE(bad.pass());
  for (const auto& chk : bad.checks) {
    if (chk.name == "jump") CHECK_FALSE(chk.pass);
    if (chk.name == "continuity") CHECK(chk.pass);
  }
  CHECK(kp::run_verification(spec, 6).pass());
}
