// kpsolve: transmission cases, length spectra and verification runs for the
// nonlinear Kronig-Penney lattice in a uniform field.
//
//   kpsolve case     [config.json] [overrides] [--out DIR]
//   kpsolve spectrum [config.json] --kind t|E [--grid v1,v2,...] [--out DIR]
//   kpsolve verify   [config.json] [--L n] [--out DIR]
//
// Exit status: 0 success, 1 computation failure, 2 invalid input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kp/case_spec.hpp"
#include "kp/report.hpp"
#include "kp/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitInvalid = 2;

struct Overrides {
  std::string config;
  std::optional<double> E, F, alpha, beta, R0, R1, k, eps_match, step;
  std::optional<int> L_max;
  std::string out;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("config", o.config, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--e", o.E, "eigenenergy E");
  cmd->add_option("--f", o.F, "field strength F");
  cmd->add_option("--alpha", o.alpha, "nonlinearity intensity");
  cmd->add_option("--beta", o.beta, "delta strength");
  cmd->add_option("--r0", o.R0, "incident amplitude");
  cmd->add_option("--r1", o.R1, "reflected amplitude");
  cmd->add_option("--k", o.k, "wave vector");
  cmd->add_option("--lmax", o.L_max, "maximum lattice length");
  cmd->add_option("--eps-match", o.eps_match, "relative tolerance of the right-boundary match");
  cmd->add_option("--step", o.step, "oracle integration step (must divide 1)");
  cmd->add_option("--out", o.out, "directory for JSON/CSV outputs");
}

kp::CaseSpec resolve(const Overrides& o) {
  kp::CaseSpec s = o.config.empty() ? kp::CaseSpec{} : kp::load_case_spec(o.config);
  if (o.E) s.params.E = *o.E;
  if (o.F) s.params.F = *o.F;
  if (o.alpha) s.params.alpha = *o.alpha;
  if (o.beta) s.params.beta = *o.beta;
  if (o.L_max) s.params.L_max = *o.L_max;
  if (o.R0) s.R0 = *o.R0;
  if (o.R1) s.R1 = *o.R1;
  if (o.k) s.k = *o.k;
  if (o.eps_match) s.eps_match = *o.eps_match;
  if (o.step) s.oracle_step = *o.step;
  s.validate();
  return s;
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream f(path);
  if (!f) throw kp::ComputationError("cannot write " + path.string());
  return f;
}

int run_case(const Overrides& o) {
  const kp::CaseSpec spec = resolve(o);
  const kp::CaseReport report = kp::build_case_report(spec);
  kp::print_summary(std::cout, report);
  if (!o.out.empty()) {
    open_out(o.out, "report.json") << kp::to_json(report).dump(2) << '\n';
    auto csv = open_out(o.out, "density.csv");
    kp::write_density_csv(csv, report.density);
  }
  return report.solution.scan.prop.blowup_site ? kExitComputation : kExitOk;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      g.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw kp::InvalidInput("--grid: cannot parse \"" + item + "\"");
    }
  }
  return g;
}

int run_spectrum(const Overrides& o, std::string kind, const std::optional<std::string>& grid_text) {
  kp::CaseSpec spec = resolve(o);
  if (kind.empty()) kind = spec.spectrum_kind;
  if (kind != "t" && kind != "E") throw kp::InvalidInput("spectrum kind must be t or E");
  if (grid_text) (kind == "t" ? spec.t_grid : spec.E_grid) = parse_grid(*grid_text);
  spec.validate();

  kp::SweepSetup setup{spec.params, spec.R0, spec.R1, spec.k, spec.eps_match};
  const kp::SpectrumTable table =
      kind == "t" ? kp::t_length_spectrum(setup, spec.t_grid.value_or(kp::default_t_grid()))
                  : kp::energy_length_spectrum(setup, spec.E_grid.value_or(kp::default_energy_grid()));

  bool failed = false;
  for (const kp::SpectrumRow& r : table.rows) {
    std::cout << "[" << r.value << ", (";
    for (std::size_t i = 0; i < r.lengths.size(); ++i) std::cout << (i ? ", " : "") << r.lengths[i];
    std::cout << ")]";
    if (r.error) {
      std::cout << "  error: " << *r.error;
      failed = true;
    }
    std::cout << '\n';
  }
  for (const kp::InverseEntry& e : kp::multivalue_detect(table)) {
    std::cout << "multivalued L=" << e.L << ":";
    for (double v : e.values) std::cout << ' ' << v;
    std::cout << '\n';
  }
  if (!o.out.empty()) {
    auto rows = open_out(o.out, "spectrum.csv");
    kp::write_spectrum_csv(rows, table);
    auto inv = open_out(o.out, "spectrum_inverse.csv");
    kp::write_inverse_csv(inv, table);
    open_out(o.out, "spectrum.json") << kp::to_json(table).dump(2) << '\n';
  }
  return failed ? kExitComputation : kExitOk;
}

int run_verify(const Overrides& o, std::optional<int> L) {
  const kp::CaseSpec spec = resolve(o);
  const kp::VerificationReport rep = kp::run_verification(spec, L);
  for (const kp::CheckResult& c : rep.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " = " << c.value << " (tol " << c.tolerance << ")\n";
  }
  std::cout << (rep.pass() ? "PASS" : "FAIL") << " verification over [0, " << rep.L << "]\n";
  if (!o.out.empty()) open_out(o.out, "verify.json") << kp::to_json(rep).dump(2) << '\n';
  return rep.pass() ? kExitOk : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonlinear Kronig-Penney transmission solver"};
  app.require_subcommand(1);

  Overrides case_opts, spectrum_opts, verify_opts;
  auto* case_cmd = app.add_subcommand("case", "solve one transmission case");
  add_common(case_cmd, case_opts);

  std::string kind;
  std::optional<std::string> grid;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "sweep t or E and list admissible lengths");
  add_common(spectrum_cmd, spectrum_opts);
  spectrum_cmd->add_option("--kind", kind, "swept quantity")->check(CLI::IsMember({"t", "E"}));
  spectrum_cmd->add_option("--grid", grid, "comma-separated grid values");

  std::optional<int> verify_L;
  auto* verify_cmd = app.add_subcommand("verify", "check invariants and compare against direct integration");
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--L", verify_L, "length to verify over (default: first admissible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*case_cmd) return run_case(case_opts);
    if (*spectrum_cmd) return run_spectrum(spectrum_opts, kind, grid);
    if (*verify_cmd) return run_verify(verify_opts, verify_L);
  } catch (const kp::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const kp::ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitInvalid;
}
