#include "kp/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include "kp/oracle.hpp"

namespace kp {
namespace {

nlohmann::json complex_json(cplx c) { return {{"re", c.real()}, {"im", c.imag()}}; }

// JSON has no infinity; an unbounded conductance is written as null.
nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw InvalidInput("grid needs step > 0 and hi >= lo");
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n) + 2);
  for (long i = 0; i <= n; ++i) g.push_back(lo + static_cast<double>(i) * step);
  if (hi - g.back() > 1e-9 * step) g.push_back(hi);
  return g;
}

double current_spread(const ModelParams& params, const Propagation& prop, int L, double step) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double x : uniform_grid(0.0, L, step)) {
    const double j = probability_current(wavefunction_at(params, prop, x));
    lo = std::min(lo, j);
    hi = std::max(hi, j);
  }
  return hi - lo;
}

CaseReport build_case_report(const CaseSpec& spec) {
  spec.validate();
  CaseReport r;
  r.spec = spec;
  r.solution = solve_case(spec.params, spec.R0, spec.R1, spec.k, spec.eps_match);
  const Propagation& prop = r.solution.scan.prop;

  if (spec.density_L) {
    r.profile_L = *spec.density_L;
  } else if (!r.solution.admissible.empty()) {
    r.profile_L = r.solution.admissible.front().L;
  }
  if (r.profile_L && *r.profile_L > prop.sites()) r.profile_L.reset();

  if (r.profile_L) {
    BoundaryData outer = r.solution.boundary;
    outer.b = phase_b(spec.params, prop, *r.profile_L, spec.k);
    const auto grid = uniform_grid(-3.0, *r.profile_L + 3.0, spec.density_step);
    r.density = density_profile(spec.params, prop, grid, outer, *r.profile_L);
  } else {
    const auto grid = uniform_grid(0.0, prop.sites(), spec.density_step);
    r.density = density_profile(spec.params, prop, grid, spec.R0);
  }

  const int span = r.profile_L.value_or(prop.sites());
  r.current.interior = probability_current(wavefunction_at(spec.params, prop, 0.0));
  r.current.interior_spread = current_spread(spec.params, prop, span, spec.density_step);
  r.current.transmitted = spec.k * r.solution.boundary.T * r.solution.boundary.T;
  r.conductance = conductance_landauer(r.solution.boundary.t);
  return r;
}

nlohmann::json to_json(const CaseReport& r) {
  const CaseSolution& s = r.solution;
  nlohmann::json adm = nlohmann::json::array();
  for (const Admissible& a : s.admissible) adm.push_back({{"L", a.L}, {"b", a.b}, {"residual", a.residual}});
  nlohmann::json j{{"spec", r.spec},
                   {"R0", s.boundary.R0},
                   {"R1", s.boundary.R1},
                   {"k", s.boundary.k},
                   {"T", s.boundary.T},
                   {"T2", s.boundary.T * s.boundary.T},
                   {"t", s.boundary.t},
                   {"a", s.match.a},
                   {"branch", to_string(s.match.branch)},
                   {"arg_varphi0", s.match.arg_varphi0},
                   {"A1", complex_json(s.match.coeff1.A)},
                   {"B1", complex_json(s.match.coeff1.B)},
                   {"admissible", adm},
                   {"propagated_sites", s.scan.prop.sites()},
                   {"blowup_site", s.scan.prop.blowup_site ? nlohmann::json(*s.scan.prop.blowup_site)
                                                           : nlohmann::json(nullptr)},
                   {"current",
                    {{"interior", r.current.interior},
                     {"interior_spread", r.current.interior_spread},
                     {"transmitted", r.current.transmitted}}},
                   {"conductance_ratio", finite_or_null(r.conductance)}};
  j["profile_L"] = r.profile_L ? nlohmann::json(*r.profile_L) : nlohmann::json(nullptr);

  const SiteTable sites(r.spec.params);
  const SiteResiduals res = site_residuals(r.spec.params, sites, s.scan.prop);
  const auto xs = uniform_grid(0.0, s.scan.prop.sites(), 1.0);
  j["residuals"] = {{"wronskian", wronskian_residual(r.spec.params, xs)},
                    {"continuity", res.continuity},
                    {"jump", res.jump}};
  return j;
}

void print_summary(std::ostream& os, const CaseReport& r) {
  const CaseSolution& s = r.solution;
  const auto old = os.flags();
  os << std::fixed << std::setprecision(4);
  os << "E=" << r.spec.params.E << " F=" << r.spec.params.F << " alpha=" << r.spec.params.alpha
     << " beta=" << r.spec.params.beta << " R0=" << r.spec.R0 << " R1=" << r.spec.R1 << " k=" << r.spec.k << "\n";
  os << "T=" << s.boundary.T << " T^2=" << s.boundary.T * s.boundary.T << " t=" << s.boundary.t << "\n";
  os << "branch=" << to_string(s.match.branch) << " a=" << s.match.a << " A1=" << s.match.coeff1.A.real()
     << " B1=" << s.match.coeff1.B.imag() << "i\n";
  os << "admissible L (eps_match=" << std::setprecision(3) << r.spec.eps_match << "):";
  os << std::setprecision(4);
  if (s.admissible.empty()) os << " none";
  for (const Admissible& a : s.admissible) os << " " << a.L << "(b=" << a.b << ")";
  os << "\n";
  if (s.scan.prop.blowup_site) os << "propagation blew up after site " << *s.scan.prop.blowup_site << "\n";
  os << "current: interior=" << r.current.interior << " transmitted k*T^2=" << r.current.transmitted << "\n";
  os << "Landauer t/(1-t)=" << r.conductance << "\n";
  os.flags(old);
}

void write_density_csv(std::ostream& os, const std::vector<DensitySample>& samples) {
  os << "x,density,relative_density\n" << std::setprecision(17);
  for (const DensitySample& s : samples) os << s.x << ',' << s.density << ',' << s.relative_density << '\n';
}

void write_spectrum_csv(std::ostream& os, const SpectrumTable& table) {
  os << "swept_value,L\n" << std::setprecision(17);
  for (const SpectrumRow& r : table.rows) {
    for (int L : r.lengths) os << r.value << ',' << L << '\n';
  }
}

void write_inverse_csv(std::ostream& os, const SpectrumTable& table) {
  os << "L,swept_value\n" << std::setprecision(17);
  for (const InverseEntry& e : table.inverse) {
    for (double v : e.values) os << e.L << ',' << v << '\n';
  }
}

nlohmann::json to_json(const SpectrumTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SpectrumRow& r : table.rows) {
    nlohmann::json row{{"value", r.value}, {"L", r.lengths}};
    if (r.error) row["error"] = *r.error;
    rows.push_back(row);
  }
  nlohmann::json inv = nlohmann::json::array();
  for (const InverseEntry& e : table.inverse) inv.push_back({{"L", e.L}, {"values", e.values}});
  nlohmann::json multi = nlohmann::json::array();
  for (const InverseEntry& e : multivalue_detect(table)) multi.push_back({{"L", e.L}, {"values", e.values}});
  return {{"axis", to_string(table.axis)}, {"rows", rows}, {"inverse", inv}, {"multivalued", multi}};
}

SiteResiduals site_residuals(const ModelParams& params, const SiteTable& sites, const Propagation& prop) {
  SiteResiduals r;
  for (int n = 1; n < prop.sites(); ++n) {
    const BasisValue& b = sites.at(n);
    const CoefficientPair& left = prop.segment(n);
    const CoefficientPair& right = prop.segment(n + 1);
    const cplx before = left.A * b.varphi + left.B * b.phi;
    const cplx after = right.A * b.varphi + right.B * b.phi;
    r.continuity = std::max(r.continuity, std::abs(after - before));
    r.jump = std::max(r.jump, std::abs(derivative_jump(b, left, right) - delta_kick(params, before)));
  }
  return r;
}

bool VerificationReport::pass() const {
  return !checks.empty() && std::ranges::all_of(checks, [](const CheckResult& c) { return c.pass; });
}

VerificationReport run_verification(const CaseSpec& spec, std::optional<int> L, const Propagator& propagator) {
  spec.validate();
  const MatchResult match = match_left(spec.params, spec.R0, spec.R1, spec.k);
  if (!L) {
    const CaseSolution c = solve_case(spec.params, spec.R0, spec.R1, spec.k, spec.eps_match);
    L = c.admissible.empty() ? spec.params.L_max : c.admissible.front().L;
  }
  if (*L < 1 || *L > spec.params.L_max) throw InvalidInput("verification length outside 1..L_max");

  ModelParams p = spec.params;
  p.L_max = *L;
  const SiteTable sites(p);
  const Propagation prop = propagator ? propagator(p, sites, match.coeff1) : propagate(p, sites, match.coeff1);

  VerificationReport rep;
  rep.L = *L;
  auto add = [&rep](std::string name, double value, double tol) {
    rep.checks.push_back({std::move(name), value, tol, value <= tol});
  };
  if (!prop.complete(*L)) {
    rep.checks.push_back({"propagation", static_cast<double>(prop.sites()), static_cast<double>(*L), false});
    return rep;
  }

  add("wronskian", wronskian_residual(p, uniform_grid(0.0, *L, 0.5)), kTolWronskian);
  const SiteResiduals sr = site_residuals(p, sites, prop);
  add("continuity", sr.continuity, kTolContinuity);
  add("jump", sr.jump, kTolJump);
  add("current_constancy", current_spread(p, prop, *L, 0.01), kTolCurrent);

  const BasisValue& b0 = sites.at(0);
  const CoefficientPair& c1 = prop.segment(1);
  const auto traj = integrate_direct(p, c1.A * b0.varphi + c1.B * b0.phi, c1.A * b0.varphi_x + c1.B * b0.phi_x,
                                     *L, IntegrationConfig{spec.oracle_step});
  const OracleDeviation dev = compare_trajectory(p, prop, traj);
  add("oracle_psi", dev.max_dpsi, kTolOracle);
  add("oracle_psi_x", dev.max_dpsi_x, kTolOracle);
  return rep;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  }
  return {{"L", r.L}, {"pass", r.pass()}, {"checks", checks}};
}

}  // namespace kp
