#include "kp/boundary.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace kp {

const char* to_string(MatchBranch b) {
  switch (b) {
    case MatchBranch::PositiveArg: return "positive-arg";
    case MatchBranch::NegativeArg: return "negative-arg";
    case MatchBranch::ZeroArg: return "zero-arg";
  }
  return "unknown";
}

namespace {

void check_amplitudes(double R0, double R1) {
  if (!(R0 > 0.0) || !std::isfinite(R0)) throw InvalidInput("R0 must be positive and finite");
  if (!(R1 >= 0.0) || !std::isfinite(R1)) throw InvalidInput("R1 must be non-negative and finite");
  if (R1 > R0) {
    std::ostringstream os;
    os << "R1 = " << R1 << " exceeds R0 = " << R0 << " (probability conservation)";
    throw InvalidInput(os.str());
  }
}

}  // namespace

MatchResult match_left(const ModelParams& params, double R0, double R1, double k) {
  params.validate();
  check_amplitudes(R0, R1);
  if (!(k > 0.0)) throw InvalidInput("wave vector k must be positive");

  const BasisValue b0 = basis_at(params, 0.0);
  const double arg = std::arg(b0.varphi);  // (-pi, pi]
  const double mod_varphi = std::abs(b0.varphi);
  const double mod_phi = std::abs(b0.phi);

  MatchResult m;
  m.arg_varphi0 = arg;
  double a1 = 0.0;
  double b1 = 0.0;
  if (arg >= 0.0) {
    m.branch = arg > 0.0 ? MatchBranch::PositiveArg : MatchBranch::ZeroArg;
    m.a = arg / k;
    a1 = R0 / mod_varphi;
    b1 = R1 / mod_phi;
  } else {
    m.branch = MatchBranch::NegativeArg;
    m.a = -arg / k;
    a1 = R1 / mod_varphi;
    b1 = R0 / mod_phi;
  }
  m.coeff1 = {cplx(a1, 0.0), cplx(0.0, -b1)};
  return m;
}

cplx left_value(double R0, double R1, double k, double a) {
  return R0 * std::polar(1.0, k * a) + R1 * std::polar(1.0, -k * a);
}

RightScan scan_right(const ModelParams& params, const SiteTable& sites, const MatchResult& match, double T,
                     double eps_match, double floor_abs) {
  if (!(T >= 0.0)) throw InvalidInput("T must be non-negative");
  if (!(eps_match > 0.0)) throw InvalidInput("eps_match must be positive");
  RightScan s;
  s.prop = propagate(params, sites, match.coeff1);
  s.psi = site_values(sites, s.prop);
  const double t2 = T * T;
  const double scale = std::max(t2, floor_abs);
  s.residual.reserve(s.psi.size());
  for (std::size_t i = 0; i < s.psi.size(); ++i) {
    const double r = (std::norm(s.psi[i]) - t2) / scale;
    s.residual.push_back(r);
    if (std::abs(r) <= eps_match) s.lengths.push_back(static_cast<int>(i) + 1);
  }
  return s;
}

RightScan scan_right(const ModelParams& params, const MatchResult& match, double T, double eps_match,
                     double floor_abs) {
  return scan_right(params, SiteTable(params), match, T, eps_match, floor_abs);
}

double phase_b(cplx psi_L, int L, double k) {
  if (!(k > 0.0)) throw InvalidInput("wave vector k must be positive");
  return std::arg(psi_L) / k - L;
}

double phase_b(const ModelParams& params, const Propagation& prop, int L, double k) {
  return phase_b(wavefunction_at(params, prop, L).psi, L, k);
}

double transmission_coefficient(double R0, double R1) {
  check_amplitudes(R0, R1);
  return 1.0 - (R1 * R1) / (R0 * R0);
}

double conductance_landauer(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("transmission coefficient must lie in [0, 1]");
  if (t == 1.0) return std::numeric_limits<double>::infinity();
  return t / (1.0 - t);
}

BoundaryData make_boundary(double R0, double R1, double k) {
  check_amplitudes(R0, R1);
  BoundaryData d;
  d.R0 = R0;
  d.R1 = R1;
  d.k = k;
  d.T = std::sqrt(R0 * R0 - R1 * R1);
  d.t = transmission_coefficient(R0, R1);
  return d;
}

CaseSolution solve_case(const ModelParams& params, double R0, double R1, double k, double eps_match) {
  CaseSolution c;
  c.params = params;
  c.boundary = make_boundary(R0, R1, k);
  c.match = match_left(params, R0, R1, k);
  c.boundary.a = c.match.a;
  const SiteTable sites(params);
  c.scan = scan_right(params, sites, c.match, c.boundary.T, eps_match);
  for (int L : c.scan.lengths) {
    const auto i = static_cast<std::size_t>(L - 1);
    c.admissible.push_back({L, phase_b(c.scan.psi[i], L, k), c.scan.residual[i]});
  }
  return c;
}

}  // namespace kp
