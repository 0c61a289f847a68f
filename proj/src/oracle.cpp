#include "kp/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace kp {

int IntegrationConfig::steps_per_site() const {
  if (!(step > 0.0 && step <= 1.0)) throw InvalidInput("integration step must lie in (0, 1]");
  const double n = 1.0 / step;
  const double r = std::round(n);
  if (std::abs(n - r) > 1e-9 * r) throw InvalidInput("integration step must divide 1 evenly");
  if (!(cap > 0.0)) throw InvalidInput("integration cap must be positive");
  return static_cast<int>(r);
}

namespace {

using State = std::array<cplx, 2>;  // psi, psi_x

State rhs(double E, double F, double x, const State& y) {
  return {y[1], -2.0 * (E + F * x) * y[0]};
}

State axpy(const State& y, double h, const State& k) { return {y[0] + h * k[0], y[1] + h * k[1]}; }

State rk4_step(double E, double F, double x, const State& y, double h) {
  const State k1 = rhs(E, F, x, y);
  const State k2 = rhs(E, F, x + h / 2, axpy(y, h / 2, k1));
  const State k3 = rhs(E, F, x + h / 2, axpy(y, h / 2, k2));
  const State k4 = rhs(E, F, x + h, axpy(y, h, k3));
  return {y[0] + h / 6 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

}  // namespace

std::vector<WaveSample> integrate_direct(const ModelParams& params, cplx psi0, cplx psi_x0, int L,
                                         const IntegrationConfig& config) {
  params.validate();
  if (L < 1) throw InvalidInput("integration length must be at least 1");
  if (!std::isfinite(std::abs(psi0)) || !std::isfinite(std::abs(psi_x0))) {
    throw InvalidInput("initial values must be finite");
  }
  const int per_site = config.steps_per_site();
  const double h = 1.0 / per_site;

  std::vector<WaveSample> out;
  out.reserve(static_cast<std::size_t>(L) * per_site + 1);
  State y{psi0, psi_x0};
  out.push_back({0.0, y[0], y[1]});
  for (int site = 0; site < L; ++site) {
    for (int i = 0; i < per_site; ++i) {
      y = rk4_step(params.E, params.F, site + i * h, y, h);
      const bool at_site = i + 1 == per_site;
      const double x = at_site ? site + 1.0 : site + (i + 1) * h;
      if (at_site && site + 1 < L) {
        y[1] += 2.0 * (params.beta + params.alpha * std::norm(y[0])) * y[0];
      }
      out.push_back({x, y[0], y[1]});
    }
    if (!(std::abs(y[0]) <= config.cap) || !(std::abs(y[1]) <= config.cap)) {
      std::ostringstream os;
      os << "direct integration exceeded cap " << config.cap << " at site " << site + 1;
      throw BlowUpError(os.str(), site + 1);
    }
  }
  return out;
}

OracleDeviation compare_exact_oracle(const ModelParams& params, const MatchResult& match, int L,
                                     const IntegrationConfig& config) {
  if (L < 1 || L > params.L_max) throw InvalidInput("comparison length outside 1..L_max");
  ModelParams p = params;
  p.L_max = L;

  Propagation prop;
  try {
    prop = propagate(p, match.coeff1);
  } catch (const ComputationError& e) {
    throw ComputationError(std::string("exact path: ") + e.what());
  }
  if (!prop.complete(L)) throw ComputationError("exact path: propagation blew up before L");

  const BasisValue b0 = basis_at(p, 0.0);
  const CoefficientPair& c1 = match.coeff1;
  std::vector<WaveSample> traj;
  try {
    traj = integrate_direct(p, c1.A * b0.varphi + c1.B * b0.phi, c1.A * b0.varphi_x + c1.B * b0.phi_x, L, config);
  } catch (const ComputationError& e) {
    throw ComputationError(std::string("oracle path: ") + e.what());
  }

  return compare_trajectory(p, prop, traj);
}

OracleDeviation compare_trajectory(const ModelParams& p, const Propagation& prop,
                                   const std::vector<WaveSample>& traj) {
  OracleDeviation d;
  for (const WaveSample& s : traj) {
    const WaveSample exact = wavefunction_at(p, prop, s.x);
    d.max_dpsi = std::max(d.max_dpsi, std::abs(exact.psi - s.psi));
    d.max_dpsi_x = std::max(d.max_dpsi_x, std::abs(exact.psi_x - s.psi_x));
    ++d.samples;
  }
  return d;
}

double linear_superposition_check(const ModelParams& params, const CoefficientPair& c1,
                                  const CoefficientPair& c2, cplx w1, cplx w2) {
  const SiteTable sites(params);
  const Propagation p1 = propagate(params, sites, c1);
  const Propagation p2 = propagate(params, sites, c2);
  const Propagation pm = propagate(params, sites, w1 * c1 + w2 * c2);
  const int n = std::min({p1.sites(), p2.sites(), pm.sites()});

  double scale = 0.0;
  double worst = 0.0;
  for (int i = 1; i <= n; ++i) {
    const CoefficientPair lin = w1 * p1.segment(i) + w2 * p2.segment(i);
    const CoefficientPair& mix = pm.segment(i);
    scale = std::max({scale, std::abs(mix.A), std::abs(mix.B), std::abs(lin.A), std::abs(lin.B)});
    worst = std::max({worst, std::abs(mix.A - lin.A), std::abs(mix.B - lin.B)});
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

}  // namespace kp
