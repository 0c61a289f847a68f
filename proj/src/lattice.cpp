#include "kp/lattice.hpp"

#include <cmath>
#include <sstream>

namespace kp {

void ModelParams::validate() const {
  auto fail = [](const char* field, const char* rule, double value) {
    std::ostringstream os;
    os << field << " = " << value << ": " << rule;
    throw InvalidInput(os.str());
  };
  if (!(E > 0.0) || !std::isfinite(E)) fail("E", "must be positive and finite", E);
  if (!(F > 0.0) || !std::isfinite(F)) fail("F", "must be positive and finite", F);
  if (!std::isfinite(alpha)) fail("alpha", "must be finite", alpha);
  if (!std::isfinite(beta)) fail("beta", "must be finite", beta);
  if (L_max < 1) fail("L_max", "must be at least 1", L_max);
}

SiteTable::SiteTable(const ModelParams& params) {
  params.validate();
  sites_.reserve(static_cast<std::size_t>(params.L_max) + 1);
  for (int n = 0; n <= params.L_max; ++n) sites_.push_back(basis_at(params, n));
}

cplx delta_kick(const ModelParams& params, cplx psi) {
  return 2.0 * (params.beta + params.alpha * std::norm(psi)) * psi;
}

CoefficientPair lattice_step(const ModelParams& params, const BasisValue& site, const CoefficientPair& coeff) {
  const cplx psi = coeff.A * site.varphi + coeff.B * site.phi;
  const cplx g = delta_kick(params, psi);
  return {coeff.A - site.phi * g, coeff.B + site.varphi * g};
}

namespace {

bool over_cap(const CoefficientPair& c) {
  const double a = std::abs(c.A);
  const double b = std::abs(c.B);
  return !(a <= kBlowUpCap) || !(b <= kBlowUpCap);
}

}  // namespace

CoefficientPair lattice_step(const ModelParams& params, int n, const CoefficientPair& coeff) {
  params.validate();
  if (n < 1 || n > params.L_max - 1) {
    std::ostringstream os;
    os << "site " << n << " outside 1.." << params.L_max - 1;
    throw InvalidInput(os.str());
  }
  const CoefficientPair next = lattice_step(params, basis_at(params, n), coeff);
  if (over_cap(next)) {
    std::ostringstream os;
    os << "coefficients exceed " << kBlowUpCap << " after site " << n;
    throw BlowUpError(os.str(), n);
  }
  return next;
}

Propagation propagate(const ModelParams& params, const SiteTable& sites, const CoefficientPair& initial) {
  params.validate();
  if (sites.max_site() < params.L_max) throw InvalidInput("site table shorter than L_max");
  if (!std::isfinite(std::abs(initial.A)) || !std::isfinite(std::abs(initial.B))) {
    throw InvalidInput("initial coefficients must be finite");
  }
  Propagation out;
  out.coeffs.reserve(static_cast<std::size_t>(params.L_max));
  out.coeffs.push_back(initial);
  for (int n = 1; n < params.L_max; ++n) {
    const CoefficientPair next = lattice_step(params, sites.at(n), out.coeffs.back());
    if (over_cap(next)) {
      out.blowup_site = n;
      break;
    }
    out.coeffs.push_back(next);
  }
  return out;
}

Propagation propagate(const ModelParams& params, const CoefficientPair& initial) {
  return propagate(params, SiteTable(params), initial);
}

std::vector<CoefficientPair> propagate_cumulative(const ModelParams& params, const SiteTable& sites,
                                                  const CoefficientPair& initial) {
  params.validate();
  std::vector<CoefficientPair> out;
  out.reserve(static_cast<std::size_t>(params.L_max));
  cplx sum_phi = 0.0;
  cplx sum_varphi = 0.0;
  out.push_back(initial);
  for (int n = 1; n < params.L_max; ++n) {
    const BasisValue& s = sites.at(n);
    const CoefficientPair& cur = out.back();
    const cplx g = delta_kick(params, cur.A * s.varphi + cur.B * s.phi);
    sum_phi += s.phi * g;
    sum_varphi += s.varphi * g;
    out.push_back({initial.A - sum_phi, initial.B + sum_varphi});
  }
  return out;
}

int segment_index(double x, int L) {
  if (x < 1.0) return 1;
  const int n = static_cast<int>(std::floor(x)) + 1;
  return n > L ? L : n;
}

WaveSample wavefunction_at(const ModelParams& params, const Propagation& prop, double x) {
  if (!(x >= 0.0 && x <= prop.sites())) {
    std::ostringstream os;
    os << "x = " << x << " outside [0, " << prop.sites() << "]";
    throw InvalidInput(os.str());
  }
  const CoefficientPair& c = prop.segment(segment_index(x, prop.sites()));
  const BasisValue b = basis_at(params, x);
  return {x, c.A * b.varphi + c.B * b.phi, c.A * b.varphi_x + c.B * b.phi_x};
}

std::vector<cplx> site_values(const SiteTable& sites, const Propagation& prop) {
  std::vector<cplx> out;
  out.reserve(prop.coeffs.size());
  for (int n = 1; n <= prop.sites(); ++n) {
    const BasisValue& s = sites.at(n);
    const CoefficientPair& c = prop.segment(n);
    out.push_back(c.A * s.varphi + c.B * s.phi);
  }
  return out;
}

cplx derivative_jump(const BasisValue& site, const CoefficientPair& left, const CoefficientPair& right) {
  return (right.A - left.A) * site.varphi_x + (right.B - left.B) * site.phi_x;
}

std::vector<DensitySample> density_profile(const ModelParams& params, const Propagation& prop,
                                           std::span<const double> grid, double R0) {
  if (!(R0 > 0.0)) throw InvalidInput("R0 must be positive");
  std::vector<DensitySample> out;
  out.reserve(grid.size());
  for (double x : grid) {
    const double d = std::norm(wavefunction_at(params, prop, x).psi);
    out.push_back({x, d, d / (R0 * R0)});
  }
  return out;
}

std::vector<DensitySample> density_profile(const ModelParams& params, const Propagation& prop,
                                           std::span<const double> grid, const BoundaryData& outer, int L) {
  if (!(outer.R0 > 0.0)) throw InvalidInput("R0 must be positive");
  if (L < 1 || L > prop.sites()) throw InvalidInput("boundary length outside propagated range");
  const double r0sq = outer.R0 * outer.R0;
  std::vector<DensitySample> out;
  out.reserve(grid.size());
  for (double x : grid) {
    double d = 0.0;
    if (x < 0.0) {
      const double ph = outer.k * (x + outer.a);
      d = std::norm(outer.R0 * std::polar(1.0, ph) + outer.R1 * std::polar(1.0, -ph));
    } else if (x > L) {
      d = outer.T * outer.T;
    } else {
      d = std::norm(wavefunction_at(params, prop, x).psi);
    }
    out.push_back({x, d, d / r0sq});
  }
  return out;
}

double probability_current(const WaveSample& sample) {
  return std::imag(std::conj(sample.psi) * sample.psi_x);
}

double recoil_energy(double lattice_spacing_m, double effective_mass_kg) {
  if (!(lattice_spacing_m > 0.0) || !(effective_mass_kg > 0.0)) {
    throw InvalidInput("lattice spacing and mass must be positive");
  }
  constexpr double hbar = 1.054571817e-34;       // J s
  constexpr double electron_volt = 1.602176634e-19;  // J
  return hbar * hbar / (effective_mass_kg * lattice_spacing_m * lattice_spacing_m) / electron_volt;
}

}  // namespace kp
