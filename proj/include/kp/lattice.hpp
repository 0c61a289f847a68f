#pragma once

// Propagation of the piecewise-exact solution through the delta lattice.
//
// On segment n (x in [n-1, n), and [0, 1) for n = 1) the solution is
// psi = A_n varphi + B_n phi. Crossing the delta at x = n, with
// g = 2 (beta + alpha |psi(n)|^2) psi(n):
//
//   A_{n+1} = A_n - phi(n) g,   B_{n+1} = B_n + varphi(n) g.

#include <optional>
#include <span>
#include <vector>

#include "kp/model.hpp"
#include "kp/specfun.hpp"

namespace kp {

inline constexpr double kBlowUpCap = 1e8;

/// Basis values at the integer sites 0..L_max of one (E, F) pair.
class SiteTable {
 public:
  explicit SiteTable(const ModelParams& params);

  [[nodiscard]] const BasisValue& at(int n) const { return sites_.at(static_cast<std::size_t>(n)); }
  [[nodiscard]] int max_site() const { return static_cast<int>(sites_.size()) - 1; }

 private:
  std::vector<BasisValue> sites_;
};

/// Coefficients (A_n, B_n) for n = 1..N. N == L_max unless propagation hit
/// the blow-up cap, in which case blowup_site names the first site whose
/// outgoing coefficients exceeded it.
struct Propagation {
  std::vector<CoefficientPair> coeffs;
  std::optional<int> blowup_site;

  [[nodiscard]] int sites() const { return static_cast<int>(coeffs.size()); }
  [[nodiscard]] const CoefficientPair& segment(int n) const {
    return coeffs.at(static_cast<std::size_t>(n - 1));
  }
  [[nodiscard]] bool complete(int L_max) const { return !blowup_site && sites() == L_max; }
};

/// The contact kick g = 2 (beta + alpha |psi|^2) psi.
[[nodiscard]] cplx delta_kick(const ModelParams& params, cplx psi);

/// One application of the recurrence at site n, given the basis there.
[[nodiscard]] CoefficientPair lattice_step(const ModelParams& params, const BasisValue& site,
                                           const CoefficientPair& coeff);

/// Checked form: 1 <= n <= L_max - 1, throws BlowUpError past kBlowUpCap.
[[nodiscard]] CoefficientPair lattice_step(const ModelParams& params, int n,
                                           const CoefficientPair& coeff);

[[nodiscard]] Propagation propagate(const ModelParams& params, const SiteTable& sites,
                                    const CoefficientPair& initial);
[[nodiscard]] Propagation propagate(const ModelParams& params, const CoefficientPair& initial);

/// Same coefficients built from the closed cumulative sums
///   A_n = A_1 - sum_{j<n} phi(j) g_j,   B_n = B_1 + sum_{j<n} varphi(j) g_j.
[[nodiscard]] std::vector<CoefficientPair> propagate_cumulative(const ModelParams& params,
                                                                const SiteTable& sites,
                                                                const CoefficientPair& initial);

/// Segment index used at position x: 1 on [0, 1), n on [n-1, n), L at x == L.
[[nodiscard]] int segment_index(double x, int L);

/// psi and psi_x at x in [0, prop.sites()]. Integer x takes the right-hand
/// limit, except at the last site.
[[nodiscard]] WaveSample wavefunction_at(const ModelParams& params, const Propagation& prop, double x);

/// psi(n) = A_n varphi(n) + B_n phi(n) at the integer sites 1..sites.
[[nodiscard]] std::vector<cplx> site_values(const SiteTable& sites, const Propagation& prop);

/// psi_x(n+) - psi_x(n-) at site n, from the coefficients on either side.
[[nodiscard]] cplx derivative_jump(const BasisValue& site, const CoefficientPair& left,
                                   const CoefficientPair& right);

struct DensitySample {
  double x = 0.0;
  double density = 0.0;
  double relative_density = 0.0;
};

/// |psi|^2 and |psi|^2 / R0^2 over a grid inside [0, prop.sites()].
[[nodiscard]] std::vector<DensitySample> density_profile(const ModelParams& params, const Propagation& prop,
                                                         std::span<const double> grid, double R0);

/// Three-region profile: the incident/reflected superposition for x < 0, the
/// lattice solution on [0, L] and the transmitted plane wave for x > L.
[[nodiscard]] std::vector<DensitySample> density_profile(const ModelParams& params, const Propagation& prop,
                                                         std::span<const double> grid,
                                                         const BoundaryData& outer, int L);

/// Probability current Im(conj(psi) psi_x), in recoil-frequency units.
[[nodiscard]] double probability_current(const WaveSample& sample);

/// Recoil energy hbar^2 / (m lambda^2) in eV, for lambda in metres and the
/// effective mass in kilograms.
[[nodiscard]] double recoil_energy(double lattice_spacing_m, double effective_mass_kg);

inline constexpr double kElectronMassKg = 9.1093837015e-31;

}  // namespace kp
