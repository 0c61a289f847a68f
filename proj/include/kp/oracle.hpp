#pragma once

// Brute-force check of the exact solution: fixed-step classical RK4 on
// psi'' = -2 (E + F x) psi between sites, with the derivative kick
// psi_x += 2 (beta + alpha |psi|^2) psi applied at every integer site.
// Shares no code with the special-function basis.

#include <functional>
#include <vector>

#include "kp/boundary.hpp"
#include "kp/lattice.hpp"
#include "kp/model.hpp"

namespace kp {

struct IntegrationConfig {
  double step = 1e-3;  // must divide 1
  double cap = kBlowUpCap;

  [[nodiscard]] int steps_per_site() const;  // throws InvalidInput
};

/// Samples at every grid point x = i * step, i = 0..L/step. At integer sites
/// psi_x is the post-kick (right-hand) value, except at x == L.
[[nodiscard]] std::vector<WaveSample> integrate_direct(const ModelParams& params, cplx psi0, cplx psi_x0,
                                                       int L, const IntegrationConfig& config);

struct OracleDeviation {
  double max_dpsi = 0.0;
  double max_dpsi_x = 0.0;
  int samples = 0;
};

/// Worst deviation of a direct-integration trajectory from the recurrence
/// solution evaluated at the same points.
[[nodiscard]] OracleDeviation compare_trajectory(const ModelParams& params, const Propagation& prop,
                                                 const std::vector<WaveSample>& trajectory);

/// Propagates from match.coeff1 both through the recurrence and by direct
/// integration, and returns the worst pointwise deviation on [0, L].
[[nodiscard]] OracleDeviation compare_exact_oracle(const ModelParams& params, const MatchResult& match, int L,
                                                   const IntegrationConfig& config);

/// Maximum over sites of |P(w1 c1 + w2 c2) - w1 P(c1) - w2 P(c2)| divided by
/// the largest coefficient magnitude involved. Exact zero only for alpha == 0.
[[nodiscard]] double linear_superposition_check(const ModelParams& params, const CoefficientPair& c1,
                                                const CoefficientPair& c2, cplx w1, cplx w2);

}  // namespace kp
