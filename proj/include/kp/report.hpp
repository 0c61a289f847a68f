#pragma once

// Case reports, spectrum serialization and the verification suite behind
// the kpsolve subcommands.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kp/boundary.hpp"
#include "kp/case_spec.hpp"
#include "kp/lattice.hpp"
#include "kp/scan.hpp"

namespace kp {

struct CurrentSummary {
  double interior = 0.0;         // Im(conj psi psi_x) inside the lattice, sampled at x = 0
  double interior_spread = 0.0;  // max - min over the density grid on [0, L]
  double transmitted = 0.0;      // k T^2 of the right plane wave
};

struct CaseReport {
  CaseSpec spec;
  CaseSolution solution;
  std::optional<int> profile_L;  // length used for the density and current
  std::vector<DensitySample> density;
  CurrentSummary current;
  double conductance = 0.0;
};

[[nodiscard]] CaseReport build_case_report(const CaseSpec& spec);
[[nodiscard]] nlohmann::json to_json(const CaseReport& report);
void print_summary(std::ostream& os, const CaseReport& report);

/// Evenly spaced grid from lo to hi inclusive, built from integer counts.
[[nodiscard]] std::vector<double> uniform_grid(double lo, double hi, double step);

/// CSV with 17 significant digits.
void write_density_csv(std::ostream& os, const std::vector<DensitySample>& samples);
void write_spectrum_csv(std::ostream& os, const SpectrumTable& table);
void write_inverse_csv(std::ostream& os, const SpectrumTable& table);
[[nodiscard]] nlohmann::json to_json(const SpectrumTable& table);

// Verification

using Propagator = std::function<Propagation(const ModelParams&, const SiteTable&, const CoefficientPair&)>;

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  int L = 0;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool pass() const;
};

inline constexpr double kTolWronskian = 1e-9;
inline constexpr double kTolContinuity = 1e-10;
inline constexpr double kTolJump = 1e-9;
inline constexpr double kTolCurrent = 1e-8;
inline constexpr double kTolOracle = 1e-6;

/// Maximum |psi(n+) - psi(n-)| and |jump - 2 (beta + alpha |psi|^2) psi|
/// over sites 1..sites-1.
struct SiteResiduals {
  double continuity = 0.0;
  double jump = 0.0;
};
[[nodiscard]] SiteResiduals site_residuals(const ModelParams& params, const SiteTable& sites,
                                           const Propagation& prop);

/// Spread (max - min) of the probability current over a uniform grid on [0, L].
[[nodiscard]] double current_spread(const ModelParams& params, const Propagation& prop, int L, double step);

/// Runs the invariant suite and the oracle comparison for one case over
/// [0, L]. L defaults to the first admissible length, else L_max.
[[nodiscard]] VerificationReport run_verification(const CaseSpec& spec, std::optional<int> L = std::nullopt,
                                                  const Propagator& propagator = {});
[[nodiscard]] nlohmann::json to_json(const VerificationReport& report);

}  // namespace kp
