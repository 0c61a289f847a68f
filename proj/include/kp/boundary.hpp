#pragma once

// Inverse transmission problem. Incident amplitude R0 and reflected amplitude
// R1 are prescribed; the left match fixes (A_1, B_1) and the phase a, and the
// right match selects the lattice lengths L with |psi(L)| == T.

#include <optional>
#include <vector>

#include "kp/lattice.hpp"
#include "kp/model.hpp"

namespace kp {

enum class MatchBranch {
  PositiveArg,  // arg varphi(0) > 0: R0 rides on varphi, R1 on phi
  NegativeArg,  // arg varphi(0) < 0: R1 rides on varphi, R0 on phi
  ZeroArg,      // degenerate; handled as PositiveArg with a = 0
};

[[nodiscard]] const char* to_string(MatchBranch b);

struct MatchResult {
  CoefficientPair coeff1;  // A_1 real non-negative, B_1 on the negative imaginary axis
  MatchBranch branch = MatchBranch::PositiveArg;
  double a = 0.0;
  double arg_varphi0 = 0.0;
};

/// Default relative tolerance for |psi(L)|^2 == T^2 and the absolute floor
/// applied when T^2 is near zero.
inline constexpr double kDefaultEpsMatch = 3e-2;
inline constexpr double kMatchFloor = 1e-8;

[[nodiscard]] MatchResult match_left(const ModelParams& params, double R0, double R1, double k);

/// R0 e^{ika} + R1 e^{-ika}, the left wave at x = 0.
[[nodiscard]] cplx left_value(double R0, double R1, double k, double a);

struct RightScan {
  Propagation prop;
  std::vector<cplx> psi;        // psi(n) for n = 1..prop.sites()
  std::vector<double> residual; // (|psi(n)|^2 - T^2) / max(T^2, floor)
  std::vector<int> lengths;     // admissible L, ascending
};

[[nodiscard]] RightScan scan_right(const ModelParams& params, const SiteTable& sites, const MatchResult& match,
                                   double T, double eps_match, double floor_abs = kMatchFloor);
[[nodiscard]] RightScan scan_right(const ModelParams& params, const MatchResult& match, double T,
                                   double eps_match, double floor_abs = kMatchFloor);

/// b = arg(psi(L)) / k - L, principal argument.
[[nodiscard]] double phase_b(cplx psi_L, int L, double k);
[[nodiscard]] double phase_b(const ModelParams& params, const Propagation& prop, int L, double k);

/// t = 1 - R1^2 / R0^2.
[[nodiscard]] double transmission_coefficient(double R0, double R1);

/// t / (1 - t); +infinity at t == 1.
[[nodiscard]] double conductance_landauer(double t);

/// T = sqrt(R0^2 - R1^2) and t, with phases left at zero.
[[nodiscard]] BoundaryData make_boundary(double R0, double R1, double k);

/// One admissible length with its transmitted-wave phase.
struct Admissible {
  int L = 0;
  double b = 0.0;
  double residual = 0.0;
};

/// The two-step solution of one case: left match, propagation, right scan.
struct CaseSolution {
  ModelParams params;
  BoundaryData boundary;  // a filled in; b left at zero (per-L values below)
  MatchResult match;
  RightScan scan;
  std::vector<Admissible> admissible;
};

[[nodiscard]] CaseSolution solve_case(const ModelParams& params, double R0, double R1, double k,
                                      double eps_match = kDefaultEpsMatch);

}  // namespace kp
