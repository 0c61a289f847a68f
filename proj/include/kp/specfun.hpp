#pragma once

// Field-region basis solutions of psi'' + 2(E + F x) psi = 0.
//
//   varphi(x) = z^{1/3} H1_{1/3}(z)
//   phi(x)    = i pi / (4 (3F)^{1/3}) z^{1/3} H2_{1/3}(z)
//
// with zeta = (2F)^{1/3} (E/F + x) and z = (2/3) zeta^{3/2}. The pair is
// normalized so that varphi * phi_x - phi * varphi_x == 1.

#include <span>
#include <vector>

#include "kp/model.hpp"

namespace kp {

struct ScaledCoordinate {
  double zeta = 0.0;
  double z = 0.0;
  double dz_dx = 0.0;
};

struct BasisValue {
  cplx varphi;
  cplx phi;
  cplx varphi_x;
  cplx phi_x;

  [[nodiscard]] cplx wronskian() const { return varphi * phi_x - phi * varphi_x; }
};

/// H1_{1/3}(z) and H1_{-2/3}(z) at one real argument.
struct HankelThirds {
  cplx h_third;
  cplx h_minus_two_thirds;
};

/// Interval of z over which basis values hold the Wronskian to 1e-9.
inline constexpr double kMinCertifiedZ = 1e-3;
inline constexpr double kMaxCertifiedZ = 1e5;

/// Below this z the ascending series is summed; above it the Hankel
/// asymptotic expansion is used.
inline constexpr double kSeriesCrossover = 17.0;

/// Throws InvalidInput for F <= 0 or E/F + x <= 0.
[[nodiscard]] ScaledCoordinate scaled_coords(const ModelParams& params, double x);

/// First-kind Hankel functions of orders 1/3 and -2/3. Throws AccuracyError
/// outside [kMinCertifiedZ, kMaxCertifiedZ].
[[nodiscard]] HankelThirds hankel_thirds(double z);

/// The prefactor i pi / (4 (3F)^{1/3}) linking phi to conj(varphi).
[[nodiscard]] cplx phi_prefactor(double F);

[[nodiscard]] BasisValue basis_at(const ModelParams& params, double x);

/// max |W - 1| over the samples. Throws InvalidInput on an empty list.
[[nodiscard]] double wronskian_residual(const ModelParams& params, std::span<const double> x_samples);

}  // namespace kp
