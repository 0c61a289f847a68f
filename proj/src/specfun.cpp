#include "kp/specfun.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace kp {
namespace {

// J_nu(z) by the ascending series. Summed in long double: near the crossover
// the largest term is ~1e6 times the result, and the extra mantissa keeps the
// cancellation error below 1e-13.
long double bessel_j_series(long double nu, long double z) {
  const long double half = z / 2.0L;
  const long double q = -half * half;
  long double term = std::pow(half, nu) / std::tgamma(nu + 1.0L);
  long double sum = term;
  for (int m = 1; m < 500; ++m) {
    term *= q / (static_cast<long double>(m) * (static_cast<long double>(m) + nu));
    sum += term;
    if (m > half && std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
  }
  return sum;
}

// H1_nu from J_{+nu}, J_{-nu} and the connection formula
// Y_nu = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi).
cplx hankel1_series(long double nu, long double z) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double jp = bessel_j_series(nu, z);
  const long double jm = bessel_j_series(-nu, z);
  const long double y = (jp * std::cos(nu * pi) - jm) / std::sin(nu * pi);
  return {static_cast<double>(jp), static_cast<double>(y)};
}

// Hankel large-argument expansion
//   H1_nu(z) ~ sqrt(2/(pi z)) e^{i(z - nu pi/2 - pi/4)} sum_k i^k a_k(nu) / z^k,
//   a_k = a_{k-1} (4 nu^2 - (2k-1)^2) / (8k).
// Summed until the terms reach double roundoff or start to grow.
cplx hankel1_asymptotic(double nu, double z) {
  const double mu = 4.0 * nu * nu;
  cplx sum = 1.0;
  cplx ik = 1.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (8.0 * k * z);
    if (std::fabs(next) > std::fabs(term)) break;
    term = next;
    ik *= cplx(0.0, 1.0);
    sum += ik * term;
    if (std::fabs(term) < 1e-17) break;
  }
  const double shift = nu * std::numbers::pi / 2.0 + std::numbers::pi / 4.0;
  const cplx phase = std::polar(1.0, z) * std::polar(1.0, -shift);
  return std::sqrt(2.0 / (std::numbers::pi * z)) * phase * sum;
}

}  // namespace

ScaledCoordinate scaled_coords(const ModelParams& params, double x) {
  if (!(params.F > 0.0)) throw InvalidInput("field F must be positive");
  const double shifted = params.E / params.F + x;
  if (!(shifted > 0.0)) {
    std::ostringstream os;
    os << "E/F + x = " << shifted << " is not positive (classical turning point reached)";
    throw InvalidInput(os.str());
  }
  ScaledCoordinate c;
  c.zeta = std::cbrt(2.0 * params.F) * shifted;
  c.z = 2.0 / 3.0 * std::sqrt(2.0 * params.F * shifted * shifted * shifted);
  c.dz_dx = std::cbrt(3.0 * params.F) * std::cbrt(c.z);
  return c;
}

HankelThirds hankel_thirds(double z) {
  if (!(z >= kMinCertifiedZ && z <= kMaxCertifiedZ)) {
    std::ostringstream os;
    os << "Hankel argument z = " << z << " outside certified range [" << kMinCertifiedZ << ", "
       << kMaxCertifiedZ << "]";
    throw AccuracyError(os.str());
  }
  if (z < kSeriesCrossover) {
    return {hankel1_series(1.0L / 3.0L, z), hankel1_series(-2.0L / 3.0L, z)};
  }
  return {hankel1_asymptotic(1.0 / 3.0, z), hankel1_asymptotic(-2.0 / 3.0, z)};
}

cplx phi_prefactor(double F) {
  return {0.0, std::numbers::pi / (4.0 * std::cbrt(3.0 * F))};
}

BasisValue basis_at(const ModelParams& params, double x) {
  const ScaledCoordinate c = scaled_coords(params, x);
  const HankelThirds h = hankel_thirds(c.z);
  const double z13 = std::cbrt(c.z);
  const cplx pre = phi_prefactor(params.F);

  // d/dz [z^{1/3} H_{1/3}(z)] = z^{1/3} H_{-2/3}(z); the second kind is the
  // conjugate of the first at real argument.
  BasisValue v;
  v.varphi = z13 * h.h_third;
  v.varphi_x = c.dz_dx * z13 * h.h_minus_two_thirds;
  v.phi = pre * std::conj(v.varphi);
  v.phi_x = pre * std::conj(v.varphi_x);
  return v;
}

double wronskian_residual(const ModelParams& params, std::span<const double> x_samples) {
  if (x_samples.empty()) throw InvalidInput("wronskian_residual needs at least one sample");
  double worst = 0.0;
  for (double x : x_samples) {
    worst = std::max(worst, std::abs(basis_at(params, x).wronskian() - 1.0));
  }
  return worst;
}

}  // namespace kp
