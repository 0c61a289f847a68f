#pragma once

// High-precision reference basis built from Boost.Math Bessel functions in
// 50-digit arithmetic. Derivatives use H'_nu = (H_{nu-1} - H_{nu+1}) / 2,
// a different identity from the one the library uses.

#include <complex>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace kp::test {

using Real = boost::multiprecision::cpp_bin_float_50;

struct RefBasis {
  Real z;
  std::complex<double> varphi, phi, varphi_x, phi_x;
};

inline std::complex<double> to_c(const Real& re, const Real& im) {
  return {static_cast<double>(re), static_cast<double>(im)};
}

inline RefBasis ref_basis(double E_in, double F_in, double x_in) {
  using boost::math::cyl_bessel_j;
  using boost::math::cyl_neumann;
  using boost::multiprecision::cbrt;
  using boost::multiprecision::sqrt;
  const Real E = E_in, F = F_in, x = x_in;
  const Real pi = boost::math::constants::pi<Real>();
  const Real shifted = E / F + x;
  const Real z = Real(2) / 3 * sqrt(2 * F * shifted * shifted * shifted);
  const Real nu = Real(1) / 3;
  const Real j = cyl_bessel_j(nu, z), y = cyl_neumann(nu, z);
  const Real jm = cyl_bessel_j(nu - 1, z), ym = cyl_neumann(nu - 1, z);
  const Real jp = cyl_bessel_j(nu + 1, z), yp = cyl_neumann(nu + 1, z);
  const Real dj = (jm - jp) / 2, dy = (ym - yp) / 2;
  const Real z13 = cbrt(z);
  const Real dz_dx = sqrt(2 * F * shifted);
  // d/dz [z^{1/3} C(z)] = (1/3) z^{-2/3} C + z^{1/3} C'
  const Real dre = (j / (3 * z13 * z13) + z13 * dj) * dz_dx;
  const Real dim = (y / (3 * z13 * z13) + z13 * dy) * dz_dx;
  const Real gamma = pi / (4 * cbrt(3 * F));

  RefBasis r;
  r.z = z;
  r.varphi = to_c(z13 * j, z13 * y);
  r.varphi_x = to_c(dre, dim);
  // phi = i gamma z^{1/3} (J - iY) = gamma z^{1/3} (Y + iJ)
  r.phi = to_c(gamma * z13 * y, gamma * z13 * j);
  r.phi_x = to_c(gamma * dim, gamma * dre);
  return r;
}

}  // namespace kp::test
