#pragma once

// Shared value types for the nonlinear Kronig-Penney lattice in a uniform
// field. Lengths are in lattice spacings, energies in recoil energies.

#include <complex>
#include <stdexcept>
#include <string>

namespace kp {

using cplx = std::complex<double>;

/// Malformed or physically inadmissible input. Maps to CLI exit status 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical result could not be produced within its guarantees.
/// Maps to CLI exit status 1.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis evaluation requested outside the certified argument range.
class AccuracyError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Coefficient magnitude exceeded the blow-up cap during propagation.
class BlowUpError : public ComputationError {
 public:
  BlowUpError(const std::string& what, int site) : ComputationError(what), site_(site) {}
  [[nodiscard]] int site() const noexcept { return site_; }

 private:
  int site_;
};

struct ModelParams {
  double E = 1.0;      // eigenenergy
  double F = 0.01;     // field strength
  double alpha = 0.0;  // nonlinearity intensity
  double beta = 0.0;   // delta strength
  int L_max = 60;      // number of lattice sites to propagate through

  /// Throws InvalidInput naming the first offending field.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Integration constants (A_n, B_n) of the piecewise solution on segment n.
struct CoefficientPair {
  cplx A;
  cplx B;

  friend CoefficientPair operator*(cplx s, const CoefficientPair& c) { return {s * c.A, s * c.B}; }
  friend CoefficientPair operator+(const CoefficientPair& l, const CoefficientPair& r) {
    return {l.A + r.A, l.B + r.B};
  }
  friend bool operator==(const CoefficientPair&, const CoefficientPair&) = default;
};

struct WaveSample {
  double x = 0.0;
  cplx psi;
  cplx psi_x;
};

/// Outer plane waves of the scattering problem: incident R0, reflected R1 with
/// left phase a, transmitted T with right phase b.
struct BoundaryData {
  double R0 = 0.0;
  double R1 = 0.0;
  double k = 1.0;
  double a = 0.0;
  double T = 0.0;
  double b = 0.0;
  double t = 0.0;
};

}  // namespace kp
