#pragma once

// Sweeps over transmission coefficient or eigenenergy, recording which
// lattice lengths satisfy the right-boundary condition at each grid value.

#include <optional>
#include <string>
#include <vector>

#include "kp/boundary.hpp"

namespace kp {

enum class SweepAxis { Transmission, Energy };

[[nodiscard]] const char* to_string(SweepAxis axis);

struct SpectrumRow {
  double value = 0.0;
  std::vector<int> lengths;
  std::vector<double> residual;  // signed relative residual at every n = 1..sites
  std::optional<std::string> error;
};

struct InverseEntry {
  int L = 0;
  std::vector<double> values;
  friend bool operator==(const InverseEntry&, const InverseEntry&) = default;
};

struct SpectrumTable {
  SweepAxis axis = SweepAxis::Transmission;
  std::vector<SpectrumRow> rows;
  std::vector<InverseEntry> inverse;  // ascending L
};

/// Fixed system, incident wave and matching settings for a sweep. For the
/// transmission sweep R1 is derived per grid point; for the energy sweep R1
/// is used as given and params.E is replaced per grid point.
struct SweepSetup {
  ModelParams params;
  double R0 = 0.2822;
  double R1 = 0.001;
  double k = 1.0;
  double eps_match = kDefaultEpsMatch;
};

/// Grid 0, 0.1, ..., 1.
[[nodiscard]] std::vector<double> default_t_grid();
/// Grid 0.5, 0.6, ..., 1.5.
[[nodiscard]] std::vector<double> default_energy_grid();

[[nodiscard]] SpectrumTable t_length_spectrum(const SweepSetup& setup, const std::vector<double>& t_grid);
[[nodiscard]] SpectrumTable energy_length_spectrum(const SweepSetup& setup, const std::vector<double>& E_grid);

/// Transpose rows into L -> values, sorted by L with values in grid order.
[[nodiscard]] std::vector<InverseEntry> invert_rows(const std::vector<SpectrumRow>& rows);

/// Inverse entries carrying two or more values.
[[nodiscard]] std::vector<InverseEntry> multivalue_detect(const SpectrumTable& table);

/// Reference list entry: swept value and the lengths expected for it.
struct ReferenceRow {
  double value = 0.0;
  std::vector<int> lengths;
};

struct PairMismatch {
  double value = 0.0;
  int L = 0;
  bool expected = false;  // true: in reference, missing here; false: extra here
  double residual = 0.0;  // NaN when the row has no residual for L
};

struct SpectrumComparison {
  int reference_pairs = 0;
  int reproduced_pairs = 0;
  std::vector<PairMismatch> mismatches;

  [[nodiscard]] double reproduced_fraction() const {
    return reference_pairs == 0 ? 1.0 : static_cast<double>(reproduced_pairs) / reference_pairs;
  }
};

/// Pairwise comparison against a reference list. Rows are paired by value
/// to within 1e-9.
[[nodiscard]] SpectrumComparison compare_spectrum(const SpectrumTable& table,
                                                  const std::vector<ReferenceRow>& reference);

}  // namespace kp
