#include "kp/scan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>

namespace kp {

const char* to_string(SweepAxis axis) {
  return axis == SweepAxis::Transmission ? "t" : "E";
}

std::vector<double> default_t_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 10; ++i) g.push_back(i / 10.0);
  return g;
}

std::vector<double> default_energy_grid() {
  std::vector<double> g;
  for (int i = 5; i <= 15; ++i) g.push_back(i / 10.0);
  return g;
}

namespace {

SpectrumRow run_point(double value, const ModelParams& params, double R0, double R1, double k, double eps) {
  SpectrumRow row;
  row.value = value;
  try {
    const CaseSolution c = solve_case(params, R0, R1, k, eps);
    row.lengths = c.scan.lengths;
    row.residual = c.scan.residual;
    if (c.scan.prop.blowup_site) {
      row.error = "propagation blew up after site " + std::to_string(*c.scan.prop.blowup_site);
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

// Grid points are independent; evaluate concurrently and keep grid order.
SpectrumTable sweep(SweepAxis axis, const std::vector<double>& grid,
                    const std::function<SpectrumRow(double)>& point) {
  std::vector<std::future<SpectrumRow>> jobs;
  jobs.reserve(grid.size());
  for (double v : grid) jobs.push_back(std::async(std::launch::async, point, v));
  SpectrumTable table;
  table.axis = axis;
  for (auto& j : jobs) table.rows.push_back(j.get());
  table.inverse = invert_rows(table.rows);
  return table;
}

}  // namespace

SpectrumTable t_length_spectrum(const SweepSetup& setup, const std::vector<double>& t_grid) {
  for (double t : t_grid) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("t grid values must lie in [0, 1]");
  }
  return sweep(SweepAxis::Transmission, t_grid, [&setup](double t) {
    const double R1 = setup.R0 * std::sqrt(1.0 - t);
    return run_point(t, setup.params, setup.R0, R1, setup.k, setup.eps_match);
  });
}

SpectrumTable energy_length_spectrum(const SweepSetup& setup, const std::vector<double>& E_grid) {
  for (double E : E_grid) {
    if (!(E > 0.0)) throw InvalidInput("energy grid values must be positive");
  }
  return sweep(SweepAxis::Energy, E_grid, [&setup](double E) {
    ModelParams p = setup.params;
    p.E = E;
    return run_point(E, p, setup.R0, setup.R1, setup.k, setup.eps_match);
  });
}

std::vector<InverseEntry> invert_rows(const std::vector<SpectrumRow>& rows) {
  std::vector<InverseEntry> inv;
  for (const SpectrumRow& r : rows) {
    for (int L : r.lengths) {
      auto it = std::lower_bound(inv.begin(), inv.end(), L,
                                 [](const InverseEntry& e, int l) { return e.L < l; });
      if (it == inv.end() || it->L != L) it = inv.insert(it, InverseEntry{L, {}});
      it->values.push_back(r.value);
    }
  }
  return inv;
}

std::vector<InverseEntry> multivalue_detect(const SpectrumTable& table) {
  std::vector<InverseEntry> out;
  std::copy_if(table.inverse.begin(), table.inverse.end(), std::back_inserter(out),
               [](const InverseEntry& e) { return e.values.size() >= 2; });
  return out;
}

SpectrumComparison compare_spectrum(const SpectrumTable& table, const std::vector<ReferenceRow>& reference) {
  SpectrumComparison cmp;
  auto residual_at = [](const SpectrumRow* row, int L) {
    if (row == nullptr || L < 1 || static_cast<std::size_t>(L) > row->residual.size()) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    return row->residual[static_cast<std::size_t>(L - 1)];
  };
  for (const ReferenceRow& ref : reference) {
    const SpectrumRow* row = nullptr;
    for (const SpectrumRow& r : table.rows) {
      if (std::abs(r.value - ref.value) < 1e-9) row = &r;
    }
    cmp.reference_pairs += static_cast<int>(ref.lengths.size());
    for (int L : ref.lengths) {
      const bool found = row != nullptr && std::ranges::find(row->lengths, L) != row->lengths.end();
      if (found) {
        ++cmp.reproduced_pairs;
      } else {
        cmp.mismatches.push_back({ref.value, L, true, residual_at(row, L)});
      }
    }
    if (row == nullptr) continue;
    for (int L : row->lengths) {
      if (std::ranges::find(ref.lengths, L) == ref.lengths.end()) {
        cmp.mismatches.push_back({ref.value, L, false, residual_at(row, L)});
      }
    }
  }
  return cmp;
}

}  // namespace kp
