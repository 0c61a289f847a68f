#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kp/boundary.hpp"
#include "kp/model.hpp"

namespace kp {

/// Everything one CLI invocation needs: system parameters, the prescribed
/// outer waves, matching and sampling settings, and optional sweep grids.
struct CaseSpec {
  ModelParams params;
  double R0 = 0.2822;
  double R1 = 0.1;
  double k = 1.0;
  double eps_match = kDefaultEpsMatch;
  double density_step = 0.01;
  double oracle_step = 1e-3;
  std::optional<int> density_L;  // default: first admissible length
  std::string spectrum_kind;     // "t" or "E"; empty when not a sweep
  std::optional<std::vector<double>> t_grid;  // default grid when absent
  std::optional<std::vector<double>> E_grid;

  /// Throws InvalidInput with a field-level message.
  void validate() const;

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

void to_json(nlohmann::json& j, const CaseSpec& spec);
void from_json(const nlohmann::json& j, CaseSpec& spec);

/// Reads and validates a JSON config file.
[[nodiscard]] CaseSpec load_case_spec(const std::string& path);

}  // namespace kp
