#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cdirac {

inline constexpr const char* kReportSchemaVersion = "1.0.0";

struct Tolerances {
  double residual = 1e-6;
  double eigen_rel = 1e-5;
  double imag = 1e-8;
  double hill_zero = 1e-8;
  double zero_mode = 1e-8;
};

// Overrides of the case's default residual grid.
struct GridSettings {
  std::optional<double> x0;
  std::optional<double> x1;
  std::optional<std::size_t> n;
};

using ParamMap = std::map<std::string, double>;

struct LevelRecord {
  int n = 0;
  double ky = 0.0;
  double eps_analytic = 0.0;
  std::optional<double> eps_oracle;
  std::optional<double> abs_delta;
  std::optional<double> imag_oracle;
  std::optional<double> residual1;
  std::optional<double> residual2;
  std::optional<double> residual_schrodinger;
  bool threshold = false;
  bool pass = true;
  std::string note;
};

struct CheckRecord {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = true;
  // "<" (value must stay below bound) or "info" (never fails)
  std::string kind = "<";
};

struct ClassRecord {
  std::string component;
  std::string classification;
};

struct ResolvedGrid {
  double x0 = 0.0;
  double x1 = 0.0;
  std::size_t n = 0;
};

struct VerificationReport {
  std::string case_id;
  ParamMap params;
  ResolvedGrid grid;
  Tolerances tolerances;
  std::vector<LevelRecord> levels;
  std::vector<CheckRecord> checks;
  std::vector<ClassRecord> normalizability;
  nlohmann::json info = nlohmann::json::object();
  bool pass = true;
  double wall_time = 0.0;
};

nlohmann::json to_json(const Tolerances& t);
// Rejects unknown keys and non-positive or non-finite bounds with
// ToleranceSchemaError. Missing keys keep their defaults.
Tolerances tolerances_from_json(const nlohmann::json& j);

// Deterministic: wall time is included only when with_timing is set.
nlohmann::json to_json(const VerificationReport& r, bool with_timing = false);
VerificationReport report_from_json(const nlohmann::json& j);

inline constexpr const char* kCsvHeader =
    "case,n,ky,eps_analytic,eps_oracle,abs_delta,residual1,residual2,pass";

// Levels table, one row per level record, header first.
std::string levels_csv(const std::vector<VerificationReport>& reports);

}  // namespace cdirac
