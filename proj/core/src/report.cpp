#include "cdirac/report.hpp"

#include <cmath>
#include <sstream>

#include "cdirac/errors.hpp"

namespace cdirac {
namespace {

using nlohmann::json;

json opt(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::optional<double> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream os;
  os.precision(17);
  os << *v;
  return os.str();
}

}  // namespace

json to_json(const Tolerances& t) {
  return {{"residual", t.residual},
          {"eigen_rel", t.eigen_rel},
          {"imag", t.imag},
          {"hill_zero", t.hill_zero},
          {"zero_mode", t.zero_mode}};
}

Tolerances tolerances_from_json(const json& j) {
  if (!j.is_object()) throw ToleranceSchemaError("tolerances must be an object");
  Tolerances t;
  const std::map<std::string, double*> slots{{"residual", &t.residual},
                                             {"eigen_rel", &t.eigen_rel},
                                             {"imag", &t.imag},
                                             {"hill_zero", &t.hill_zero},
                                             {"zero_mode", &t.zero_mode}};
  for (const auto& [key, value] : j.items()) {
    const auto it = slots.find(key);
    if (it == slots.end())
      throw ToleranceSchemaError("unknown tolerance key '" + key + "'");
    if (!value.is_number())
      throw ToleranceSchemaError("tolerance '" + key + "' must be a number");
    const double v = value.get<double>();
    if (!std::isfinite(v) || !(v > 0.0))
      throw ToleranceSchemaError("tolerance '" + key + "' must be positive and finite");
    *it->second = v;
  }
  return t;
}

json to_json(const VerificationReport& r, bool with_timing) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"n", l.n},
                      {"ky", l.ky},
                      {"eps_analytic", l.eps_analytic},
                      {"eps_oracle", opt(l.eps_oracle)},
                      {"abs_delta", opt(l.abs_delta)},
                      {"imag_oracle", opt(l.imag_oracle)},
                      {"residual1", opt(l.residual1)},
                      {"residual2", opt(l.residual2)},
                      {"residual_schrodinger", opt(l.residual_schrodinger)},
                      {"threshold", l.threshold},
                      {"pass", l.pass},
                      {"note", l.note}});
  }
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"value", std::isfinite(c.value) ? json(c.value) : json(nullptr)},
                      {"bound", c.bound},
                      {"kind", c.kind},
                      {"pass", c.pass}});
  json norm = json::array();
  for (const auto& c : r.normalizability)
    norm.push_back({{"component", c.component}, {"class", c.classification}});
  json out{{"schema_version", kReportSchemaVersion},
           {"case", r.case_id},
           {"params", r.params},
           {"grid", {{"x0", r.grid.x0}, {"x1", r.grid.x1}, {"N", r.grid.n}}},
           {"tolerances", to_json(r.tolerances)},
           {"levels", levels},
           {"checks", checks},
           {"normalizability", norm},
           {"info", r.info},
           {"pass", r.pass}};
  if (with_timing) out["wall_time_s"] = r.wall_time;
  return out;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.case_id = j.at("case").get<std::string>();
  r.params = j.at("params").get<ParamMap>();
  r.grid.x0 = j.at("grid").at("x0").get<double>();
  r.grid.x1 = j.at("grid").at("x1").get<double>();
  r.grid.n = j.at("grid").at("N").get<std::size_t>();
  r.tolerances = tolerances_from_json(j.at("tolerances"));
  for (const auto& l : j.at("levels")) {
    LevelRecord rec;
    rec.n = l.at("n").get<int>();
    rec.ky = l.at("ky").get<double>();
    rec.eps_analytic = l.at("eps_analytic").get<double>();
    rec.eps_oracle = opt_from(l, "eps_oracle");
    rec.abs_delta = opt_from(l, "abs_delta");
    rec.imag_oracle = opt_from(l, "imag_oracle");
    rec.residual1 = opt_from(l, "residual1");
    rec.residual2 = opt_from(l, "residual2");
    rec.residual_schrodinger = opt_from(l, "residual_schrodinger");
    rec.threshold = l.at("threshold").get<bool>();
    rec.pass = l.at("pass").get<bool>();
    rec.note = l.at("note").get<std::string>();
    r.levels.push_back(std::move(rec));
  }
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.name = c.at("name").get<std::string>();
    rec.value = c.at("value").is_null() ? NAN : c.at("value").get<double>();
    rec.bound = c.at("bound").get<double>();
    rec.kind = c.at("kind").get<std::string>();
    rec.pass = c.at("pass").get<bool>();
    r.checks.push_back(std::move(rec));
  }
  for (const auto& c : j.at("normalizability"))
    r.normalizability.push_back(
        {c.at("component").get<std::string>(), c.at("class").get<std::string>()});
  r.info = j.at("info");
  r.pass = j.at("pass").get<bool>();
  if (j.contains("wall_time_s")) r.wall_time = j.at("wall_time_s").get<double>();
  return r;
}

std::string levels_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : reports) {
    for (const auto& l : r.levels) {
      os << r.case_id << ',' << l.n << ',' << csv_number(l.ky) << ','
         << csv_number(l.eps_analytic) << ',' << csv_number(l.eps_oracle) << ','
         << csv_number(l.abs_delta) << ',' << csv_number(l.residual1) << ','
         << csv_number(l.residual2) << ',' << (l.pass ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

}  // namespace cdirac
