#include "cdirac_cli/run_config.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace cdirac::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key))
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
}

double finite(const json& v, const std::string& key) {
  if (!v.is_number()) throw std::invalid_argument("'" + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw std::invalid_argument("'" + key + "' must be finite");
  return d;
}

}  // namespace

std::string to_string(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "json";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("format must be json or csv");
}

json to_json(const RunConfig& c) {
  json grid = json::object();
  if (c.grid.x0) grid["x0"] = *c.grid.x0;
  if (c.grid.x1) grid["x1"] = *c.grid.x1;
  if (c.grid.n) grid["N"] = *c.grid.n;
  json out{{"command", c.command},
           {"params", c.params},
           {"grid", grid},
           {"tolerances", c.tolerance_overrides},
           {"verify", c.verify},
           {"format", to_string(c.format)}};
  if (!c.case_id.empty()) out["case"] = c.case_id;
  if (c.output) out["output"] = *c.output;
  if (c.command == "bands") {
    out["b"] = c.b;
    out["modes"] = c.modes;
    out["bloch_k"] = c.bloch_k;
    out["branch"] = c.branch;
    out["count"] = c.count;
  }
  return out;
}

RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be an object");
  reject_unknown(j, {"command", "case", "params", "grid", "tolerances", "verify",
                     "format", "output", "b", "modes", "bloch_k", "branch", "count"},
                 "config");
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  if (j.contains("case")) c.case_id = j.at("case").get<std::string>();
  if (j.contains("params")) {
    for (const auto& [k, v] : j.at("params").items()) c.params[k] = finite(v, k);
  }
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    reject_unknown(g, {"x0", "x1", "N"}, "grid");
    if (g.contains("x0")) c.grid.x0 = finite(g.at("x0"), "x0");
    if (g.contains("x1")) c.grid.x1 = finite(g.at("x1"), "x1");
    if (g.contains("N")) c.grid.n = g.at("N").get<std::size_t>();
  }
  if (j.contains("tolerances")) c.tolerance_overrides = j.at("tolerances");
  if (j.contains("verify")) c.verify = j.at("verify").get<bool>();
  if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
  if (j.contains("output")) c.output = j.at("output").get<std::string>();
  if (j.contains("b")) c.b = finite(j.at("b"), "b");
  if (j.contains("modes")) c.modes = j.at("modes").get<std::size_t>();
  if (j.contains("bloch_k")) c.bloch_k = finite(j.at("bloch_k"), "bloch_k");
  if (j.contains("branch")) c.branch = j.at("branch").get<std::string>();
  if (j.contains("count")) c.count = j.at("count").get<std::size_t>();
  return c;
}

}  // namespace cdirac::cli
