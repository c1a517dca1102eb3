#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "cdirac/report.hpp"

namespace cdirac::cli {

enum class OutputFormat { json, csv };

// Everything needed to reproduce a run. Parameters hold only the values the
// user set; the case defaults fill in the rest.
struct RunConfig {
  std::string command;
  std::string case_id;
  ParamMap params;
  GridSettings grid;
  nlohmann::json tolerance_overrides = nlohmann::json::object();
  bool verify = false;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output;
  // bands only
  double b = 1.0;
  std::size_t modes = 32;
  double bloch_k = 0.0;
  std::string branch = "both";
  std::size_t count = 12;
};

nlohmann::json to_json(const RunConfig& c);
// Rejects unknown keys and non-finite numbers with std::invalid_argument.
RunConfig run_config_from_json(const nlohmann::json& j);

std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& s);

}  // namespace cdirac::cli
