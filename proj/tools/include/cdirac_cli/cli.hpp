#pragma once

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "cdirac_cli/run_config.hpp"

namespace cdirac::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kConfigError = 2, kNumericError = 3 };

struct Outcome {
  nlohmann::json document;  // full JSON output, config echo included
  std::string csv;          // levels (or bands) table
  bool pass = true;
};

// Runs one configured command. Throws on configuration or numerical errors.
Outcome execute(const RunConfig& config, bool with_timing = false);

// Payload of a document without timing fields, for replay comparison.
nlohmann::json comparable(const nlohmann::json& document);

// Full command-line driver; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdirac::cli
