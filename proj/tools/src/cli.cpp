#include "cdirac_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cdirac/errors.hpp"
#include "cdirac/hill.hpp"
#include "cdirac/potentials.hpp"
#include "cdirac/verify.hpp"

namespace cdirac::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json bands_payload(const RunConfig& c, std::string& csv) {
  if (!std::isfinite(c.b) || !std::isfinite(c.bloch_k))
    throw std::invalid_argument("b and bloch-k must be finite");
  if (c.modes < 8) throw std::invalid_argument("modes must be at least 8");
  std::vector<Branch> branches;
  if (c.branch == "minus" || c.branch == "both") branches.push_back(Branch::minus);
  if (c.branch == "plus" || c.branch == "both") branches.push_back(Branch::plus);
  if (branches.empty()) throw std::invalid_argument("branch must be minus, plus or both");

  const PotentialSpec spec = SinePeriodic{c.b};
  std::ostringstream os;
  os.precision(17);
  os << "branch,index,re,im,modulus\n";
  json out = json::array();
  for (Branch br : branches) {
    const std::string name = br == Branch::minus ? "minus" : "plus";
    const HillSpectrum hs = hill_band_eigenvalues(
        [&](double x) { return effective_potential(spec, 0.0, 0.0, br, x); }, kPi,
        c.modes, c.bloch_k);
    json ev = json::array();
    const std::size_t shown = std::min(c.count, hs.eigenvalues.size());
    for (std::size_t i = 0; i < shown; ++i) {
      const cplx v = hs.eigenvalues[i];
      ev.push_back({{"re", v.real()}, {"im", v.imag()}, {"modulus", std::abs(v)}});
      os << name << ',' << i << ',' << v.real() << ',' << v.imag() << ',' << std::abs(v)
         << '\n';
    }
    out.push_back({{"branch", name},
                   {"eigenvalues", ev},
                   {"min_modulus", hs.eigenvalues.empty() ? 0.0 : std::abs(hs.eigenvalues.front())},
                   {"fourier_tail", hs.fourier_tail},
                   {"truncation_warning", hs.truncation_warning}});
  }
  csv = os.str();
  return out;
}

VerificationReport levels_only(const RunConfig& c, const Tolerances& tol) {
  VerificationReport r;
  r.case_id = c.case_id;
  r.params = resolve_params(c.case_id, c.params);
  r.tolerances = tol;
  r.levels = analytic_levels(c.case_id, c.params);
  r.info["mode"] = "closed form only; rerun with --verify for oracle checks";
  r.pass = true;
  return r;
}

fs::path resolve_output(const RunConfig& c) {
  const char* dir = std::getenv("REPORT_DIR");
  const std::string ext = c.format == OutputFormat::csv ? ".csv" : ".json";
  if (c.output) {
    fs::path p(*c.output);
    if (p.is_relative() && dir && *dir) p = fs::path(dir) / p;
    return p;
  }
  if (dir && *dir) {
    std::string stem = c.command;
    if (!c.case_id.empty()) stem += "-" + c.case_id;
    return fs::path(dir) / (stem + ext);
  }
  return {};
}

void emit(const RunConfig& c, const Outcome& o, std::ostream& out, std::ostream& err) {
  const std::string text =
      c.format == OutputFormat::csv ? o.csv : o.document.dump(2) + "\n";
  const fs::path path = resolve_output(c);
  if (path.empty()) {
    out << text;
    return;
  }
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write output file " + path.string());
  f << text;
  err << "wrote " << path.string() << '\n';
}

json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void summarize(const RunConfig& c, const Outcome& o, std::ostream& err) {
  std::string label = c.command;
  if (!c.case_id.empty()) label += " " + c.case_id;
  err << label << ": " << (o.pass ? "PASS" : "FAIL") << '\n';
}

struct CliState {
  RunConfig config;
  double v0 = 0, mu = 0, lambda = 0, b_param = 0, a = 0, bb = 0, c = 0, ky = 0;
  int nmax = 0;
  double x0 = 0, x1 = 0;
  std::size_t n = 0;
  double tol_residual = 0, tol_eigen = 0, tol_imag = 0, tol_hill = 0, tol_zero = 0;
  std::string tolerance_file;
  std::string format = "json";
  std::string output;
  std::string replay;
  bool timing = false;
};

struct CaseOptions {
  std::vector<std::pair<CLI::Option*, std::string>> params;
  CLI::Option *x0 = nullptr, *x1 = nullptr, *n = nullptr;
  std::vector<std::pair<CLI::Option*, std::string>> tols;
  CLI::Option *tol_file = nullptr, *output = nullptr, *replay = nullptr;
  CLI::Option* case_opt = nullptr;
};

void add_output_options(CLI::App* sub, CliState& s, CaseOptions& o) {
  sub->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  o.output = sub->add_option("--output,-o", s.output,
                             "Output file (relative paths resolve under REPORT_DIR; "
                             "default: stdout, or REPORT_DIR/<command>-<case>.<ext>)");
  sub->add_flag("--timing", s.timing, "Include wall time in JSON reports");
}

void add_case_options(CLI::App* sub, CliState& s, CaseOptions& o, bool require_case) {
  o.case_opt = sub->add_option("--case", s.config.case_id, "Case id (see list-cases)");
  if (require_case) o.case_opt->required();
  const auto param = [&](const char* flag, double& slot, const char* key,
                         const char* help) {
    o.params.emplace_back(sub->add_option(flag, slot, help), key);
  };
  param("--v0", s.v0, "V0", "Cotangent strength V0 (default 2)");
  param("--mu", s.mu, "mu", "mu (default: example1 1, example2 3, example4 0)");
  param("--lambda", s.lambda, "lambda", "lambda (default: example2 1, example4 2)");
  param("--b", s.b_param, "b", "Sine amplitude b (default 1)");
  param("--A", s.a, "A", "Superpotential A (default 3)");
  param("--B", s.bb, "B", "Superpotential B (default 1)");
  param("--C", s.c, "C", "Imaginary part C of B + iC (default 0)");
  param("--ky", s.ky, "ky", "Transverse momentum ky (default: rosen-morse 1, lorentz 0)");
  o.params.emplace_back(
      sub->add_option("--nmax", s.nmax,
                      "Highest level index (default: rosen-morse 4, lorentz floor(A), "
                      "lorentz-scarf1 3)"),
      "nmax");
  o.x0 = sub->add_option("--x0", s.x0, "Residual grid left end (default per case)");
  o.x1 = sub->add_option("--x1", s.x1, "Residual grid right end (default per case)");
  o.n = sub->add_option("--N", s.n, "Residual grid points (default per case)");
  const auto tol = [&](const char* flag, double& slot, const char* key, const char* help) {
    o.tols.emplace_back(sub->add_option(flag, slot, help), key);
  };
  tol("--tol-residual", s.tol_residual, "residual", "Residual bound (default 1e-6)");
  tol("--tol-eigen", s.tol_eigen, "eigen_rel", "Relative eigenvalue bound (default 1e-5)");
  tol("--tol-imag", s.tol_imag, "imag", "Imaginary-part bound (default 1e-8)");
  tol("--tol-hill", s.tol_hill, "hill_zero", "Hill zero-eigenvalue bound (default 1e-8)");
  tol("--tol-zero-mode", s.tol_zero, "zero_mode", "Zero-mode residual bound (default 1e-8)");
  o.tol_file = sub->add_option("--tolerances", s.tolerance_file,
                               "JSON file with tolerance overrides");
  o.replay = sub->add_option("--replay", s.replay,
                             "Rerun the configuration embedded in a JSON report");
  add_output_options(sub, s, o);
}

void collect(CliState& s, const CaseOptions& o) {
  RunConfig& c = s.config;
  for (const auto& [opt, key] : o.params) {
    if (!opt->count()) continue;
    c.params[key] = key == "nmax" ? static_cast<double>(s.nmax)
                                  : opt->as<double>();
  }
  if (o.x0 && o.x0->count()) c.grid.x0 = s.x0;
  if (o.x1 && o.x1->count()) c.grid.x1 = s.x1;
  if (o.n && o.n->count()) c.grid.n = s.n;
  if (o.tol_file && o.tol_file->count()) {
    const json t = load_json(s.tolerance_file);
    if (!t.is_object()) throw ToleranceSchemaError("tolerance file must hold an object");
    for (const auto& [k, v] : t.items()) c.tolerance_overrides[k] = v;
  }
  for (const auto& [opt, key] : o.tols)
    if (opt->count()) c.tolerance_overrides[key] = opt->as<double>();
  c.format = parse_format(s.format);
  if (o.output && o.output->count()) c.output = s.output;
}

int finish(const RunConfig& c, bool timing, const std::optional<json>& replayed,
           std::ostream& out, std::ostream& err) {
  const Outcome o = execute(c, timing);
  emit(c, o, out, err);
  summarize(c, o, err);
  if (replayed) {
    const bool same = comparable(*replayed) == comparable(o.document);
    err << "replay: " << (same ? "identical" : "differs") << '\n';
    if (!same) return kFail;
  }
  return o.pass ? kPass : kFail;
}

}  // namespace

json comparable(const json& document) {
  json d = document;
  if (d.contains("report") && d["report"].is_object()) d["report"].erase("wall_time_s");
  d.erase("config");
  return d;
}

Outcome execute(const RunConfig& c, bool with_timing) {
  const Tolerances tol = tolerances_from_json(c.tolerance_overrides);
  Outcome o;
  json doc{{"schema_version", kReportSchemaVersion},
           {"command", c.command},
           {"config", to_json(c)}};
  if (c.command == "spectrum" || c.command == "zero-modes") {
    const CaseInfo& info = find_case(c.case_id);
    if (c.command == "zero-modes" && !info.zero_mode_case)
      throw UnsupportedCaseError("'" + c.case_id + "' has no zero-mode catalog entry");
    const bool full = c.verify || c.command == "zero-modes";
    const VerificationReport r =
        full ? verify_case(c.case_id, c.params, tol, c.grid) : levels_only(c, tol);
    doc["report"] = to_json(r, with_timing);
    o.pass = r.pass;
    o.csv = levels_csv({r});
  } else if (c.command == "bands") {
    doc["bands"] = bands_payload(c, o.csv);
    o.pass = true;
  } else {
    throw std::invalid_argument("unknown command '" + c.command + "'");
  }
  doc["pass"] = o.pass;
  o.document = std::move(doc);
  return o;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form spectra and numerical checks for the 2+1-D massless "
               "Dirac equation with complex potentials",
               "diracqm"};
  app.require_subcommand(0, 1);
  CliState s;

  CaseOptions spec_opts, zero_opts, band_opts;
  bool verify = false;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Closed-form levels, optionally verified");
  add_case_options(spectrum, s, spec_opts, false);
  spectrum->add_flag("--verify", verify, "Run the full verification pipeline");

  CLI::App* zero = app.add_subcommand("zero-modes", "Zero-energy states of example1..example4");
  add_case_options(zero, s, zero_opts, false);

  CLI::App* bands = app.add_subcommand("bands", "Hill band-edge spectrum of i b sin 2x");
  bands->add_option("--b", s.config.b, "Sine amplitude b")->capture_default_str();
  bands->add_option("--modes", s.config.modes, "Fourier modes K (matrix size 2K+1)")
      ->capture_default_str();
  bands->add_option("--bloch-k", s.config.bloch_k, "Bloch momentum")->capture_default_str();
  bands->add_option("--branch", s.config.branch, "Effective-potential branch")
      ->check(CLI::IsMember({"minus", "plus", "both"}))
      ->capture_default_str();
  bands->add_option("--count", s.config.count, "Eigenvalues listed per branch")
      ->capture_default_str();
  add_output_options(bands, s, band_opts);

  CLI::App* list = app.add_subcommand("list-cases", "Print the case registry");
  std::string list_format = "text";
  list->add_option("--format", list_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    // subcommand --help arrives here as well
    if (e.get_exit_code() == 0) {
      for (CLI::App* sub : app.get_subcommands())
        out << sub->help();
      if (app.get_subcommands().empty()) out << app.help();
      return kPass;
    }
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (app.get_subcommands().empty()) {
      out << app.help();
      return kPass;
    }
    if (*list) {
      if (list_format == "json") {
        json arr = json::array();
        for (const auto& c : case_registry())
          arr.push_back({{"id", c.id}, {"summary", c.summary}, {"defaults", c.defaults},
                         {"zero_modes", c.zero_mode_case}});
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& c : case_registry()) out << c.id << "\t" << c.summary << '\n';
      }
      return kPass;
    }

    CaseOptions* opts = *spectrum ? &spec_opts : *zero ? &zero_opts : &band_opts;
    s.config.command = *spectrum ? "spectrum" : *zero ? "zero-modes" : "bands";
    if (opts->replay && opts->replay->count()) {
      const json stored = load_json(s.replay);
      if (!stored.contains("config"))
        throw std::invalid_argument(s.replay + " carries no config echo");
      RunConfig c = run_config_from_json(stored.at("config"));
      c.format = parse_format(s.format);
      c.output.reset();
      if (opts->output && opts->output->count()) c.output = s.output;
      return finish(c, s.timing, std::optional<json>(std::in_place, stored), out, err);
    }
    if (*spectrum || *zero) {
      if (s.config.case_id.empty()) throw std::invalid_argument("--case is required");
      find_case(s.config.case_id);
    }
    collect(s, *opts);
    s.config.verify = verify;
    return finish(s.config, s.timing, std::nullopt, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    if (is_configuration_error(e) || dynamic_cast<const json::exception*>(&e))
      return kConfigError;
    return kNumericError;
  }
}

}  // namespace cdirac::cli
