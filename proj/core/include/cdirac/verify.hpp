#pragma once

#include <span>
#include <string>
#include <vector>

#include "cdirac/grid.hpp"
#include "cdirac/potentials.hpp"
#include "cdirac/report.hpp"

namespace cdirac {

enum class Normalizability { decaying, growing, oscillatory, finite_domain };

std::string to_string(Normalizability n);

// Boundary modulus relative to the largest modulus over the central half of
// the grid: decaying below 1e-8, growing above 1e3, oscillatory if the
// modulus varies by less than 10% over the outer quarters. Finite and
// periodic domains are never reported as growing.
Normalizability classify_normalizability(std::span<const cplx> psi,
                                         const Grid& grid, DomainKind kind);

struct CaseInfo {
  std::string id;
  std::string summary;
  ParamMap defaults;
  bool zero_mode_case = false;
};

const std::vector<CaseInfo>& case_registry();

// Closest registered id by edit distance.
std::string suggest_case(const std::string& name);
// Throws UnknownCaseError (with a suggestion) for unregistered ids.
const CaseInfo& find_case(const std::string& id);

// Defaults merged with overrides. Keys the case does not use are rejected
// with std::invalid_argument, as are non-finite values and a non-integral
// nmax.
ParamMap resolve_params(const std::string& id, const ParamMap& overrides);
PotentialSpec make_spec(const std::string& id, const ParamMap& params);

// Closed-form levels only (zero-mode cases list their eps = 0 states).
std::vector<LevelRecord> analytic_levels(const std::string& id,
                                         const ParamMap& params);

// Full pipeline for one case: closed-form levels and wavefunctions,
// second-order and first-order residuals, oracle eigenvalues, symmetry
// checks and normalizability. params may be partial; defaults fill the rest.
VerificationReport verify_case(const std::string& id, const ParamMap& params,
                               const Tolerances& tol = {},
                               const GridSettings& grid = {});

// Every registered case with default parameters, run concurrently.
std::vector<VerificationReport> verify_all(const Tolerances& tol = {});

}  // namespace cdirac
