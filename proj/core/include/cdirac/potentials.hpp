#pragma once

#include <string>
#include <variant>

#include "cdirac/grid.hpp"

namespace cdirac {

// U(x) = i V0 cot x on (0, pi).
struct RosenMorseCot {
  double v0;
};

// U(x) = (x - i mu)^2.
struct ShiftedParabola {
  double mu;
};

// U(x) = -i mu tanh x + lambda sech x.
struct TanhSech {
  double mu;
  double lambda;
};

// U(x) = i b sin 2x, period pi.
struct SinePeriodic {
  double b;
};

// U(x) = -lambda sech(x - i mu).
struct ShiftedSech {
  double lambda;
  double mu;
};

enum class LorentzCase { scarf1, scarf2, morse, poschl_teller };

// Superpotential W(x) of the sigma_z coupling, with B complexified to B + iC:
//   scarf1         A tan x  - (B + iC) sec x,   (-pi/2, pi/2)
//   scarf2         A tanh x + (B + iC) sech x,  whole line
//   morse          A - (B + iC) exp(-x),        whole line
//   poschl_teller  A coth x - (B + iC) csch x,  (0, inf)
struct LorentzScalar {
  LorentzCase kind;
  double a;
  double b;
  double c;
};

using PotentialSpec = std::variant<RosenMorseCot, ShiftedParabola, TanhSech,
                                   SinePeriodic, ShiftedSech, LorentzScalar>;

enum class Branch { minus, plus };

enum class DomainKind { finite, whole_line, half_line, periodic };

// Open interval (lo, hi); infinite ends are +-infinity.
struct Domain {
  double lo;
  double hi;
  DomainKind kind;
  bool contains(double x) const noexcept { return x > lo && x < hi; }
};

Domain domain_of(const PotentialSpec& spec);
bool is_lorentz(const PotentialSpec& spec) noexcept;
std::string family_name(const PotentialSpec& spec);
std::string lorentz_case_name(LorentzCase kind);

// Throws std::invalid_argument (non-finite parameter) or DomainError (a
// parameter outside the family's admissible set).
void validate(const PotentialSpec& spec);

// U(x) for the scalar families, W(x) for the Lorentz-scalar ones.
cplx eval_potential(const PotentialSpec& spec, double x);
// Analytic dU/dx (or dW/dx).
cplx eval_potential_derivative(const PotentialSpec& spec, double x);

// Scalar families: U_-+ = -(U - eps)^2 -+ i U' + ky^2.
// Lorentz families: W^2 -+ W' (eps and ky do not enter).
cplx effective_potential(const PotentialSpec& spec, double eps, double ky,
                         Branch branch, double x);

Field sample_potential(const PotentialSpec& spec, const Grid& grid);
Field sample_effective_potential(const PotentialSpec& spec, double eps,
                                 double ky, Branch branch, const Grid& grid);

// Natural anchor point of a grid for this family: pi/2 on (0, pi), x = 0
// on symmetric or whole-line domains, otherwise the grid midpoint.
std::size_t anchor_index(const PotentialSpec& spec, const Grid& grid);

}  // namespace cdirac
