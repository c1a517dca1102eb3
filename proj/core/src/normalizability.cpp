#include <algorithm>
#include <cmath>

#include "cdirac/verify.hpp"

namespace cdirac {

std::string to_string(Normalizability n) {
  switch (n) {
    case Normalizability::decaying:
      return "decaying";
    case Normalizability::growing:
      return "growing";
    case Normalizability::oscillatory:
      return "oscillatory";
    case Normalizability::finite_domain:
      return "finite-domain";
  }
  return "finite-domain";
}

Normalizability classify_normalizability(std::span<const cplx> psi,
                                         const Grid& grid, DomainKind kind) {
  const std::size_t n = grid.size();
  if (psi.size() != n) throw std::invalid_argument("field does not match grid");
  double centre = 0.0;
  for (std::size_t i = n / 4; i < n - n / 4; ++i)
    centre = std::max(centre, std::abs(psi[i]));
  const double boundary = std::max(std::abs(psi.front()), std::abs(psi.back()));
  if (!(centre > 0.0))
    return boundary > 0.0 && kind == DomainKind::whole_line
               ? Normalizability::growing
               : Normalizability::decaying;
  const double ratio = boundary / centre;
  if (ratio < 1e-8) return Normalizability::decaying;
  const bool bounded_domain =
      kind == DomainKind::finite || kind == DomainKind::periodic;
  if (ratio > 1e3 && !bounded_domain) return Normalizability::growing;

  double lo = INFINITY, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= n / 4 && i < n - n / 4) continue;
    const double m = std::abs(psi[i]);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  if (hi > 0.0 && (hi - lo) / hi < 0.1) return Normalizability::oscillatory;
  return Normalizability::finite_domain;
}

}  // namespace cdirac
