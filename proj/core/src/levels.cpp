#include "cdirac/levels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cdirac/errors.hpp"

namespace cdirac {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string(what) + " must be finite");
}

void require_range(int n_lo, int n_hi) {
  if (n_lo < 0 || n_hi < n_lo)
    throw RangeError("level range [" + std::to_string(n_lo) + ", " +
                     std::to_string(n_hi) + "] is empty or negative");
}

}  // namespace

double rosen_morse_epsilon(double v0, double ky, int n) {
  require_finite(v0, "V0");
  require_finite(ky, "ky");
  if (!(v0 > 0.0)) throw DomainError("V0 must be positive");
  if (n < 0) throw RangeError("level index must be non-negative");
  if (n == 0)
    throw SingularLevelError(
        "n = 0: the level formula divides by zero; the only n = 0 state has "
        "ky = 0 and arbitrary eps");
  const double dn = n;
  // 1 - V0^2/(V0+n)^2 factored to avoid cancellation
  const double denom = dn * (2.0 * v0 + dn) / ((v0 + dn) * (v0 + dn));
  const double eps2 = (dn * dn + 2.0 * v0 * dn + ky * ky) / denom;
  return std::sqrt(eps2);
}

std::vector<AnalyticLevel> rosen_morse_levels(double v0, double ky, int n_lo,
                                              int n_hi) {
  require_range(n_lo, n_hi);
  std::vector<AnalyticLevel> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    AnalyticLevel l;
    l.n = n;
    l.ky = ky;
    l.epsilon = rosen_morse_epsilon(v0, ky, n);
    l.s = v0;
    l.a = l.epsilon * v0 / (v0 + n);
    out.push_back(l);
  }
  return out;
}

int scarf2_max_level(double a) {
  require_finite(a, "A");
  if (!(a > 0.0)) return -1;
  // largest integer strictly below a
  const double f = std::ceil(a) - 1.0;
  return static_cast<int>(f);
}

double scarf2_energy(double a, int n) {
  return a * a - (a - n) * (a - n);
}

std::vector<AnalyticLevel> scarf2_levels(double a, int n_lo, int n_hi) {
  require_range(n_lo, n_hi);
  const int top = scarf2_max_level(a);
  if (n_hi > top)
    throw RangeError("Scarf II bound states require n < A; n = " +
                     std::to_string(n_hi) + ", A = " + std::to_string(a));
  std::vector<AnalyticLevel> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    AnalyticLevel l;
    l.n = n;
    l.epsilon = scarf2_energy(a, n);
    out.push_back(l);
  }
  return out;
}

int lorentz_max_level(LorentzCase kind, double a) {
  require_finite(a, "A");
  if (kind == LorentzCase::scarf1) return std::numeric_limits<int>::max();
  if (a < 0.0) return -1;
  return static_cast<int>(std::floor(a));
}

std::vector<AnalyticLevel> lorentz_levels(LorentzCase kind, double a,
                                          double ky, int n_lo, int n_hi) {
  require_range(n_lo, n_hi);
  require_finite(ky, "ky");
  if (kind == LorentzCase::scarf1 && !(a > 0.0))
    throw DomainError("lorentz-scarf1 requires A > 0");
  const int top = lorentz_max_level(kind, a);
  if (n_hi > top)
    throw RangeError("level n = " + std::to_string(n_hi) +
                     " exceeds floor(A) = " + std::to_string(top));
  std::vector<AnalyticLevel> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    AnalyticLevel l;
    l.n = n;
    l.ky = ky;
    l.epsilon = kind == LorentzCase::scarf1 ? (a + n) * (a + n) - a * a
                                            : a * a - (a - n) * (a - n);
    l.threshold = kind != LorentzCase::scarf1 && static_cast<double>(n) == a;
    l.energy = std::sqrt(l.epsilon + ky * ky);
    out.push_back(l);
  }
  return out;
}

std::vector<KyCandidate> example2_ky_candidates(double mu, int n_max) {
  require_finite(mu, "mu");
  if (!(mu > 1.0)) throw DomainError("example2 requires mu > 1");
  if (n_max < 0) throw RangeError("n_max must be non-negative");
  const int top = std::min(n_max, scarf2_max_level(mu));
  std::vector<KyCandidate> out;
  for (int n = 0; n <= top; ++n) {
    KyCandidate c;
    c.n = n;
    c.ky_squared = (mu - n) * (mu - n) - mu * mu;
    c.admissible = c.ky_squared >= 0.0;
    out.push_back(c);
  }
  return out;
}

std::vector<KyCandidate> example2_ky_admissible(double mu, int n_max) {
  std::vector<KyCandidate> out;
  for (const auto& c : example2_ky_candidates(mu, n_max))
    if (c.admissible) out.push_back(c);
  return out;
}

ShiftedSechQuantization shifted_sech_quantization(double lambda) {
  require_finite(lambda, "lambda");
  ShiftedSechQuantization q;
  q.a = lambda - 0.5;
  q.b = 0.5;
  if (!(q.a > 0.0))
    throw DomainError("example4 requires lambda > 1/2 for a bound state");
  for (int n = 0; n < q.a; ++n) {
    const double k = static_cast<double>(n) - lambda + 0.5;
    q.states.push_back({n, k});
    q.states.push_back({n, -k});
  }
  q.reported_degeneracy =
      std::max(0, static_cast<int>(std::floor(lambda - 1.5)));
  return q;
}

}  // namespace cdirac
