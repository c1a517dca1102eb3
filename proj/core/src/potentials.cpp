#include "cdirac/potentials.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cdirac/errors.hpp"

namespace cdirac {
namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// sech and tanh of a complex argument without overflow for large |Re z|.
cplx csech(cplx z) {
  if (z.real() < 0.0) return csech(-z);
  const cplx e = std::exp(-z);
  return 2.0 * e / (1.0 + e * e);
}

cplx ctanh(cplx z) {
  if (z.real() < 0.0) return -ctanh(-z);
  const cplx e = std::exp(-2.0 * z);
  return (1.0 - e) / (1.0 + e);
}

double rsech(double x) { return csech(cplx(x)).real(); }
double rtanh(double x) { return std::tanh(x); }

// csch and coth for x > 0
double rcsch(double x) {
  const double e = std::exp(-x);
  return 2.0 * e / (1.0 - e * e);
}
double rcoth(double x) { return 1.0 / std::tanh(x); }

void check_domain(const PotentialSpec& spec, double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite abscissa");
  const Domain d = domain_of(spec);
  if (d.kind == DomainKind::periodic) return;
  if (x == d.lo || x == d.hi)
    throw PoleError(family_name(spec) + ": evaluation at the pole x = " +
                    std::to_string(x));
  if (!d.contains(x))
    throw DomainError(family_name(spec) + ": x = " + std::to_string(x) +
                      " outside the domain");
}

void require_finite(std::initializer_list<double> values) {
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("potential parameters must be finite");
}

}  // namespace

std::string lorentz_case_name(LorentzCase kind) {
  switch (kind) {
    case LorentzCase::scarf1:
      return "lorentz-scarf1";
    case LorentzCase::scarf2:
      return "lorentz-scarf2";
    case LorentzCase::morse:
      return "lorentz-morse";
    case LorentzCase::poschl_teller:
      return "lorentz-poschl-teller";
  }
  return "lorentz";
}

std::string family_name(const PotentialSpec& spec) {
  return std::visit(
      overloaded{
          [](const RosenMorseCot&) { return std::string("rosen-morse"); },
          [](const ShiftedParabola&) { return std::string("example1"); },
          [](const TanhSech&) { return std::string("example2"); },
          [](const SinePeriodic&) { return std::string("example3"); },
          [](const ShiftedSech&) { return std::string("example4"); },
          [](const LorentzScalar& l) { return lorentz_case_name(l.kind); }},
      spec);
}

bool is_lorentz(const PotentialSpec& spec) noexcept {
  return std::holds_alternative<LorentzScalar>(spec);
}

Domain domain_of(const PotentialSpec& spec) {
  return std::visit(
      overloaded{
          [](const RosenMorseCot&) { return Domain{0.0, kPi, DomainKind::finite}; },
          [](const SinePeriodic&) { return Domain{0.0, kPi, DomainKind::periodic}; },
          [](const LorentzScalar& l) {
            switch (l.kind) {
              case LorentzCase::scarf1:
                return Domain{-0.5 * kPi, 0.5 * kPi, DomainKind::finite};
              case LorentzCase::poschl_teller:
                return Domain{0.0, kInf, DomainKind::half_line};
              default:
                return Domain{-kInf, kInf, DomainKind::whole_line};
            }
          },
          [](const auto&) { return Domain{-kInf, kInf, DomainKind::whole_line}; }},
      spec);
}

void validate(const PotentialSpec& spec) {
  std::visit(overloaded{
                 [](const RosenMorseCot& p) {
                   require_finite({p.v0});
                   if (!(p.v0 > 0.0))
                     throw DomainError("rosen-morse requires V0 > 0");
                 },
                 [](const ShiftedParabola& p) { require_finite({p.mu}); },
                 [](const TanhSech& p) { require_finite({p.mu, p.lambda}); },
                 [](const SinePeriodic& p) { require_finite({p.b}); },
                 [](const ShiftedSech& p) {
                   require_finite({p.lambda, p.mu});
                   // sech(x - i mu) has a pole on the real axis at |mu| = pi/2
                   if (!(std::abs(p.mu) < 0.5 * kPi))
                     throw DomainError("example4 requires |mu| < pi/2");
                 },
                 [](const LorentzScalar& p) { require_finite({p.a, p.b, p.c}); }},
             spec);
}

cplx eval_potential(const PotentialSpec& spec, double x) {
  check_domain(spec, x);
  return std::visit(
      overloaded{
          [x](const RosenMorseCot& p) -> cplx {
            return kI * p.v0 * std::cos(x) / std::sin(x);
          },
          [x](const ShiftedParabola& p) -> cplx {
            const cplx z(x, -p.mu);
            return z * z;
          },
          [x](const TanhSech& p) -> cplx {
            return -kI * p.mu * rtanh(x) + p.lambda * rsech(x);
          },
          [x](const SinePeriodic& p) -> cplx {
            return kI * p.b * std::sin(2.0 * x);
          },
          [x](const ShiftedSech& p) -> cplx {
            return -p.lambda * csech(cplx(x, -p.mu));
          },
          [x](const LorentzScalar& p) -> cplx {
            const cplx g(p.b, p.c);
            switch (p.kind) {
              case LorentzCase::scarf1:
                return p.a * std::tan(x) - g / std::cos(x);
              case LorentzCase::scarf2:
                return p.a * rtanh(x) + g * rsech(x);
              case LorentzCase::morse:
                return p.a - g * std::exp(-x);
              case LorentzCase::poschl_teller:
                return p.a * rcoth(x) - g * rcsch(x);
            }
            return 0.0;
          }},
      spec);
}

cplx eval_potential_derivative(const PotentialSpec& spec, double x) {
  check_domain(spec, x);
  return std::visit(
      overloaded{
          [x](const RosenMorseCot& p) -> cplx {
            const double s = std::sin(x);
            return -kI * p.v0 / (s * s);
          },
          [x](const ShiftedParabola& p) -> cplx { return 2.0 * cplx(x, -p.mu); },
          [x](const TanhSech& p) -> cplx {
            const double sh = rsech(x);
            return -kI * p.mu * sh * sh - p.lambda * sh * rtanh(x);
          },
          [x](const SinePeriodic& p) -> cplx {
            return 2.0 * kI * p.b * std::cos(2.0 * x);
          },
          [x](const ShiftedSech& p) -> cplx {
            const cplx z(x, -p.mu);
            return p.lambda * csech(z) * ctanh(z);
          },
          [x](const LorentzScalar& p) -> cplx {
            const cplx g(p.b, p.c);
            switch (p.kind) {
              case LorentzCase::scarf1: {
                const double sec = 1.0 / std::cos(x);
                return p.a * sec * sec - g * sec * std::tan(x);
              }
              case LorentzCase::scarf2: {
                const double sh = rsech(x);
                return p.a * sh * sh - g * sh * rtanh(x);
              }
              case LorentzCase::morse:
                return g * std::exp(-x);
              case LorentzCase::poschl_teller: {
                const double cs = rcsch(x);
                return -p.a * cs * cs + g * cs * rcoth(x);
              }
            }
            return 0.0;
          }},
      spec);
}

cplx effective_potential(const PotentialSpec& spec, double eps, double ky,
                         Branch branch, double x) {
  const cplx u = eval_potential(spec, x);
  const cplx du = eval_potential_derivative(spec, x);
  if (is_lorentz(spec))
    return branch == Branch::minus ? u * u - du : u * u + du;
  const cplx shifted = u - eps;
  const cplx base = -shifted * shifted + ky * ky;
  return branch == Branch::minus ? base - kI * du : base + kI * du;
}

Field sample_potential(const PotentialSpec& spec, const Grid& grid) {
  return sample(grid, [&](double x) { return eval_potential(spec, x); });
}

Field sample_effective_potential(const PotentialSpec& spec, double eps,
                                 double ky, Branch branch, const Grid& grid) {
  return sample(grid, [&](double x) {
    return effective_potential(spec, eps, ky, branch, x);
  });
}

std::size_t anchor_index(const PotentialSpec& spec, const Grid& grid) {
  const Domain d = domain_of(spec);
  if (std::holds_alternative<RosenMorseCot>(spec))
    return grid.nearest_index(0.5 * kPi);
  if (d.kind == DomainKind::whole_line ||
      (d.kind == DomainKind::finite && d.lo == -d.hi)) {
    if (grid.x0() <= 0.0 && grid.x1() >= 0.0) return grid.nearest_index(0.0);
  }
  return grid.size() / 2;
}

}  // namespace cdirac
