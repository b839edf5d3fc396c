#include "mrsolve/potential.hpp"

#include "mrsolve/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mrsolve {

void validate(const PotentialParams& p) {
  if (!std::isfinite(p.A) || !std::isfinite(p.alpha) || !std::isfinite(p.b))
    throw std::invalid_argument("PotentialParams: fields must be finite");
  if (!(p.b > 0.0))
    throw std::invalid_argument("PotentialParams: b must be positive");
}

double potential_v(double r, const PotentialParams& p, const UnitSystem& u) {
  validate(p);
  if (!(r > 0.0)) throw std::domain_error("potential_v: requires r > 0");
  const double x = r / p.b;
  const double z = std::exp(-x);
  const double em = -std::expm1(-x);  // 1 - z, accurate for small x
  const double B = p.alpha * (p.alpha - 1.0);
  return u.energy_prefactor(p.b) * (-p.A * z / em + B * (z / em) * (z / em));
}

namespace {
double repulsive_B(const PotentialParams& p) {
  const double B = p.alpha * (p.alpha - 1.0);
  if (!(B > 0.0))
    throw NoInteriorMinimum(
        "potential has no interior minimum: alpha(alpha-1) = " +
        std::to_string(B) + " <= 0 (alpha in [0, 1])");
  if (!(p.A > 0.0))
    throw NoInteriorMinimum("potential has no interior minimum for A <= 0");
  return B;
}
}  // namespace

PotentialMinimum potential_minimum(const PotentialParams& p, const UnitSystem& u) {
  validate(p);
  const double B = repulsive_B(p);
  const double r0 = p.b * std::log1p(2.0 * B / p.A);
  const double v_min = -p.A * p.A * u.energy_prefactor(p.b) / (4.0 * B);
  return {r0, v_min};
}

double force_constant(const PotentialParams& p, const UnitSystem& u) {
  validate(p);
  const double B = repulsive_B(p);
  const double apb = p.A + 2.0 * B;
  return u.energy_prefactor(p.b) * p.A * p.A * apb * apb /
         (8.0 * B * B * B * p.b * p.b);
}

double effective_potential(double r, const PotentialParams& p, int l,
                           Centrifugal mode, const UnitSystem& u) {
  if (l < 0) throw std::invalid_argument("effective_potential: l must be >= 0");
  const double v = potential_v(r, p, u);
  if (l == 0) return v;
  const double pref = u.energy_prefactor(p.b);
  const double ll1 = static_cast<double>(l) * (l + 1);
  if (mode == Centrifugal::Exact) return v + pref * ll1 * (p.b / r) * (p.b / r);
  const double x = r / p.b;
  const double z = std::exp(-x);
  const double em = -std::expm1(-x);
  return v + pref * ll1 * z / (em * em);
}

}  // namespace mrsolve
