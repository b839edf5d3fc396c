#include "mrsolve/units.hpp"

#include <cmath>
#include <stdexcept>

namespace mrsolve {

UnitSystem UnitSystem::atomic() { return UnitSystem{}; }

UnitSystem UnitSystem::molecular(double mu_amu, double amu_to_energy,
                                 double hbar_c) {
  if (!(mu_amu > 0.0) || !std::isfinite(mu_amu))
    throw std::invalid_argument("UnitSystem::molecular: reduced mass must be positive");
  if (!(amu_to_energy > 0.0) || !(hbar_c > 0.0))
    throw std::invalid_argument("UnitSystem::molecular: constants must be positive");
  UnitSystem u;
  u.mode = UnitMode::Molecular;
  u.mu = mu_amu;
  u.amu_to_energy = amu_to_energy;
  u.hbar_c = hbar_c;
  return u;
}

double UnitSystem::energy_prefactor(double b) const {
  if (!(b > 0.0) || !std::isfinite(b))
    throw std::invalid_argument("energy_prefactor: b must be positive");
  if (mode == UnitMode::Atomic) return 1.0 / (2.0 * mu * b * b);
  // (hbar c)^2 / (2 mu c^2 b^2): eV with b in Angstrom.
  return hbar_c * hbar_c / (2.0 * mu * amu_to_energy * b * b);
}

double UnitSystem::kappa(double b) const {
  return 1.0 / (energy_prefactor(b) * b * b);
}

const char* UnitSystem::name() const noexcept {
  return mode == UnitMode::Atomic ? "atomic" : "molecular";
}

}  // namespace mrsolve
