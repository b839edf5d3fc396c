#pragma once

#include <string>

namespace mrsolve {

enum class UnitMode { Atomic, Molecular };

// Unit threading for every energy produced by the library.
//
// Atomic mode: hbar = mu = 1, lengths in bohr, energies in hartree.
// Molecular mode: lengths in Angstrom, energies in eV, the reduced mass is
// given in amu and converted through amu_to_energy (eV per amu); hbar enters
// as hbar*c in eV*Angstrom.
struct UnitSystem {
  UnitMode mode = UnitMode::Atomic;
  double mu = 1.0;                    // reduced mass (1 in atomic mode, amu otherwise)
  double hbar_c = kDefaultHbarC;      // eV*Angstrom, molecular mode only
  double amu_to_energy = kDefaultAmuToEnergy;  // eV/amu, molecular mode only

  static constexpr double kDefaultHbarC = 1973.29;
  static constexpr double kDefaultAmuToEnergy = 931.494e6;

  static UnitSystem atomic();
  static UnitSystem molecular(double mu_amu,
                              double amu_to_energy = kDefaultAmuToEnergy,
                              double hbar_c = kDefaultHbarC);

  // hbar^2 / (2 mu b^2): the natural energy scale of the potential.
  // b is in bohr (atomic) or Angstrom (molecular).
  double energy_prefactor(double b) const;

  // 2 mu / hbar^2 = 1 / (energy_prefactor(b) * b^2).
  double kappa(double b) const;

  const char* name() const noexcept;
};

}  // namespace mrsolve
