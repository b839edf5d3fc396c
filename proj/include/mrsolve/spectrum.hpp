#pragma once

#include "mrsolve/potential.hpp"
#include "mrsolve/state.hpp"
#include "mrsolve/units.hpp"

namespace mrsolve {

// a = sqrt((1-2 alpha)^2 + 4 l(l+1)). Shared by both alpha and 1-alpha.
double shape_param_a(double alpha, int l);

// Shape parameters entering the closed-form solution:
//   Lambda = (a-1)/2, epsilon = (A - A_c) / (2(n+1+Lambda)) > 0 for bound states.
struct ShapeParams {
  double a;
  double Lambda;
  double epsilon;
};

ShapeParams shape_params(const QuantumState& s, const PotentialParams& p);

// Threshold coupling: bound state (n, l) exists iff A > A_c,
//   A_c = (n+1)^2 + l(l+1) + (2n+1) Lambda.
double critical_coupling(int n, int l, double alpha);

// Dimensionless energy parameter; throws NoBoundState (carrying A_c) when
// A <= A_c.
double epsilon_nl(const QuantumState& s, const PotentialParams& p);

// E_{nl} = -(hbar^2 / 2 mu b^2) epsilon^2.
double energy_nl(const QuantumState& s, const PotentialParams& p,
                 const UnitSystem& u);

// Number of n in [0, n_max] with A > A_c at fixed l.
int count_bound_states(const PotentialParams& p, int l, int n_max);

// Residual of the quantization condition lambda = lambda_n, with
//   lambda   = A - l(l+1) - (1+a)(1/2 + epsilon),
//   lambda_n = n (1 + n + a + 2 epsilon).
// Identically zero in exact arithmetic when epsilon = epsilon_nl.
double quantization_residual(const QuantumState& s, const PotentialParams& p);

// Screened-Coulomb (alpha = 0) reduction: V = -strength*delta*z/(1-z) with
// z = exp(-delta r). Equivalent to energy_nl at alpha = 0, b = 1/delta,
// A = strength*delta / energy_prefactor(1/delta):
//   E = -prefactor (A - N^2)^2 / (4 N^2),  N = n + l + 1.
double hulthen_energy(const QuantumState& s, double strength, double delta,
                      const UnitSystem& u);

// delta -> 0 limit of hulthen_energy at fixed Z: E = -Z^2 / (2 N^2) hartree.
// Atomic units only (throws std::invalid_argument in molecular mode).
double coulomb_limit(const QuantumState& s, double Z, const UnitSystem& u);

}  // namespace mrsolve
