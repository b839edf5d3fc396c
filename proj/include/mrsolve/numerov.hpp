#pragma once

#include <vector>

#include "mrsolve/potential.hpp"
#include "mrsolve/state.hpp"
#include "mrsolve/units.hpp"

namespace mrsolve {

// Numerov shooting eigensolver configuration. Non-positive r_min/r_max or an
// empty bracket request automatic choices derived from the closed-form seed:
//   r_min = 1e-6 b,  r_max = max(35/kappa_tail, 6 b),
//   bracket = [1.5 E_seed, 0.5 E_seed] widened on demand.
struct SolverConfig {
  double r_min = 0.0;
  double r_max = 0.0;
  int n_points = 120001;       // >= 5; grid is uniform in r
  double e_lo = 0.0;           // bracket (both zero -> automatic)
  double e_hi = 0.0;
  double tol_energy = 1e-10;   // bisection width at convergence
  int max_bisections = 200;
};

// Eigenvalue of  -u'' + kappa W(r) u = kappa E u  (kappa = 2 mu/hbar^2) with
// W = V + centrifugal term selected by `mode`, for the state with n radial
// nodes. Matching at the outer turning point; strictly monotone node-count /
// log-derivative bisection. Throws SolverFailure if no eigenvalue lies in the
// bracket; NoBoundState propagates from the closed-form seed when automatic
// bracketing is requested for an unbound state.
double numerov_eigenvalue(const PotentialParams& p, int l, int n,
                          Centrifugal mode, const UnitSystem& u,
                          const SolverConfig& cfg = {});

// One row of the centrifugal-approximation error report.
struct SpectrumEntry {
  QuantumState state;
  double e_closed;        // closed-form energy (approximate centrifugal)
  double e_oracle_approx; // Numerov, approximate centrifugal (validates closed form)
  double e_oracle_exact;  // Numerov, exact centrifugal
  double err_approx;      // e_closed - e_oracle_exact
};

// Runs both solver modes for each state and quantifies the error introduced
// by the centrifugal approximation.
std::vector<SpectrumEntry> approximation_error_report(
    const PotentialParams& p, const std::vector<QuantumState>& states,
    const UnitSystem& u, const SolverConfig& cfg = {});

}  // namespace mrsolve
