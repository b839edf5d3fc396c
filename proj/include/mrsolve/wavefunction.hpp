#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "mrsolve/potential.hpp"
#include "mrsolve/state.hpp"

namespace mrsolve {

// Reduced radial function (unnormalized):
//   R(r) = z^epsilon (1-z)^{1+Lambda} P_n^{(2 epsilon, 2 Lambda+1)}(1-2z),
// z = exp(-r/b). Vanishes at r -> 0 and r -> infinity; has exactly n interior
// nodes. Throws NoBoundState for unbound states, std::domain_error for r <= 0.
double radial_unnormalized(const QuantumState& s, const PotentialParams& p,
                           double r);

enum class NormMethod { ClosedForm, Quadrature };

// Closed-form normalization constant N = 1/sqrt(s_n) with
//   s_n = b (-1)^n G sum_{p,r} (-1)^{p+r} c_{p,r} I(p,r)
// evaluated entirely in log space (the individual gamma factors overflow
// doubles for typical epsilon). Throws ConsistencyError if the sum is not
// positive.
double normalization_closed(const QuantumState& s, const PotentialParams& p);

// Independent normalization route: adaptive quadrature of
//   b * integral_0^1 z^{2 eps - 1} (1-z)^{2 Lambda + 2} P^2 dz.
double normalization_quadrature(const QuantumState& s, const PotentialParams& p);

struct RadialSample {
  double r;
  double R;
};

struct RadialFunction {
  QuantumState state;
  PotentialParams params;
  double norm_const = 0.0;
  NormMethod method = NormMethod::ClosedForm;
  int nodes = 0;
  std::vector<RadialSample> samples;
};

// Log-spaced default grid covering the classically relevant region through
// deep into the exponential tail.
std::vector<double> default_radial_grid(const QuantumState& s,
                                        const PotentialParams& p,
                                        int n_points = 2000);

// Normalized radial function sampled on an ascending positive grid.
// Throws std::invalid_argument on a bad grid.
RadialFunction radial_wavefunction(const QuantumState& s,
                                   const PotentialParams& p,
                                   const std::vector<double>& grid,
                                   NormMethod method = NormMethod::ClosedForm);

// Interior sign changes (exact zeros are skipped).
int count_nodes(const std::vector<RadialSample>& samples);

void write_csv(const RadialFunction& rf, std::ostream& os);
nlohmann::ordered_json to_json(const RadialFunction& rf);

}  // namespace mrsolve
