#pragma once

#include "mrsolve/units.hpp"

namespace mrsolve {

// V(r) = (hbar^2 / 2 mu b^2) * [ -A z/(1-z) + alpha(alpha-1) z^2/(1-z)^2 ],
// z = exp(-r/b). A and alpha are dimensionless, b carries the length unit.
// Invariant under alpha -> 1 - alpha.
struct PotentialParams {
  double A;
  double alpha;
  double b;
};

// Throws std::invalid_argument on non-finite fields or b <= 0.
void validate(const PotentialParams& p);

// Potential energy at r > 0 (throws std::domain_error otherwise).
double potential_v(double r, const PotentialParams& p, const UnitSystem& u);

struct PotentialMinimum {
  double r0;     // location of the interior minimum
  double v_min;  // V(r0) = -A^2 * prefactor / (4 alpha(alpha-1))
};

// Interior minimum at r0 = b ln(1 + 2 alpha(alpha-1)/A); exists only for
// alpha outside [0, 1] and A > 0. Throws NoInteriorMinimum otherwise.
PotentialMinimum potential_minimum(const PotentialParams& p, const UnitSystem& u);

// d^2V/dr^2 at r0 (same existence conditions as potential_minimum):
//   prefactor * A^2 (A + 2B)^2 / (8 B^3 b^2),   B = alpha(alpha-1).
// Agrees with a central-difference second derivative of potential_v.
double force_constant(const PotentialParams& p, const UnitSystem& u);

enum class Centrifugal {
  Exact,        // hbar^2 l(l+1) / (2 mu r^2)
  Approximate,  // hbar^2 l(l+1) / (2 mu b^2) * z/(1-z)^2  (same r->0 singularity)
};

// V(r) plus the chosen centrifugal term.
double effective_potential(double r, const PotentialParams& p, int l,
                           Centrifugal mode, const UnitSystem& u);

}  // namespace mrsolve
