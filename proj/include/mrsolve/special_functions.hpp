#pragma once

#include <vector>

namespace mrsolve {

// ln Gamma(x) for x > 0 (Lanczos, g = 7, 9 coefficients).
// Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

// ln |Gamma(x)| together with the sign of Gamma(x), valid for any non-pole x
// (reflection formula below 0.5). Throws std::domain_error at the poles
// x = 0, -1, -2, ...
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};
SignedLogGamma log_gamma_signed(double x);

// One summand of a signed log-space sum: sign * exp(log_abs).
struct LogTerm {
  double log_abs;
  double sign;
};

// Sum of sign*exp(log_abs) over terms, evaluated by scaling with the largest
// magnitude and adding in descending-magnitude order with Kahan compensation.
// Stable for sums whose terms span hundreds of orders of magnitude.
double sum_signed_logs(std::vector<LogTerm> terms);

// Jacobi polynomial P_n^{(rho, nu)} degree/parameters; requires n >= 0 and
// rho, nu > -1 (classical weight-integrability range).
struct JacobiParams {
  int n;
  double rho;
  double nu;
};

// Binomial-sum representation,
//   P_n^{(rho,nu)}(xi) = 2^-n sum_p (-1)^{n-p} C(n+rho, p) C(n+nu, n-p)
//                               (1-xi)^{n-p} (1+xi)^p,
// evaluated in log space. Valid for xi in [-1, 1].
double jacobi_sum_form(const JacobiParams& jp, double xi);

// Ascending gamma-ratio series at xi = 1 - 2z,
//   P_n^{(rho,nu)}(1-2z) = Gamma(n+rho+1)/(n! Gamma(n+rho+nu+1))
//       sum_r C(n,r) Gamma(n+rho+nu+r+1)/Gamma(rho+r+1) (-z)^r,
// evaluated in log space. Valid for z in [0, 1].
double jacobi_gamma_form(const JacobiParams& jp, double z);

// The beta integral appearing in the wavefunction normalization,
//   I(p, r) = integral_0^1 z^{n+2 eps+r-p-1} (1-z)^{p+2 Lambda+2} dz
//           = B(n + 2 eps + r - p, p + 2 Lambda + 3).
// Requires 0 <= p, r <= n, eps > 0, Lambda > -1, n + 2 eps + r - p > 0.
double beta_integral(int n, int p, int r, double eps, double Lambda);

}  // namespace mrsolve
