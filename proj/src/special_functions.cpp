#include "mrsolve/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mrsolve {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
  // Valid for x >= 0.5.
  const double g = 7.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x + g - 0.5;
  return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(acc);
}

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("log_gamma: requires finite x > 0");
  if (x < 0.5) {
    // Reflection keeps the Lanczos core on x >= 0.5.
    return std::log(kPi / std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

SignedLogGamma log_gamma_signed(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("log_gamma_signed: non-finite argument");
  if (is_nonpositive_integer(x))
    throw std::domain_error("log_gamma_signed: pole at non-positive integer");
  if (x >= 0.5) return {lanczos_log_gamma(x), +1};
  // Gamma(x) Gamma(1-x) = pi / sin(pi x). Use sinpi-style reduction so the
  // sign stays exact for large negative x.
  const double xf = std::floor(x);
  const double frac = x - xf;  // in (0, 1)
  const double sin_abs = std::fabs(std::sin(kPi * frac));
  // sign(sin(pi x)) = +1 when floor(x) is even, -1 when odd.
  const bool floor_odd = std::fmod(std::fabs(xf), 2.0) == 1.0;
  const int sign = floor_odd ? -1 : +1;
  const double log_abs = std::log(kPi / sin_abs) - lanczos_log_gamma(1.0 - x);
  return {log_abs, sign};
}

double sum_signed_logs(std::vector<LogTerm> terms) {
  terms.erase(std::remove_if(terms.begin(), terms.end(),
                             [](const LogTerm& t) {
                               return t.sign == 0.0 ||
                                      t.log_abs == -std::numeric_limits<double>::infinity();
                             }),
              terms.end());
  if (terms.empty()) return 0.0;
  std::sort(terms.begin(), terms.end(),
            [](const LogTerm& a, const LogTerm& b) { return a.log_abs > b.log_abs; });
  const double scale = terms.front().log_abs;
  double sum = 0.0, comp = 0.0;  // Kahan
  for (const LogTerm& t : terms) {
    const double v = t.sign * std::exp(t.log_abs - scale);
    const double y = v - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return sum * std::exp(scale);
}

namespace {

void validate_jacobi(const JacobiParams& jp) {
  if (jp.n < 0) throw std::invalid_argument("jacobi: n must be >= 0");
  if (!(jp.rho > -1.0) || !(jp.nu > -1.0))
    throw std::invalid_argument("jacobi: requires rho > -1 and nu > -1");
}

}  // namespace

double jacobi_sum_form(const JacobiParams& jp, double xi) {
  validate_jacobi(jp);
  if (!(xi >= -1.0 && xi <= 1.0))
    throw std::domain_error("jacobi_sum_form: xi must lie in [-1, 1]");
  const int n = jp.n;
  const double rho = jp.rho, nu = jp.nu;
  if (n == 0) return 1.0;

  // log C(n+rho, p) and C(n+nu, n-p): all gamma arguments are positive here.
  const double lg_nrho = log_gamma(n + rho + 1.0);
  const double lg_nnu = log_gamma(n + nu + 1.0);
  const double half_lo = 0.5 * (1.0 - xi);  // in [0, 1]
  const double half_hi = 0.5 * (1.0 + xi);

  std::vector<LogTerm> terms;
  terms.reserve(n + 1);
  for (int p = 0; p <= n; ++p) {
    if (half_lo == 0.0 && n - p > 0) continue;
    if (half_hi == 0.0 && p > 0) continue;
    double lg = lg_nrho - log_gamma(p + 1.0) - log_gamma(n + rho - p + 1.0) +
                lg_nnu - log_gamma(n - p + 1.0) - log_gamma(nu + p + 1.0);
    if (n - p > 0) lg += (n - p) * std::log(half_lo);
    if (p > 0) lg += p * std::log(half_hi);
    const double sign = ((n - p) % 2 == 0) ? 1.0 : -1.0;
    terms.push_back({lg, sign});
  }
  return sum_signed_logs(std::move(terms));
}

double jacobi_gamma_form(const JacobiParams& jp, double z) {
  validate_jacobi(jp);
  if (!(z >= 0.0 && z <= 1.0))
    throw std::domain_error("jacobi_gamma_form: z must lie in [0, 1]");
  const int n = jp.n;
  const double rho = jp.rho, nu = jp.nu;
  if (n == 0) return 1.0;

  const double lg_pref =
      log_gamma(n + rho + 1.0) - log_gamma(n + 1.0) - log_gamma(n + rho + nu + 1.0);
  const double lg_n1 = log_gamma(n + 1.0);
  std::vector<LogTerm> terms;
  terms.reserve(n + 1);
  for (int r = 0; r <= n; ++r) {
    if (z == 0.0 && r > 0) continue;
    double lg = lg_pref + lg_n1 - log_gamma(r + 1.0) - log_gamma(n - r + 1.0) +
                log_gamma(n + rho + nu + r + 1.0) - log_gamma(rho + r + 1.0);
    if (r > 0) lg += r * std::log(z);
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    terms.push_back({lg, sign});
  }
  return sum_signed_logs(std::move(terms));
}

double beta_integral(int n, int p, int r, double eps, double Lambda) {
  if (n < 0 || p < 0 || r < 0 || p > n || r > n)
    throw std::invalid_argument("beta_integral: requires 0 <= p, r <= n");
  if (!(eps > 0.0) || !(Lambda > -1.0))
    throw std::domain_error("beta_integral: requires eps > 0 and Lambda > -1");
  const double x = n + 2.0 * eps + r - p;
  const double y = p + 2.0 * Lambda + 3.0;
  if (!(x > 0.0))
    throw std::domain_error("beta_integral: exponent n + 2 eps + r - p must be positive");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

}  // namespace mrsolve
