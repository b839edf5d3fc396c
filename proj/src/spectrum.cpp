#include "mrsolve/spectrum.hpp"

#include "mrsolve/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mrsolve {

double shape_param_a(double alpha, int l) {
  if (l < 0) throw std::invalid_argument("shape_param_a: l must be >= 0");
  if (!std::isfinite(alpha))
    throw std::invalid_argument("shape_param_a: alpha must be finite");
  const double t = 1.0 - 2.0 * alpha;
  return std::sqrt(t * t + 4.0 * static_cast<double>(l) * (l + 1));
}

double critical_coupling(int n, int l, double alpha) {
  if (n < 0 || l < 0)
    throw std::invalid_argument("critical_coupling: quantum numbers must be >= 0");
  const double Lambda = 0.5 * (shape_param_a(alpha, l) - 1.0);
  const double np1 = n + 1.0;
  return np1 * np1 + static_cast<double>(l) * (l + 1) + (2.0 * n + 1.0) * Lambda;
}

double epsilon_nl(const QuantumState& s, const PotentialParams& p) {
  validate(s);
  validate(p);
  const double a = shape_param_a(p.alpha, s.l);
  const double Lambda = 0.5 * (a - 1.0);
  const double a_c = critical_coupling(s.n, s.l, p.alpha);
  if (!(p.A > a_c)) {
    std::ostringstream msg;
    msg << "no bound state " << to_label(s) << " at alpha=" << p.alpha
        << ": A=" << p.A << " <= critical coupling A_c=" << a_c;
    throw NoBoundState(msg.str(), a_c);
  }
  return (p.A - a_c) / (2.0 * (s.n + 1.0 + Lambda));
}

ShapeParams shape_params(const QuantumState& s, const PotentialParams& p) {
  const double eps = epsilon_nl(s, p);
  const double a = shape_param_a(p.alpha, s.l);
  return {a, 0.5 * (a - 1.0), eps};
}

double energy_nl(const QuantumState& s, const PotentialParams& p,
                 const UnitSystem& u) {
  const double eps = epsilon_nl(s, p);
  return -u.energy_prefactor(p.b) * eps * eps;
}

int count_bound_states(const PotentialParams& p, int l, int n_max) {
  validate(p);
  if (l < 0 || n_max < 0)
    throw std::invalid_argument("count_bound_states: l, n_max must be >= 0");
  int count = 0;
  for (int n = 0; n <= n_max; ++n) {
    if (p.A > critical_coupling(n, l, p.alpha))
      ++count;
    else
      break;  // A_c is strictly increasing in n
  }
  return count;
}

double quantization_residual(const QuantumState& s, const PotentialParams& p) {
  const double eps = epsilon_nl(s, p);
  const double a = shape_param_a(p.alpha, s.l);
  const double lambda =
      p.A - static_cast<double>(s.l) * (s.l + 1) - (1.0 + a) * (0.5 + eps);
  const double lambda_n = s.n * (1.0 + s.n + a + 2.0 * eps);
  return lambda - lambda_n;
}

double hulthen_energy(const QuantumState& s, double strength, double delta,
                      const UnitSystem& u) {
  validate(s);
  if (!(strength > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("hulthen_energy: strength and delta must be positive");
  const double b = 1.0 / delta;
  const double pref = u.energy_prefactor(b);
  const double A_eff = strength * delta / pref;  // = 2 mu strength / (hbar^2 delta)
  const double N = s.n + s.l + 1.0;
  if (!(A_eff > N * N)) {
    std::ostringstream msg;
    msg << "no bound state " << to_label(s) << ": effective coupling "
        << A_eff << " <= N^2 = " << N * N;
    throw NoBoundState(msg.str(), N * N);
  }
  const double d = A_eff - N * N;
  return -pref * d * d / (4.0 * N * N);
}

double coulomb_limit(const QuantumState& s, double Z, const UnitSystem& u) {
  validate(s);
  if (!(Z > 0.0)) throw std::invalid_argument("coulomb_limit: Z must be positive");
  if (u.mode != UnitMode::Atomic)
    throw std::invalid_argument("coulomb_limit: defined in atomic units only");
  const double N = s.n + s.l + 1.0;
  return -Z * Z * u.mu / (2.0 * N * N);
}

}  // namespace mrsolve
