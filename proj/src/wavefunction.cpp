#include "mrsolve/wavefunction.hpp"

#include "mrsolve/errors.hpp"
#include "mrsolve/quadrature.hpp"
#include "mrsolve/special_functions.hpp"
#include "mrsolve/spectrum.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace mrsolve {

double radial_unnormalized(const QuantumState& s, const PotentialParams& p,
                           double r) {
  if (!(r > 0.0))
    throw std::domain_error("radial_unnormalized: requires r > 0");
  const ShapeParams sp = shape_params(s, p);
  const double x = r / p.b;
  const double z = std::exp(-x);
  const double em = -std::expm1(-x);  // 1 - z
  const double P = jacobi_gamma_form({s.n, 2.0 * sp.epsilon, 2.0 * sp.Lambda + 1.0}, z);
  // z^eps (1-z)^{1+Lambda} assembled in log space; underflows cleanly to 0 in
  // the far tail.
  const double envelope = std::exp(-sp.epsilon * x + (1.0 + sp.Lambda) * std::log(em));
  return envelope * P;
}

double normalization_closed(const QuantumState& s, const PotentialParams& p) {
  const ShapeParams sp = shape_params(s, p);
  const int n = s.n;
  const double te = 2.0 * sp.epsilon;     // 2 eps
  const double tl = 2.0 * sp.Lambda;      // 2 Lambda

  // s_n = b (-1)^n G sum_{p,r=0}^{n} (-1)^{p+r} T(p,r) I(p,r), with
  //   G      = Gamma(n+tl+2) Gamma(n+te+1)^2 / Gamma(n+te+tl+2)
  //   T(p,r) = Gamma(n+te+tl+r+2) /
  //            [p! r! (n-p)! (n-r)! Gamma(p+tl+2) Gamma(n+te-p+1) Gamma(te+r+1)]
  //   I(p,r) = B(n+te+r-p, p+tl+3)
  // Every gamma argument is positive, so only the (-1) parities carry signs.
  const double logG = log_gamma(n + tl + 2.0) + 2.0 * log_gamma(n + te + 1.0) -
                      log_gamma(n + te + tl + 2.0);

  std::vector<LogTerm> terms;
  terms.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int pp = 0; pp <= n; ++pp) {
    for (int rr = 0; rr <= n; ++rr) {
      const double x = n + te + rr - pp;           // first beta argument
      const double y = pp + tl + 3.0;              // second beta argument
      double lg = logG;
      lg += log_gamma(n + te + tl + rr + 2.0);
      lg -= log_gamma(pp + 1.0) + log_gamma(rr + 1.0) +
            log_gamma(n - pp + 1.0) + log_gamma(n - rr + 1.0);
      lg -= log_gamma(pp + tl + 2.0) + log_gamma(n + te - pp + 1.0) +
            log_gamma(te + rr + 1.0);
      lg += log_gamma(x) + log_gamma(y) - log_gamma(x + y);
      const double sign = ((pp + rr) % 2 == 0) ? 1.0 : -1.0;
      terms.push_back({lg, sign});
    }
  }
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;
  const double s_n = p.b * parity * sum_signed_logs(std::move(terms));
  if (!(s_n > 0.0) || !std::isfinite(s_n)) {
    std::ostringstream msg;
    msg << "normalization_closed: squared norm " << s_n << " for state "
        << to_label(s) << " is not positive";
    throw ConsistencyError(msg.str());
  }
  return 1.0 / std::sqrt(s_n);
}

double normalization_quadrature(const QuantumState& s, const PotentialParams& p) {
  const ShapeParams sp = shape_params(s, p);
  const double te = 2.0 * sp.epsilon;
  const double tl = 2.0 * sp.Lambda;
  const JacobiParams jp{s.n, te, tl + 1.0};
  auto integrand = [&](double z) {
    if (z <= 0.0 || z >= 1.0) return 0.0;
    const double P = jacobi_gamma_form(jp, z);
    return std::exp((te - 1.0) * std::log(z) + (tl + 2.0) * std::log1p(-z)) * P * P;
  };
  const QuadratureResult q = integrate(integrand, 0.0, 1.0, 1e-13, 0.0, 4000);
  const double s_n = p.b * q.value;
  if (!(s_n > 0.0))
    throw ConsistencyError("normalization_quadrature: non-positive squared norm");
  return 1.0 / std::sqrt(s_n);
}

std::vector<double> default_radial_grid(const QuantumState& s,
                                        const PotentialParams& p,
                                        int n_points) {
  validate(p);
  if (n_points < 2)
    throw std::invalid_argument("default_radial_grid: need at least 2 points");
  const ShapeParams sp = shape_params(s, p);
  // Reach deep into the tail but stay clear of exp underflow in z^eps.
  const double x_max = std::min(40.0, 600.0 / sp.epsilon);
  const double lo = std::log(1e-4 * p.b);
  const double hi = std::log(x_max * p.b);
  std::vector<double> grid(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double t = static_cast<double>(i) / (n_points - 1);
    grid[i] = std::exp(lo + t * (hi - lo));
  }
  return grid;
}

int count_nodes(const std::vector<RadialSample>& samples) {
  int nodes = 0;
  double prev = 0.0;
  for (const RadialSample& s : samples) {
    if (s.R == 0.0) continue;
    if (prev != 0.0 && std::signbit(s.R) != std::signbit(prev)) ++nodes;
    prev = s.R;
  }
  return nodes;
}

RadialFunction radial_wavefunction(const QuantumState& s,
                                   const PotentialParams& p,
                                   const std::vector<double>& grid,
                                   NormMethod method) {
  if (grid.size() < 2)
    throw std::invalid_argument("radial_wavefunction: grid needs >= 2 points");
  double prev = 0.0;
  for (double r : grid) {
    if (!(r > 0.0) || !(r > prev))
      throw std::invalid_argument(
          "radial_wavefunction: grid must be positive and strictly ascending");
    prev = r;
  }
  const double norm = (method == NormMethod::ClosedForm)
                          ? normalization_closed(s, p)
                          : normalization_quadrature(s, p);
  RadialFunction rf;
  rf.state = s;
  rf.params = p;
  rf.norm_const = norm;
  rf.method = method;
  rf.samples.reserve(grid.size());
  for (double r : grid)
    rf.samples.push_back({r, norm * radial_unnormalized(s, p, r)});
  rf.nodes = count_nodes(rf.samples);
  return rf;
}

void write_csv(const RadialFunction& rf, std::ostream& os) {
  os << "r,R\n";
  char buf[64];
  for (const RadialSample& s : rf.samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.r, s.R);
    os << buf;
  }
}

nlohmann::ordered_json to_json(const RadialFunction& rf) {
  nlohmann::ordered_json j;
  j["state"] = to_label(rf.state);
  j["n"] = rf.state.n;
  j["l"] = rf.state.l;
  j["A"] = rf.params.A;
  j["alpha"] = rf.params.alpha;
  j["b"] = rf.params.b;
  j["norm_const"] = rf.norm_const;
  j["norm_method"] =
      rf.method == NormMethod::ClosedForm ? "closed-form" : "quadrature";
  j["nodes"] = rf.nodes;
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const RadialSample& s : rf.samples) samples.push_back({s.r, s.R});
  j["samples"] = std::move(samples);
  return j;
}

}  // namespace mrsolve
