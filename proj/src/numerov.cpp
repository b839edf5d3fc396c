#include "mrsolve/numerov.hpp"

#include "mrsolve/errors.hpp"
#include "mrsolve/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace mrsolve {

namespace {

constexpr double kRescaleLimit = 1e250;

struct ShootOutcome {
  int nodes = 0;
  double mismatch = 0.0;  // u'_out/u - u'_in/u at the match point
  bool too_low = false;   // trial energy certainly below the target eigenvalue
};

// Precomputed kappa*W(r_i) grid for one operator; the trial-energy loop only
// subtracts kappa*E from it.
class ShootingGrid {
 public:
  ShootingGrid(const PotentialParams& p, int l, Centrifugal mode,
               const UnitSystem& u, double r_min, double r_max, int n_points)
      : r_min_(r_min), h_((r_max - r_min) / (n_points - 1)), n_(n_points),
        kappa_(u.kappa(p.b)) {
    if (!(r_min > 0.0) || !(r_max > r_min))
      throw std::invalid_argument("numerov: requires 0 < r_min < r_max");
    if (n_points < 5)
      throw std::invalid_argument("numerov: need at least 5 grid points");
    kw_.resize(n_);
    for (int i = 0; i < n_; ++i)
      kw_[i] = kappa_ * effective_potential(r_min_ + i * h_, p, l, mode, u);
    // Regular-solution exponent at the origin: both centrifugal modes share
    // the 1/r^2 coefficient l(l+1) + alpha(alpha-1), giving s = Lambda + 1.
    s_exp_ = 0.5 * (shape_param_a(p.alpha, l) + 1.0);
    x_scale_ = p.b;
  }

  double kappa() const { return kappa_; }
  int size() const { return n_; }

  ShootOutcome shoot(double energy, int n_target) const {
    const double ke = kappa_ * energy;
    const double h2 = h_ * h_;
    auto c = [&](int i) { return 1.0 - (h2 / 12.0) * (kw_[i] - ke); };

    // Outermost classical turning point.
    int m = -1;
    for (int i = n_ - 3; i >= 2; --i) {
      if (kw_[i] - ke < 0.0) {
        m = i;
        break;
      }
    }
    if (m < 0) {
      // No classically allowed region: energy below the well bottom.
      ShootOutcome out;
      out.nodes = 0;
      out.mismatch = 1.0;
      out.too_low = true;
      return out;
    }

    // Outward sweep, seeded with the regular asymptotic r^{Lambda+1}.
    double a = std::pow((r_min_) / x_scale_, s_exp_);
    double b = std::pow((r_min_ + h_) / x_scale_, s_exp_);
    int nodes = 0;
    double um1 = 0.0, um = 0.0, up1 = 0.0;
    for (int i = 1; i <= m; ++i) {
      const double next = ((12.0 - 10.0 * c(i)) * b - c(i - 1) * a) / c(i + 1);
      // Pairs (u_{i-1}, u_i); the inward sweep owns (v_m, v_{m+1}) onward.
      if (a != 0.0 && b != 0.0 && std::signbit(a) != std::signbit(b)) ++nodes;
      if (i == m) {
        um1 = a;
        um = b;
        up1 = next;
        break;
      }
      a = b;
      b = next;
      if (std::fabs(b) > kRescaleLimit) {
        a /= kRescaleLimit;
        b /= kRescaleLimit;
      }
    }

    // Inward sweep from the exponential tail.
    double vp1 = 1e-30;
    const double ftail = kw_[n_ - 2] - ke;
    double vi = vp1 * std::exp(std::sqrt(std::max(ftail, 0.0)) * h_);
    double vm1 = 0.0, vm = 0.0, vmp1 = 0.0;
    {
      double vip1 = vp1;  // v at i+1
      double v = vi;      // v at i
      for (int i = n_ - 2; i >= m; --i) {
        const double next = ((12.0 - 10.0 * c(i)) * v - c(i + 1) * vip1) / c(i - 1);
        if (v != 0.0 && vip1 != 0.0 && std::signbit(v) != std::signbit(vip1))
          ++nodes;
        if (i == m) {
          vmp1 = vip1;
          vm = v;
          vm1 = next;
          break;
        }
        vip1 = v;
        v = next;
        if (std::fabs(v) > kRescaleLimit) {
          v /= kRescaleLimit;
          vip1 /= kRescaleLimit;
        }
      }
    }

    if (um == 0.0 || vm == 0.0)
      throw SolverFailure("numerov: zero wavefunction at the match point",
                          energy, energy);

    const double d_out = (up1 - um1) / (2.0 * h_ * um);
    const double d_in = (vmp1 - vm1) / (2.0 * h_ * vm);
    ShootOutcome out;
    out.nodes = nodes;
    out.mismatch = d_out - d_in;
    out.too_low =
        nodes < n_target || (nodes == n_target && out.mismatch > 0.0);
    return out;
  }

 private:
  double r_min_;
  double h_;
  int n_;
  double kappa_;
  double s_exp_;
  double x_scale_;
  std::vector<double> kw_;
};

}  // namespace

double numerov_eigenvalue(const PotentialParams& p, int l, int n,
                          Centrifugal mode, const UnitSystem& u,
                          const SolverConfig& cfg) {
  validate(p);
  if (l < 0 || n < 0)
    throw std::invalid_argument("numerov_eigenvalue: quantum numbers must be >= 0");
  if (!(cfg.tol_energy > 0.0))
    throw std::invalid_argument("numerov_eigenvalue: tol_energy must be positive");

  const bool auto_bracket = (cfg.e_lo == 0.0 && cfg.e_hi == 0.0);
  const bool auto_domain = (cfg.r_min == 0.0 && cfg.r_max == 0.0);
  if (!auto_domain && !(cfg.r_min > 0.0 && cfg.r_max > cfg.r_min))
    throw std::invalid_argument(
        "numerov_eigenvalue: domain must satisfy 0 < r_min < r_max");

  double e_seed = 0.0;
  if (auto_bracket || auto_domain)
    e_seed = energy_nl(QuantumState{n, l}, p, u);  // NoBoundState propagates

  double lo = auto_bracket ? 1.5 * e_seed : cfg.e_lo;
  double hi = auto_bracket ? 0.5 * e_seed : cfg.e_hi;
  if (!(lo < hi) || !(hi < 0.0))
    throw std::invalid_argument("numerov_eigenvalue: bracket must satisfy lo < hi < 0");

  double r_min = cfg.r_min, r_max = cfg.r_max;
  if (auto_domain) {
    const double kappa_tail = std::sqrt(-u.kappa(p.b) * e_seed);
    r_min = 1e-6 * p.b;
    r_max = std::max(35.0 / kappa_tail, 6.0 * p.b);
  }

  const ShootingGrid grid(p, l, mode, u, r_min, r_max, cfg.n_points);

  // Establish the bisection invariant: too_low(lo), !too_low(hi). Automatic
  // brackets widen on demand; explicit ones are a hard contract.
  if (auto_bracket) {
    int widenings = 0;
    while (!grid.shoot(lo, n).too_low) {
      lo *= 2.0;
      if (++widenings > 60 || !std::isfinite(lo))
        throw SolverFailure("numerov: failed to bracket eigenvalue from below",
                            lo, hi);
      std::fprintf(stderr, "numerov: widening lower bracket to %.6g\n", lo);
    }
    widenings = 0;
    while (grid.shoot(hi, n).too_low) {
      hi *= 0.5;
      if (++widenings > 60 || hi == 0.0)
        throw SolverFailure("numerov: failed to bracket eigenvalue from above",
                            lo, hi);
      std::fprintf(stderr, "numerov: widening upper bracket to %.6g\n", hi);
    }
  } else if (!grid.shoot(lo, n).too_low || grid.shoot(hi, n).too_low) {
    throw SolverFailure("numerov: no eigenvalue with the requested node count "
                        "inside the explicit bracket",
                        lo, hi);
  }

  int iterations = 0;
  while (hi - lo > cfg.tol_energy) {
    if (++iterations > cfg.max_bisections) {
      std::ostringstream msg;
      msg << "numerov: bisection cap " << cfg.max_bisections
          << " reached, bracket width " << (hi - lo);
      throw SolverFailure(msg.str(), lo, hi);
    }
    const double mid = 0.5 * (lo + hi);
    if (grid.shoot(mid, n).too_low)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<SpectrumEntry> approximation_error_report(
    const PotentialParams& p, const std::vector<QuantumState>& states,
    const UnitSystem& u, const SolverConfig& cfg) {
  std::vector<SpectrumEntry> report;
  report.reserve(states.size());
  for (const QuantumState& s : states) {
    SpectrumEntry e;
    e.state = s;
    e.e_closed = energy_nl(s, p, u);
    e.e_oracle_approx =
        numerov_eigenvalue(p, s.l, s.n, Centrifugal::Approximate, u, cfg);
    e.e_oracle_exact =
        numerov_eigenvalue(p, s.l, s.n, Centrifugal::Exact, u, cfg);
    e.err_approx = e.e_closed - e.e_oracle_exact;
    report.push_back(e);
  }
  return report;
}

}  // namespace mrsolve
