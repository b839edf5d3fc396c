#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mrsolve/errors.hpp"

namespace mrsolve {

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;  // conservative absolute-error estimate
  int evaluations = 0;
  int segments = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Segment {
  double a, b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

// One G7/K15 panel. The error estimate follows the usual practice of
// sharpening |K15 - G7| with the integral of |f - mean|.
template <class F>
Segment gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  const double fc = f(c);
  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  double resabs = kWgk[7] * std::fabs(fc);
  double flo[7], fhi[7];
  for (int j = 0; j < 7; ++j) {
    flo[j] = f(c - h * kXgk[j]);
    fhi[j] = f(c + h * kXgk[j]);
    const double fsum = flo[j] + fhi[j];
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::fabs(flo[j]) + std::fabs(fhi[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(flo[j] - reskh) + std::fabs(fhi[j] - reskh));

  resk *= h;
  resg *= h;
  resasc *= std::fabs(h);
  resabs *= std::fabs(h);

  double err = std::fabs(resk - resg);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps_floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  err = std::max(err, eps_floor);
  return Segment{a, b, resk, err};
}

}  // namespace detail

// Globally adaptive G7/K15 integration of f over [a, b]: the segment with the
// largest error estimate is bisected until
//   sum(err) <= max(abs_tol, rel_tol * |sum(value)|)
// or the segment budget is exhausted (throws QuadratureFailure carrying the
// best estimate so far).
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol = 1e-12,
                           double abs_tol = 0.0, int max_segments = 4000) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (!(rel_tol >= 0.0) || !(abs_tol >= 0.0) || (rel_tol == 0.0 && abs_tol == 0.0))
    throw std::invalid_argument("integrate: bad tolerances");
  if (max_segments < 1)
    throw std::invalid_argument("integrate: max_segments must be positive");

  std::vector<detail::Segment> heap;
  heap.reserve(256);
  heap.push_back(detail::gk15(f, a, b));
  int evaluations = 15;
  double value = heap[0].value;
  double error = heap[0].error;

  auto totals = [&heap](double& v, double& e) {
    v = 0.0;
    e = 0.0;
    for (const auto& s : heap) {
      v += s.value;
      e += s.error;
    }
  };

  while (true) {
    if (!std::isfinite(value) || !std::isfinite(error))
      throw QuadratureFailure("integrate: non-finite integrand encountered",
                              value, error);
    if (error <= std::max(abs_tol, rel_tol * std::fabs(value))) break;
    if (static_cast<int>(heap.size()) >= max_segments)
      throw QuadratureFailure("integrate: segment budget exhausted before "
                              "reaching the requested tolerance",
                              value, error);

    std::pop_heap(heap.begin(), heap.end());
    const detail::Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b))
      throw QuadratureFailure("integrate: interval too small to refine", value,
                              error);
    heap.push_back(detail::gk15(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(detail::gk15(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end());
    evaluations += 30;
    totals(value, error);
  }

  totals(value, error);
  return QuadratureResult{value, error, evaluations,
                          static_cast<int>(heap.size())};
}

}  // namespace mrsolve
