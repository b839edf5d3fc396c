#pragma once

#include <stdexcept>
#include <string>

namespace mrsolve {

// Requested state is above the bound-state threshold A <= A_c.
class NoBoundState : public std::domain_error {
 public:
  NoBoundState(const std::string& what, double critical_coupling)
      : std::domain_error(what), critical_coupling_(critical_coupling) {}

  // Threshold coupling A_c for the offending (n, l, alpha).
  double critical_coupling() const noexcept { return critical_coupling_; }

 private:
  double critical_coupling_;
};

// The potential has no interior minimum for the given parameters
// (alpha*(alpha-1) <= 0, i.e. alpha in [0, 1]).
class NoInteriorMinimum : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureFailure : public std::runtime_error {
 public:
  QuadratureFailure(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// Shooting eigensolver failed (bad bracket, iteration cap, ...).
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, double e_lo, double e_hi)
      : std::runtime_error(what), e_lo_(e_lo), e_hi_(e_hi) {}

  double bracket_lo() const noexcept { return e_lo_; }
  double bracket_hi() const noexcept { return e_hi_; }

 private:
  double e_lo_;
  double e_hi_;
};

// A closed-form evaluation violated one of its own invariants
// (e.g. non-positive squared norm).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Config/input file parse failure; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace mrsolve
