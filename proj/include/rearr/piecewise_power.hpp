#ifndef REARR_PIECEWISE_POWER_HPP
#define REARR_PIECEWISE_POWER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "rearr/step_function.hpp"

namespace rearr {

/// Piecewise two-term power function on (0,1]:
///   G(t) = a_i + b_i * t^e   on (breakpoints[i], breakpoints[i+1]].
/// One fixed exponent e per object.  This single shape carries everything
/// the calculus needs in closed form:
///   e = -1   : f** (a = step value, b = prefix offset) and f** - f*,
///   e = alpha: outputs of the Hardy-type operator.
class PiecewiseTwoPower {
 public:
  PiecewiseTwoPower(std::vector<double> breakpoints, std::vector<double> const_coef,
                    std::vector<double> power_coef, double exponent);

  std::size_t pieces() const noexcept { return const_coef_.size(); }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> const_coef() const noexcept { return const_coef_; }
  std::span<const double> power_coef() const noexcept { return power_coef_; }
  double exponent() const noexcept { return exponent_; }

  std::size_t piece_index(double t) const;
  // t == 0 evaluates the right limit (finite only when the power term
  // vanishes there).
  double value_at(double t) const;

  // Exact integral over (0, t].
  double prefix_integral(double t) const;

  bool nonincreasing_on_grid(std::size_t samples_per_piece = 4) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> const_coef_;
  std::vector<double> power_coef_;
  double exponent_;
  std::vector<double> prefix_;  // integral up to each breakpoint
};

/// t -> f**(t) = (1/t) * integral of f over (0,t], as a + b/t per piece.
/// Nonincreasing, continuous, and >= f* everywhere.
PiecewiseTwoPower maximal_average(const MonotoneStep& f);

/// t -> f**(t) - f*(t).  For a step this is b_i / t per piece with b_i >= 0,
/// zero on the first piece.
PiecewiseTwoPower oscillation(const MonotoneStep& f);

// ---- closed-form kernels used by the norm evaluators ----

/// integral of t^(p-1) over [lo, hi], 0 <= lo < hi; log form when p == 0,
/// +inf when the endpoint singularity is non-integrable.
double power_integral(double p, double lo, double hi);

/// integral over [lo, hi] of (t^w * (a + b t^e))^q dt/t, assuming
/// a + b t^e >= 0 on the piece.  Exact for pure powers and integer q;
/// adaptive Gauss-Kronrod to 1e-8 relative tolerance otherwise.
double piece_q_integral(double a, double b, double e, double w, double q, double lo, double hi);

/// sup over (lo, hi] of t^w * (a + b t^e) (limits at the open endpoint count).
double piece_weighted_sup(double a, double b, double e, double w, double lo, double hi);

/// (integral of (t^w G(t))^q dt/t over (0,1])^(1/q); q may be +inf (sup form).
double weighted_norm(const PiecewiseTwoPower& g, double w, double q);

/// Exact integral of s^(w-1) * G(s) over (0, t].
double weighted_prefix_integral(const PiecewiseTwoPower& g, double w, double t);

}  // namespace rearr

#endif
