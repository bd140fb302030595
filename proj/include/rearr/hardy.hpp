#ifndef REARR_HARDY_HPP
#define REARR_HARDY_HPP

#include <vector>

#include "rearr/piecewise_power.hpp"
#include "rearr/sampled.hpp"
#include "rearr/step_function.hpp"

namespace rearr {

/// Parameters of the weighted-norm criterion for the operator
/// g -> integral_t^1 s^alpha g(s) ds/s between Lebesgue spaces on (0,1).
/// alpha = 1 - (n-1)s/n (equal to 1/n when s = 1); the target exponent r is
/// always computed, never user-supplied.  At the borderline configuration
/// (n-1)s + 1 - t = 0 the target formula degenerates; r = n*t is used there.
struct HardyParams {
  int n = 2;
  double s = 1.0;   // John exponent, >= 1
  double t = 2.0;   // source Lebesgue exponent, > 1
  double alpha = 0.5;
  double r = 0.0;

  static HardyParams make(int n, double s, double t);
  // slope of log(value) vs log(a) predicted for a -> 0
  double paper_exponent() const;
};

/// Exact evaluation of t -> integral_t^1 s^(alpha-1) g(s) ds as a + b t^alpha
/// per piece.  For g >= 0 the result is continuous, nonincreasing and its own
/// decreasing rearrangement.
PiecewiseTwoPower hardy_apply(const StepFunction& g, double alpha);
PiecewiseTwoPower hardy_apply(const MonotoneStep& g, double alpha);

struct CriterionResult {
  double sup = 0.0;
  double argmax_a = 1.0;
  bool diverging = false;
  std::vector<double> grid;
  std::vector<double> values;
};

/// Geometric grid, ratio in (0,1), from 1 down to a_min.  The floor sits at
/// 1e-30: the slowest blow-up exercised (exponent -1/24) needs ~24 decades
/// before it exceeds the 10x divergence threshold below.
std::vector<double> default_a_grid(double a_min = 1e-30, double ratio = 0.8);

/// Evaluates a^{1/r} * (integral_a^1 u^{-(n-1)st/(n(t-1))} du)^{(t-1)/t} on the
/// grid; the inner integral is in closed form.  diverging is set when the
/// value at the smallest grid point exceeds 10x the value at a = 1e-2.
CriterionResult mazya_criterion_sup(const HardyParams& params, const std::vector<double>& a_grid);

/// Least-squares slope of log(value) against log(a) over a in [1e-6, 1e-4].
/// Only meaningful for diverging configurations; rejected otherwise.
double blowup_exponent(const HardyParams& params, const std::vector<double>& a_grid);

/// u(x) = integral_{gamma_n |x - x0|^n}^1 g(s) s^(1/n - 1) ds sampled at cell
/// centers; g must be nonnegative and supported in [0, sigma].
SampledFunction radial_test_function(const StepFunction& g,
                                     std::shared_ptr<const GridDomain> domain);

double unit_ball_measure(int n);

}  // namespace rearr

#endif
