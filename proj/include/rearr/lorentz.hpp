#ifndef REARR_LORENTZ_HPP
#define REARR_LORENTZ_HPP

#include <limits>
#include <string>

#include "rearr/piecewise_power.hpp"
#include "rearr/step_function.hpp"

namespace rearr {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class LorentzFlavor { classical, oscillation };

/// Lorentz-type norm of a nonincreasing step f on (0,1].
///   classical:   ( int (t^{1/p} f(t))^q dt/t )^{1/q},  sup form for q = inf
///   oscillation: ( int (f**(t) - f(t))^q t^{q/p} dt/t )^{1/q}
/// p = inf is admitted only for q = inf (classical) or any q (oscillation,
/// where the weight degenerates to 1).  Exact piecewise evaluation; adaptive
/// quadrature only where the integrand genuinely mixes powers.
double lorentz_norm(const MonotoneStep& f, double p, double q, LorentzFlavor flavor);

/// Parametrized rearrangement-invariant norm descriptor.  The fundamental
/// function is the norm of an indicator as a function of its measure.
struct RISpaceSpec {
  enum class Family { lebesgue, lorentz, sup_norm };

  Family family = Family::lebesgue;
  double p = 1.0;
  double q = 1.0;
  LorentzFlavor flavor = LorentzFlavor::classical;

  static RISpaceSpec lebesgue(double p);
  static RISpaceSpec lorentz(double p, double q, LorentzFlavor flavor);
  static RISpaceSpec sup();
  // "l1", "l2", "linf", "lp:1.5", "lorentz:2:1:classical", "lorentz:inf:2:osc"
  static RISpaceSpec parse(const std::string& text);

  double norm(const MonotoneStep& fstar) const;
  double fundamental(double s) const;
  std::string label() const;
};

}  // namespace rearr

#endif
