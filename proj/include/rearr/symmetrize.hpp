#ifndef REARR_SYMMETRIZE_HPP
#define REARR_SYMMETRIZE_HPP

#include <array>
#include <memory>
#include <vector>

#include "rearr/lorentz.hpp"
#include "rearr/sampled.hpp"

namespace rearr {

/// Spherical symmetric decreasing rearrangement: f°(x) = f*(gamma_n |x|^n)
/// on a unit-measure ball grid of the same dimension, radially nonincreasing
/// and equimeasurable with |f| up to one cell measure.
SampledFunction spherical_rearrangement(const SampledFunction& f,
                                        std::shared_ptr<const GridDomain> ball);
SampledFunction spherical_rearrangement(const SampledFunction& f);  // ball at same resolution

struct CurvePoint {
  double t = 0.0, lhs = 0.0, rhs = 0.0, ratio = 0.0;
};

struct PolyaResult {
  double median = 0.0;
  double sup_prefix_ratio = 0.0;  // sup_t  int_0^t |grad(f-c)°|* / int_0^t |grad f|*
  double norm_ratio = 0.0;        // ||grad(f-c)°||_X(B) / ||grad f||_X(Omega)
  bool zero_gradient = false;
  std::vector<CurvePoint> curve;
};

/// Gradient comparison between f on its domain and the spherically
/// rearranged median shift (f - r_f)° on the unit ball.
PolyaResult polya_szego_check(const SampledFunction& f, const RISpaceSpec& space,
                              const std::vector<double>* t_grid = nullptr);

struct ModulusResult {
  double value = 0.0;
  bool below_resolution = false;  // t smaller than one cell spacing
};

std::vector<std::array<double, 2>> default_directions(int dim);

/// X-modulus of continuity at step t: sup over sampled shifts h = rho*d with
/// |h| <= t of the X-norm of (f(.+h) - f) restricted to the cells whose whole
/// translated segment stays inside the grid.  The sup is approximated from
/// below by 16 magnitudes per direction.
ModulusResult modulus_of_continuity(const SampledFunction& f, const RISpaceSpec& space, double t,
                                    const std::vector<std::array<double, 2>>* directions = nullptr);

struct CorollaryResult {
  double constant = 0.0;
  bool flagged = false;  // modulus identically zero (constant input)
  std::vector<CurvePoint> curve;
};

/// Measures sup over the t-grid of
///   inf_c [(f-c)**(t) - (f-c)*(t)] * phi_X(t) / omega_X(f, t^{1/n}),
/// with the inf over c restricted to {median, mean, 0} (optionally refined by
/// a golden-section scan).
CorollaryResult corollary_check(const SampledFunction& f, const RISpaceSpec& space,
                                const std::vector<double>& t_grid, bool golden_refine = false);

}  // namespace rearr

#endif
