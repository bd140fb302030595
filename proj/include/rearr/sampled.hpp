#ifndef REARR_SAMPLED_HPP
#define REARR_SAMPLED_HPP

#include <functional>
#include <memory>
#include <vector>

#include "rearr/grid_domain.hpp"
#include "rearr/step_function.hpp"

namespace rearr {

/// One value per cell of a GridDomain.  Immutable by convention: every
/// operation returns a fresh function.
class SampledFunction {
 public:
  SampledFunction(std::shared_ptr<const GridDomain> domain, std::vector<double> values);

  // Evaluate fn at every cell center (parallel map).
  static SampledFunction fill(std::shared_ptr<const GridDomain> domain,
                              const std::function<double(std::array<double, 2>)>& fn);

  const GridDomain& domain() const noexcept { return *dom_; }
  std::shared_ptr<const GridDomain> domain_ptr() const noexcept { return dom_; }
  std::size_t size() const noexcept { return vals_.size(); }
  double operator[](std::size_t i) const { return vals_[i]; }
  const std::vector<double>& values() const noexcept { return vals_; }

  SampledFunction shifted(double c) const;  // f - c
  SampledFunction abs() const;

 private:
  std::shared_ptr<const GridDomain> dom_;
  std::vector<double> vals_;
};

struct GradientResult {
  SampledFunction magnitude;
  std::size_t isolated_axes = 0;  // axes without any neighbor, derivative taken as 0
};

/// Finite-difference gradient magnitude: central differences where both
/// neighbors exist, one-sided at boundary cells (no ghost extension — the
/// functions need not vanish on the boundary).
GradientResult gradient_magnitude(const SampledFunction& f);

/// Left endpoint of the interval of admissible medians: the smallest r with
/// measure{f <= r} >= 1/2 and measure{f >= r} >= 1/2.
double median_constant(const SampledFunction& f);

/// Layer truncation: t2-t1 where f > t2, f-t1 where t1 < f <= t2, else 0.
/// Requires 0 < t1 < t2 and f >= 0.
SampledFunction truncate(const SampledFunction& f, double t1, double t2);

/// Decreasing rearrangement of |f| with respect to the cell measures, or to
/// explicit positive weights summing to 1.
MonotoneStep rearrange_sampled(const SampledFunction& f,
                               const std::vector<double>* weights = nullptr);

/// Measure-weighted mean, summed in cell order.
double mean_value(const SampledFunction& f, const std::vector<double>* weights = nullptr);

}  // namespace rearr

#endif
