#ifndef REARR_STEP_FUNCTION_HPP
#define REARR_STEP_FUNCTION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rearr {

/// Piecewise-constant function on (0,1]: value values()[i] on the half-open
/// piece (breakpoints()[i], breakpoints()[i+1]].  Breakpoints are strictly
/// increasing, start at 0 and end at 1.  Immutable after construction;
/// prefix sums are precomputed in a fixed order so integrals are
/// reproducible bit for bit.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction constant(double c);
  // 1 on (0, measure], 0 after; measure in (0,1].
  static StepFunction indicator(double measure);

  std::size_t pieces() const noexcept { return values_.size(); }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }

  double piece_length(std::size_t i) const { return breakpoints_[i + 1] - breakpoints_[i]; }

  // Index of the piece containing t, for t in (0,1].  t == 0 maps to piece 0
  // (the right-limit convention used when evaluating at a ball center).
  std::size_t piece_index(double t) const;
  double value_at(double t) const;

  // Exact integral of the function over (0, t], t in [0,1].
  double prefix_integral(double t) const;
  double integral() const { return prefix_[values_.size()]; }

  // Integral of |f| over (0, t].
  double abs_prefix_integral(double t) const;
  double abs_integral() const;

  bool nonincreasing() const noexcept;
  bool nonnegative() const noexcept;

 private:
  std::vector<double> breakpoints_;  // size m+1
  std::vector<double> values_;       // size m
  std::vector<double> prefix_;       // size m+1; prefix_[i] = integral over (0, b_i]
};

/// A StepFunction that is nonnegative and nonincreasing, i.e. equal to its
/// own decreasing rearrangement.  Home of f*, (f-c)* and |grad f|*.
class MonotoneStep {
 public:
  explicit MonotoneStep(StepFunction f);

  const StepFunction& step() const noexcept { return f_; }
  std::size_t pieces() const noexcept { return f_.pieces(); }
  std::span<const double> breakpoints() const noexcept { return f_.breakpoints(); }
  std::span<const double> values() const noexcept { return f_.values(); }
  double value_at(double t) const { return f_.value_at(t); }
  double prefix_integral(double t) const { return f_.prefix_integral(t); }
  double integral() const { return f_.integral(); }

 private:
  StepFunction f_;
};

/// Decreasing rearrangement of |f|: sort (|value|, length) pairs by value
/// descending (stable, so ties keep their original piece order) and chain
/// the lengths into new breakpoints.  Equimeasurable with |f|.
MonotoneStep rearrange_step(const StepFunction& f);

/// Exact integral of f over (0, t]; thin wrapper kept for call-site clarity.
double prefix_integral(const MonotoneStep& f, double t);

/// Measure of {|f| > tau}, accumulated in descending value order so that the
/// same piece multiset always produces the same float.
double distribution_measure(const StepFunction& f, double tau);

/// Midpoint sampling of an arbitrary function onto n equal pieces of (0,1].
StepFunction sample_to_step(const std::function<double(double)>& fn, std::size_t n);

}  // namespace rearr

#endif
