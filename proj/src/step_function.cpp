#include "rearr/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rearr {

namespace {

void validate_grid(const std::vector<double>& bp, const std::vector<double>& vals) {
  if (bp.size() < 2) throw std::invalid_argument("StepFunction: need at least one piece");
  if (vals.size() + 1 != bp.size())
    throw std::invalid_argument("StepFunction: breakpoint/value count mismatch");
  if (bp.front() != 0.0) throw std::invalid_argument("StepFunction: first breakpoint must be 0");
  if (bp.back() != 1.0) throw std::invalid_argument("StepFunction: last breakpoint must be 1");
  for (std::size_t i = 0; i + 1 < bp.size(); ++i)
    if (!(bp[i] < bp[i + 1]))
      throw std::invalid_argument("StepFunction: breakpoints must increase strictly");
  for (double v : vals)
    if (!std::isfinite(v)) throw std::invalid_argument("StepFunction: values must be finite");
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  validate_grid(breakpoints_, values_);
  prefix_.resize(breakpoints_.size());
  prefix_[0] = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    prefix_[i + 1] = prefix_[i] + values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
}

StepFunction StepFunction::constant(double c) { return StepFunction({0.0, 1.0}, {c}); }

StepFunction StepFunction::indicator(double measure) {
  if (!(measure > 0.0) || measure > 1.0)
    throw std::invalid_argument("indicator: measure must lie in (0,1]");
  if (measure == 1.0) return constant(1.0);
  return StepFunction({0.0, measure, 1.0}, {1.0, 0.0});
}

std::size_t StepFunction::piece_index(double t) const {
  if (t <= 0.0) return 0;
  if (!(t <= 1.0)) throw std::invalid_argument("StepFunction: t outside (0,1]");
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin());
  return j == 0 ? 0 : j - 1;
}

double StepFunction::value_at(double t) const { return values_[piece_index(t)]; }

double StepFunction::prefix_integral(double t) const {
  if (t == 0.0) return 0.0;
  if (!(t > 0.0) || !(t <= 1.0))
    throw std::invalid_argument("prefix_integral: t outside (0,1]");
  std::size_t i = piece_index(t);
  return prefix_[i] + values_[i] * (t - breakpoints_[i]);
}

double StepFunction::abs_prefix_integral(double t) const {
  if (t == 0.0) return 0.0;
  if (!(t > 0.0) || !(t <= 1.0))
    throw std::invalid_argument("abs_prefix_integral: t outside (0,1]");
  std::size_t i = piece_index(t);
  double acc = 0.0;
  for (std::size_t k = 0; k < i; ++k) acc += std::abs(values_[k]) * piece_length(k);
  return acc + std::abs(values_[i]) * (t - breakpoints_[i]);
}

double StepFunction::abs_integral() const {
  double acc = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) acc += std::abs(values_[k]) * piece_length(k);
  return acc;
}

bool StepFunction::nonincreasing() const noexcept {
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (values_[i] < values_[i + 1]) return false;
  return true;
}

bool StepFunction::nonnegative() const noexcept {
  for (double v : values_)
    if (v < 0.0) return false;
  return true;
}

MonotoneStep::MonotoneStep(StepFunction f) : f_(std::move(f)) {
  if (!f_.nonnegative())
    throw std::invalid_argument("MonotoneStep: values must be nonnegative");
  if (!f_.nonincreasing())
    throw std::invalid_argument("MonotoneStep: values must be nonincreasing");
}

MonotoneStep rearrange_step(const StepFunction& f) {
  const std::size_t m = f.pieces();
  std::vector<std::pair<double, double>> pv(m);  // (|value|, length)
  for (std::size_t i = 0; i < m; ++i) pv[i] = {std::abs(f.values()[i]), f.piece_length(i)};
  std::stable_sort(pv.begin(), pv.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<double> bp(m + 1), vals(m);
  bp[0] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    vals[i] = pv[i].first;
    bp[i + 1] = bp[i] + pv[i].second;
  }
  bp[m] = 1.0;  // the lengths sum to 1 up to rounding; pin the endpoint
  return MonotoneStep(StepFunction(std::move(bp), std::move(vals)));
}

double prefix_integral(const MonotoneStep& f, double t) {
  if (!(t > 0.0) || !(t <= 1.0)) throw std::invalid_argument("prefix_integral: t outside (0,1]");
  return f.prefix_integral(t);
}

double distribution_measure(const StepFunction& f, double tau) {
  if (tau < 0.0) return 1.0;
  const std::size_t m = f.pieces();
  std::vector<std::pair<double, double>> pv(m);
  for (std::size_t i = 0; i < m; ++i) pv[i] = {std::abs(f.values()[i]), f.piece_length(i)};
  std::stable_sort(pv.begin(), pv.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  double acc = 0.0;
  for (const auto& [v, len] : pv) {
    if (!(v > tau)) break;
    acc += len;
  }
  return acc;
}

StepFunction sample_to_step(const std::function<double(double)>& fn, std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample_to_step: need at least one piece");
  std::vector<double> bp(n + 1), vals(n);
  for (std::size_t i = 0; i <= n; ++i)
    bp[i] = static_cast<double>(i) / static_cast<double>(n);
  bp[n] = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    vals[i] = fn((static_cast<double>(i) + 0.5) / static_cast<double>(n));
  return StepFunction(std::move(bp), std::move(vals));
}

}  // namespace rearr
