#include "rearr/sampled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rearr/parallel.hpp"

namespace rearr {

SampledFunction::SampledFunction(std::shared_ptr<const GridDomain> domain,
                                 std::vector<double> values)
    : dom_(std::move(domain)), vals_(std::move(values)) {
  if (!dom_) throw std::invalid_argument("SampledFunction: null domain");
  if (vals_.size() != dom_->size())
    throw std::invalid_argument("SampledFunction: value count != cell count");
  for (double v : vals_)
    if (!std::isfinite(v)) throw std::invalid_argument("SampledFunction: values must be finite");
}

SampledFunction SampledFunction::fill(std::shared_ptr<const GridDomain> domain,
                                      const std::function<double(std::array<double, 2>)>& fn) {
  if (!domain) throw std::invalid_argument("SampledFunction::fill: null domain");
  std::vector<double> vals(domain->size());
  const GridDomain& d = *domain;
  par::run(d.size(), [&](std::size_t i) { vals[i] = fn(d.cell(i).center); });
  return SampledFunction(std::move(domain), std::move(vals));
}

SampledFunction SampledFunction::shifted(double c) const {
  std::vector<double> v(vals_.size());
  par::run(vals_.size(), [&](std::size_t i) { v[i] = vals_[i] - c; });
  return SampledFunction(dom_, std::move(v));
}

SampledFunction SampledFunction::abs() const {
  std::vector<double> v(vals_.size());
  par::run(vals_.size(), [&](std::size_t i) { v[i] = std::abs(vals_[i]); });
  return SampledFunction(dom_, std::move(v));
}

GradientResult gradient_magnitude(const SampledFunction& f) {
  const GridDomain& d = f.domain();
  const double h = d.spacing();
  std::vector<double> mag(f.size());
  std::vector<unsigned char> isolated(f.size(), 0);
  par::run(f.size(), [&](std::size_t i) {
    double sq = 0.0;
    unsigned char iso = 0;
    for (int axis = 0; axis < d.dim(); ++axis) {
      const int im = d.neighbor(i, axis, 0);
      const int ip = d.neighbor(i, axis, 1);
      double deriv = 0.0;
      if (im >= 0 && ip >= 0)
        deriv = (f[static_cast<std::size_t>(ip)] - f[static_cast<std::size_t>(im)]) / (2.0 * h);
      else if (ip >= 0)
        deriv = (f[static_cast<std::size_t>(ip)] - f[i]) / h;
      else if (im >= 0)
        deriv = (f[i] - f[static_cast<std::size_t>(im)]) / h;
      else
        ++iso;
      sq += deriv * deriv;
    }
    mag[i] = std::sqrt(sq);
    isolated[i] = iso;
  });
  std::size_t iso_total = 0;
  for (unsigned char c : isolated) iso_total += c;
  return {SampledFunction(f.domain_ptr(), std::move(mag)), iso_total};
}

double median_constant(const SampledFunction& f) {
  const GridDomain& d = f.domain();
  std::vector<std::pair<double, double>> vw(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) vw[i] = {f[i], d.cell(i).measure};
  std::stable_sort(vw.begin(), vw.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  double cum = 0.0;
  for (const auto& [v, w] : vw) {
    cum += w;
    if (cum >= 0.5 - 1e-12) return v;
  }
  return vw.back().first;
}

SampledFunction truncate(const SampledFunction& f, double t1, double t2) {
  if (!(t1 > 0.0) || !(t1 < t2)) throw std::invalid_argument("truncate: need 0 < t1 < t2");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] < 0.0) throw std::invalid_argument("truncate: input must be nonnegative");
  std::vector<double> v(f.size());
  par::run(f.size(), [&](std::size_t i) {
    const double x = f[i];
    v[i] = x > t2 ? t2 - t1 : (x > t1 ? x - t1 : 0.0);
  });
  return SampledFunction(f.domain_ptr(), std::move(v));
}

MonotoneStep rearrange_sampled(const SampledFunction& f, const std::vector<double>* weights) {
  const GridDomain& d = f.domain();
  const std::size_t n = f.size();
  std::vector<std::pair<double, double>> vw(n);
  if (weights) {
    if (weights->size() != n)
      throw std::invalid_argument("rearrange_sampled: weight count != cell count");
    double sum = 0.0;
    for (double w : *weights) {
      if (!(w > 0.0)) throw std::invalid_argument("rearrange_sampled: weights must be positive");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-10)
      throw std::invalid_argument("rearrange_sampled: weights must sum to 1");
    for (std::size_t i = 0; i < n; ++i) vw[i] = {std::abs(f[i]), (*weights)[i]};
  } else {
    for (std::size_t i = 0; i < n; ++i) vw[i] = {std::abs(f[i]), d.cell(i).measure};
  }
  std::stable_sort(vw.begin(), vw.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<double> bp(n + 1), vals(n);
  bp[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    vals[i] = vw[i].first;
    bp[i + 1] = bp[i] + vw[i].second;
  }
  bp[n] = 1.0;
  return MonotoneStep(StepFunction(std::move(bp), std::move(vals)));
}

double mean_value(const SampledFunction& f, const std::vector<double>* weights) {
  const GridDomain& d = f.domain();
  double acc = 0.0;
  if (weights) {
    if (weights->size() != f.size())
      throw std::invalid_argument("mean_value: weight count != cell count");
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      acc += f[i] * (*weights)[i];
      sum += (*weights)[i];
    }
    return acc / sum;
  }
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * d.cell(i).measure;
  return acc;
}

}  // namespace rearr
