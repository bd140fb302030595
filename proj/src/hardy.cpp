#include "rearr/hardy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rearr/parallel.hpp"

namespace rearr {

double unit_ball_measure(int n) {
  if (n == 1) return 2.0;
  if (n == 2) return std::numbers::pi;
  throw std::invalid_argument("unit_ball_measure: n must be 1 or 2");
}

HardyParams HardyParams::make(int n, double s, double t) {
  if (n < 2) throw std::invalid_argument("HardyParams: n must be >= 2");
  if (!(s >= 1.0)) throw std::invalid_argument("HardyParams: s must be >= 1");
  if (!(t > 1.0)) throw std::invalid_argument("HardyParams: t must be > 1");
  // equality is the log-borderline of the inner integral and stays admissible
  if (s < (t - 1.0) / (n - 1.0) - 1e-12)
    throw std::invalid_argument("HardyParams: need s >= (t-1)/(n-1)");
  HardyParams p;
  p.n = n;
  p.s = s;
  p.t = t;
  p.alpha = 1.0 - (n - 1.0) * s / n;
  const double denom = (n - 1.0) * s + 1.0 - t;
  if (denom > 1e-12)
    p.r = n * t / denom;
  else if (std::abs(denom) <= 1e-12)
    p.r = n * t;  // borderline convention, see header
  else
    throw std::invalid_argument("HardyParams: target exponent undefined ((n-1)s + 1 - t < 0)");
  return p;
}

double HardyParams::paper_exponent() const {
  return (n - 1.0) * (1.0 - t) * (s - 1.0) / (n * t);
}

PiecewiseTwoPower hardy_apply(const StepFunction& g, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("hardy_apply: alpha must be positive");
  if (!g.nonnegative()) throw std::invalid_argument("hardy_apply: g must be nonnegative");
  const std::size_t m = g.pieces();
  const auto bp = g.breakpoints();
  const auto v = g.values();
  // On piece i: h(t) = tail_i + v_i (b_{i+1}^a - t^a)/a  ==  a_i + c_i t^a.
  std::vector<double> nb(bp.begin(), bp.end()), ca(m), cb(m);
  double tail = 0.0;
  for (std::size_t k = m; k-- > 0;) {
    const double hi = std::pow(bp[k + 1], alpha), lo = std::pow(bp[k], alpha);
    ca[k] = tail + v[k] * hi / alpha;
    cb[k] = -v[k] / alpha;
    tail += v[k] * (hi - lo) / alpha;
  }
  return PiecewiseTwoPower(std::move(nb), std::move(ca), std::move(cb), alpha);
}

PiecewiseTwoPower hardy_apply(const MonotoneStep& g, double alpha) {
  return hardy_apply(g.step(), alpha);
}

std::vector<double> default_a_grid(double a_min, double ratio) {
  if (!(a_min > 0.0)) throw std::invalid_argument("default_a_grid: bad floor");
  if (!(ratio > 0.0) || !(ratio < 1.0)) throw std::invalid_argument("default_a_grid: bad ratio");
  std::vector<double> g;
  for (double a = 1.0; a >= a_min; a *= ratio) g.push_back(a);
  return g;
}

namespace {

double criterion_value(const HardyParams& p, double a) {
  if (!(a > 0.0) || a > 1.0) throw std::invalid_argument("criterion: a outside (0,1]");
  const double kappa = -(p.n - 1.0) * p.s * p.t / (p.n * (p.t - 1.0));
  const double k1 = kappa + 1.0;
  double inner;
  if (std::abs(k1) < 1e-14)
    inner = std::log(1.0 / a);
  else
    inner = (1.0 - std::pow(a, k1)) / k1;
  if (inner <= 0.0) return 0.0;
  return std::pow(a, 1.0 / p.r) * std::pow(inner, (p.t - 1.0) / p.t);
}

}  // namespace

CriterionResult mazya_criterion_sup(const HardyParams& params, const std::vector<double>& a_grid) {
  if (a_grid.empty()) throw std::invalid_argument("mazya_criterion_sup: empty grid");
  CriterionResult res;
  res.grid = a_grid;
  res.values.resize(a_grid.size());
  double smallest = a_grid.front();
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    res.values[i] = criterion_value(params, a_grid[i]);
    smallest = std::min(smallest, a_grid[i]);
    if (res.values[i] > res.sup) {
      res.sup = res.values[i];
      res.argmax_a = a_grid[i];
    }
  }
  const double ref = criterion_value(params, 1e-2);
  const double at_small = criterion_value(params, smallest);
  res.diverging = ref > 0.0 ? (at_small > 10.0 * ref) : (at_small > 0.0);
  return res;
}

double blowup_exponent(const HardyParams& params, const std::vector<double>& a_grid) {
  CriterionResult crit = mazya_criterion_sup(params, a_grid);
  if (!crit.diverging)
    throw std::invalid_argument(
        "blowup_exponent: configuration is not diverging (slope would be near 0)");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < crit.grid.size(); ++i) {
    const double a = crit.grid[i];
    if (a < 1e-6 || a > 1e-4 || !(crit.values[i] > 0.0)) continue;
    const double x = std::log(a), y = std::log(crit.values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  if (cnt < 3)
    throw std::invalid_argument("blowup_exponent: grid has fewer than 3 points in [1e-6, 1e-4]");
  const double nd = static_cast<double>(cnt);
  return (nd * sxy - sx * sy) / (nd * sxx - sx * sx);
}

SampledFunction radial_test_function(const StepFunction& g,
                                     std::shared_ptr<const GridDomain> domain) {
  if (!domain) throw std::invalid_argument("radial_test_function: null domain");
  if (!g.nonnegative())
    throw std::invalid_argument("radial_test_function: g must be nonnegative");
  const GridDomain& d = *domain;
  const double sigma = d.sigma();
  for (std::size_t i = 0; i < g.pieces(); ++i)
    if (g.values()[i] != 0.0 && g.breakpoints()[i + 1] > sigma + 1e-12)
      throw std::invalid_argument("radial_test_function: support of g exceeds sigma");
  const int n = d.dim();
  const double gamma = unit_ball_measure(n);
  const PiecewiseTwoPower h = hardy_apply(g, 1.0 / n);
  const auto x0 = d.anchor();
  std::vector<double> vals(d.size());
  par::run(d.size(), [&](std::size_t i) {
    const auto& c = d.cell(i).center;
    const double dx = c[0] - x0[0], dy = c[1] - x0[1];
    const double rr = n == 1 ? std::abs(dx) : std::sqrt(dx * dx + dy * dy);
    const double t = std::min(1.0, gamma * std::pow(rr, n));
    vals[i] = h.value_at(t);
  });
  return SampledFunction(std::move(domain), std::move(vals));
}

}  // namespace rearr
