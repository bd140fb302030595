#include "rearr/piecewise_power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rearr/parallel.hpp"

namespace rearr {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// 7-point Gauss / 15-point Kronrod pair on [-1,1].
constexpr double kGK_X[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                             0.741531185599394, 0.586087235467691, 0.405845151377397,
                             0.207784955007898, 0.0};
constexpr double kGK_WK[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                              0.140653259715525, 0.169004726639267, 0.190350578064785,
                              0.204432940075298, 0.209482141084728};
constexpr double kGK_WG[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                              0.417959183673469};

template <class F>
void gk15(const F& f, double lo, double hi, double& kres, double& err) {
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double resk = kGK_WK[7] * f(c);
  double resg = kGK_WG[3] * f(c);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kGK_X[j];
    const double fsum = f(c - dx) + f(c + dx);
    resk += kGK_WK[j] * fsum;
    if (j % 2 == 1) resg += kGK_WG[j / 2] * fsum;
  }
  kres = resk * h;
  err = std::abs((resk - resg) * h);
}

template <class F>
double adaptive_quad(const F& f, double lo, double hi, double rel_tol, int depth = 0) {
  double k, err;
  gk15(f, lo, hi, k, err);
  if (err <= rel_tol * std::abs(k) + 1e-300 || depth >= 48) return k;
  const double mid = 0.5 * (lo + hi);
  return adaptive_quad(f, lo, mid, rel_tol, depth + 1) +
         adaptive_quad(f, mid, hi, rel_tol, depth + 1);
}

// Limit of coef * t^p as t -> 0+.
double power_limit_at_zero(double coef, double p) {
  if (coef == 0.0) return 0.0;
  if (p > 0.0) return 0.0;
  if (p == 0.0) return coef;
  return coef > 0.0 ? kInfinity : -kInfinity;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

double power_integral(double p, double lo, double hi) {
  if (!(lo >= 0.0) || !(hi >= lo)) throw std::invalid_argument("power_integral: bad bounds");
  if (hi == lo) return 0.0;
  if (p == 0.0) {
    if (lo == 0.0) return kInfinity;
    return std::log(hi / lo);
  }
  if (lo == 0.0) {
    if (p < 0.0) return kInfinity;
    return std::pow(hi, p) / p;
  }
  return (std::pow(hi, p) - std::pow(lo, p)) / p;
}

double piece_q_integral(double a, double b, double e, double w, double q, double lo, double hi) {
  if (hi <= lo) return 0.0;
  if (a == 0.0 && b == 0.0) return 0.0;
  if (!(q >= 1.0) || !std::isfinite(q)) throw std::invalid_argument("piece_q_integral: bad q");

  if (lo == 0.0) {
    // Leading behavior near 0 decides integrability of t^{wq-1} G^q.
    double lead;
    if (e < 0.0)
      lead = (b != 0.0) ? (w + e) * q : w * q;
    else if (e > 0.0)
      lead = (a != 0.0) ? w * q : (w + e) * q;
    else
      lead = w * q;
    if (lead <= 0.0) return kInfinity;
  }

  if (b == 0.0) return std::pow(a, q) * power_integral(w * q, lo, hi);
  if (a == 0.0) return std::pow(b, q) * power_integral((w + e) * q, lo, hi);
  if (q == 1.0) return a * power_integral(w, lo, hi) + b * power_integral(w + e, lo, hi);

  const double qr = std::round(q);
  if (q == qr && qr <= 40.0) {
    const int n = static_cast<int>(qr);
    double acc = 0.0;
    for (int k = 0; k <= n; ++k)
      acc += binom(n, k) * std::pow(a, n - k) * std::pow(b, k) *
             power_integral(w * q + e * k, lo, hi);
    return acc;
  }

  auto integrand = [&](double t) {
    const double g = a + b * std::pow(t, e);
    if (g <= 0.0) return 0.0;
    return std::pow(t, w * q - 1.0) * std::pow(g, q);
  };
  return adaptive_quad(integrand, lo, hi, 1e-8);
}

double piece_weighted_sup(double a, double b, double e, double w, double lo, double hi) {
  auto eval = [&](double t) {
    double r = 0.0;
    if (a != 0.0) r += a * std::pow(t, w);
    if (b != 0.0) r += b * std::pow(t, w + e);
    return r;
  };
  double best = eval(hi);
  if (lo == 0.0) {
    double lim = power_limit_at_zero(a, w) + power_limit_at_zero(b, w + e);
    if (!std::isnan(lim)) best = std::max(best, lim);
  } else {
    best = std::max(best, eval(lo));
  }
  // Interior stationary point of a t^w + b t^(w+e).
  if (a != 0.0 && b != 0.0 && e != 0.0 && (w + e) != 0.0 && b * (w + e) != 0.0) {
    const double ratio = -a * w / (b * (w + e));
    if (ratio > 0.0) {
      const double tstar = std::pow(ratio, 1.0 / e);
      if (tstar > lo && tstar < hi) best = std::max(best, eval(tstar));
    }
  }
  return best;
}

double weighted_norm(const PiecewiseTwoPower& g, double w, double q) {
  const std::size_t m = g.pieces();
  const auto bp = g.breakpoints();
  const auto ca = g.const_coef();
  const auto cb = g.power_coef();
  const double e = g.exponent();
  if (std::isinf(q)) {
    std::vector<double> sups(m);
    par::run(m, [&](std::size_t i) {
      sups[i] = piece_weighted_sup(ca[i], cb[i], e, w, bp[i], bp[i + 1]);
    });
    double best = 0.0;
    for (double s : sups) best = std::max(best, s);
    return best;
  }
  std::vector<double> parts(m);
  par::run(m, [&](std::size_t i) {
    parts[i] = piece_q_integral(ca[i], cb[i], e, w, q, bp[i], bp[i + 1]);
  });
  double acc = 0.0;
  for (double p : parts) acc += p;
  if (std::isinf(acc)) return kInfinity;
  return std::pow(acc, 1.0 / q);
}

double weighted_prefix_integral(const PiecewiseTwoPower& g, double w, double t) {
  if (t == 0.0) return 0.0;
  if (!(t > 0.0) || !(t <= 1.0))
    throw std::invalid_argument("weighted_prefix_integral: t outside (0,1]");
  const auto bp = g.breakpoints();
  const auto ca = g.const_coef();
  const auto cb = g.power_coef();
  const double e = g.exponent();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const double hi = std::min(t, bp[i + 1]);
    if (hi <= bp[i]) break;
    if (ca[i] != 0.0) acc += ca[i] * power_integral(w, bp[i], hi);
    if (cb[i] != 0.0) acc += cb[i] * power_integral(w + e, bp[i], hi);
    if (hi == t) break;
  }
  return acc;
}

PiecewiseTwoPower::PiecewiseTwoPower(std::vector<double> breakpoints,
                                     std::vector<double> const_coef,
                                     std::vector<double> power_coef, double exponent)
    : breakpoints_(std::move(breakpoints)),
      const_coef_(std::move(const_coef)),
      power_coef_(std::move(power_coef)),
      exponent_(exponent) {
  if (breakpoints_.size() < 2 || const_coef_.size() + 1 != breakpoints_.size() ||
      power_coef_.size() != const_coef_.size())
    throw std::invalid_argument("PiecewiseTwoPower: inconsistent sizes");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw std::invalid_argument("PiecewiseTwoPower: breakpoints must increase");
  prefix_.resize(breakpoints_.size());
  prefix_[0] = 0.0;
  for (std::size_t i = 0; i < const_coef_.size(); ++i) {
    const double lo = breakpoints_[i], hi = breakpoints_[i + 1];
    double piece = const_coef_[i] * (hi - lo);
    if (power_coef_[i] != 0.0)
      piece += power_coef_[i] * power_integral(exponent_ + 1.0, lo, hi);
    prefix_[i + 1] = prefix_[i] + piece;
  }
}

std::size_t PiecewiseTwoPower::piece_index(double t) const {
  if (t <= breakpoints_.front()) return 0;
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin());
  return j == 0 ? 0 : std::min(j - 1, const_coef_.size() - 1);
}

double PiecewiseTwoPower::value_at(double t) const {
  const std::size_t i = piece_index(t);
  if (t <= 0.0) {
    if (power_coef_[0] == 0.0) return const_coef_[0];
    return const_coef_[0] + power_limit_at_zero(power_coef_[0], exponent_);
  }
  return const_coef_[i] + power_coef_[i] * std::pow(t, exponent_);
}

double PiecewiseTwoPower::prefix_integral(double t) const {
  if (t == 0.0) return 0.0;
  const std::size_t i = piece_index(t);
  const double lo = breakpoints_[i];
  double acc = prefix_[i] + const_coef_[i] * (t - lo);
  if (power_coef_[i] != 0.0)
    acc += power_coef_[i] * power_integral(exponent_ + 1.0, lo, t);
  return acc;
}

bool PiecewiseTwoPower::nonincreasing_on_grid(std::size_t samples_per_piece) const {
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pieces(); ++i) {
    for (std::size_t k = 1; k <= samples_per_piece; ++k) {
      const double t = breakpoints_[i] +
                       (breakpoints_[i + 1] - breakpoints_[i]) *
                           (static_cast<double>(k) / static_cast<double>(samples_per_piece));
      const double v = value_at(t);
      if (v > prev + 1e-12 * std::max(1.0, std::abs(prev))) return false;
      prev = v;
    }
  }
  return true;
}

PiecewiseTwoPower maximal_average(const MonotoneStep& f) {
  const std::size_t m = f.pieces();
  const auto bp = f.breakpoints();
  const auto v = f.values();
  std::vector<double> nb(bp.begin(), bp.end()), a(m), b(m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = v[i];
    b[i] = f.step().prefix_integral(bp[i] == 0.0 ? 0.0 : bp[i]) - v[i] * bp[i];
  }
  b[0] = 0.0;  // exact: the average over (0,t] of a single piece is its value
  return PiecewiseTwoPower(std::move(nb), std::move(a), std::move(b), -1.0);
}

PiecewiseTwoPower oscillation(const MonotoneStep& f) {
  PiecewiseTwoPower avg = maximal_average(f);
  std::vector<double> nb(avg.breakpoints().begin(), avg.breakpoints().end());
  std::vector<double> a(avg.pieces(), 0.0);
  std::vector<double> b(avg.power_coef().begin(), avg.power_coef().end());
  return PiecewiseTwoPower(std::move(nb), std::move(a), std::move(b), -1.0);
}

}  // namespace rearr
