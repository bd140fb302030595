#include "rearr/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rearr/hardy.hpp"
#include "rearr/parallel.hpp"

namespace rearr {

SampledFunction spherical_rearrangement(const SampledFunction& f,
                                        std::shared_ptr<const GridDomain> ball) {
  if (!ball) throw std::invalid_argument("spherical_rearrangement: null ball grid");
  if (ball->dim() != f.domain().dim())
    throw std::invalid_argument("spherical_rearrangement: dimension mismatch");
  const MonotoneStep fstar = rearrange_sampled(f);
  const GridDomain& b = *ball;
  const int n = b.dim();
  const double gamma = unit_ball_measure(n);
  std::vector<double> vals(b.size());
  par::run(b.size(), [&](std::size_t i) {
    const auto& c = b.cell(i).center;
    const double rr = n == 1 ? std::abs(c[0]) : std::sqrt(c[0] * c[0] + c[1] * c[1]);
    const double t = std::min(1.0, gamma * std::pow(rr, n));
    vals[i] = t == 0.0 ? fstar.values()[0] : fstar.value_at(t);
  });
  return SampledFunction(std::move(ball), std::move(vals));
}

SampledFunction spherical_rearrangement(const SampledFunction& f) {
  return spherical_rearrangement(
      f, GridDomain::ball(f.domain().dim(), f.domain().resolution()));
}

PolyaResult polya_szego_check(const SampledFunction& f, const RISpaceSpec& space,
                              const std::vector<double>* t_grid) {
  PolyaResult res;
  res.median = median_constant(f);
  const GradientResult grad_f = gradient_magnitude(f);
  double grad_sup = 0.0;
  for (std::size_t i = 0; i < grad_f.magnitude.size(); ++i)
    grad_sup = std::max(grad_sup, grad_f.magnitude[i]);
  if (grad_sup == 0.0) {
    res.zero_gradient = true;
    return res;
  }
  const SampledFunction shifted = f.shifted(res.median);
  const SampledFunction fball = spherical_rearrangement(shifted);
  const GradientResult grad_b = gradient_magnitude(fball);
  const MonotoneStep rs_f = rearrange_sampled(grad_f.magnitude);
  const MonotoneStep rs_b = rearrange_sampled(grad_b.magnitude);

  std::vector<double> grid;
  if (t_grid) {
    grid = *t_grid;
  } else {
    const double t0 = std::max(1.0 / static_cast<double>(f.size()),
                               1.0 / static_cast<double>(fball.size()));
    const int npts = 200;
    for (int k = 0; k <= npts; ++k)
      grid.push_back(t0 * std::pow(1.0 / t0, static_cast<double>(k) / npts));
  }
  for (double t : grid) {
    const double lhs = rs_b.prefix_integral(t);
    const double rhs = rs_f.prefix_integral(t);
    const double ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    res.curve.push_back({t, lhs, rhs, ratio});
    res.sup_prefix_ratio = std::max(res.sup_prefix_ratio, ratio);
  }
  const double denom = space.norm(rs_f);
  res.norm_ratio = denom > 0.0 ? space.norm(rs_b) / denom : 0.0;
  return res;
}

std::vector<std::array<double, 2>> default_directions(int dim) {
  if (dim == 1) return {{1.0, 0.0}, {-1.0, 0.0}};
  const double d = 1.0 / std::sqrt(2.0);
  return {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0},
          {d, d},     {d, -d},     {-d, d},    {-d, -d}};
}

namespace {

// X-norm of a cell field with respect to the domain measure.  Lebesgue and
// sup norms avoid the sort; genuine Lorentz norms go through rearrangement.
double field_norm(const SampledFunction& psi, const RISpaceSpec& space) {
  using Fam = RISpaceSpec::Family;
  if (space.family == Fam::sup_norm ||
      (space.family == Fam::lebesgue && std::isinf(space.p))) {
    double m = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) m = std::max(m, std::abs(psi[i]));
    return m;
  }
  if (space.family == Fam::lebesgue) {
    const GridDomain& d = psi.domain();
    if (space.p == 1.0)
      return par::blocked_sum(psi.size(),
                              [&](std::size_t i) { return std::abs(psi[i]) * d.cell(i).measure; });
    const double acc = par::blocked_sum(psi.size(), [&](std::size_t i) {
      return std::pow(std::abs(psi[i]), space.p) * d.cell(i).measure;
    });
    return std::pow(acc, 1.0 / space.p);
  }
  return space.norm(rearrange_sampled(psi));
}

}  // namespace

ModulusResult modulus_of_continuity(const SampledFunction& f, const RISpaceSpec& space, double t,
                                    const std::vector<std::array<double, 2>>* directions) {
  if (!(t > 0.0) || !(t < 1.0))
    throw std::invalid_argument("modulus_of_continuity: t outside (0,1)");
  const GridDomain& d = f.domain();
  const double h = d.spacing();
  if (t < h) return {0.0, true};

  const auto dirs = directions ? *directions : default_directions(d.dim());
  if (dirs.empty()) throw std::invalid_argument("modulus_of_continuity: empty direction set");
  constexpr int kMagnitudes = 16;
  const bool box = d.lattice_full();

  std::vector<double> diff(d.size());
  double best = 0.0;

  for (const auto& dir : dirs) {
    // Integer lattice offsets of the sampled shift magnitudes, and the chain
    // of offsets the whole segment passes through (half-spacing sampling).
    // Offsets along a ray are monotone, so consecutive dedup is enough.
    auto offset_at = [&](double rho) -> std::array<int, 2> {
      return {static_cast<int>(std::floor(0.5 + rho * dir[0] / h)),
              d.dim() == 2 ? static_cast<int>(std::floor(0.5 + rho * dir[1] / h)) : 0};
    };
    std::vector<std::array<int, 2>> target(kMagnitudes);
    for (int k = 0; k < kMagnitudes; ++k)
      target[k] = offset_at(t * static_cast<double>(k + 1) / kMagnitudes);

    std::vector<std::array<int, 2>> chain;
    std::vector<std::size_t> chain_len(kMagnitudes);
    if (!box) {
      const int samples = std::max(1, static_cast<int>(std::ceil(t / (0.5 * h))));
      int s = 0;
      for (int k = 0; k < kMagnitudes; ++k) {
        const double rho_hi = t * static_cast<double>(k + 1) / kMagnitudes;
        for (; s <= samples; ++s) {
          const double rho = t * static_cast<double>(s) / samples;
          if (rho > rho_hi + 1e-15) break;
          const auto off = offset_at(rho);
          if (chain.empty() || chain.back() != off) chain.push_back(off);
        }
        if (chain.empty() || chain.back() != target[k]) chain.push_back(target[k]);
        chain_len[k] = chain.size();
      }
    }

    for (int k = 0; k < kMagnitudes; ++k) {
      par::run(d.size(), [&](std::size_t i) {
        const auto [ix, iy] = d.lattice_coords(i);
        int j = -1;
        if (box) {
          j = d.cell_at_lattice(ix + target[k][0], iy + target[k][1]);
        } else {
          bool admissible = true;
          for (std::size_t s2 = 0; s2 < chain_len[k] && admissible; ++s2)
            admissible = d.cell_at_lattice(ix + chain[s2][0], iy + chain[s2][1]) >= 0;
          if (admissible) j = d.cell_at_lattice(ix + target[k][0], iy + target[k][1]);
        }
        diff[i] = j >= 0 ? f[static_cast<std::size_t>(j)] - f[i] : 0.0;
      });
      const double nrm = field_norm(SampledFunction(f.domain_ptr(), diff), space);
      best = std::max(best, nrm);
    }
  }
  return {best, false};
}

CorollaryResult corollary_check(const SampledFunction& f, const RISpaceSpec& space,
                                const std::vector<double>& t_grid, bool golden_refine) {
  if (t_grid.empty()) throw std::invalid_argument("corollary_check: empty t grid");
  for (double t : t_grid)
    if (!(t > 0.0) || !(t < 0.5))
      throw std::invalid_argument("corollary_check: t grid must lie in (0, 1/2)");

  CorollaryResult res;
  const int n = f.domain().dim();

  std::vector<double> cands{median_constant(f), mean_value(f), 0.0};
  std::vector<PiecewiseTwoPower> oscs;
  oscs.reserve(cands.size());
  for (double c : cands) oscs.push_back(oscillation(rearrange_sampled(f.shifted(c))));

  auto osc_at = [&](double c, double t) {
    return oscillation(rearrange_sampled(f.shifted(c))).value_at(t);
  };

  bool any_omega = false;
  for (double t : t_grid) {
    double lhs_osc = kInf;
    for (const auto& o : oscs) lhs_osc = std::min(lhs_osc, o.value_at(t));
    if (golden_refine) {
      // golden-section scan of c over the value range; the candidate set
      // already brackets the paper's median choice, this only tightens it
      double lo = *std::min_element(f.values().begin(), f.values().end());
      double hi = *std::max_element(f.values().begin(), f.values().end());
      const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
      double c1 = hi - gr * (hi - lo), c2 = lo + gr * (hi - lo);
      double f1 = osc_at(c1, t), f2 = osc_at(c2, t);
      for (int it = 0; it < 24; ++it) {
        if (f1 < f2) {
          hi = c2;
          c2 = c1;
          f2 = f1;
          c1 = hi - gr * (hi - lo);
          f1 = osc_at(c1, t);
        } else {
          lo = c1;
          c1 = c2;
          f1 = f2;
          c2 = lo + gr * (hi - lo);
          f2 = osc_at(c2, t);
        }
      }
      lhs_osc = std::min(lhs_osc, std::min(f1, f2));
    }
    const double omega =
        modulus_of_continuity(f, space, std::pow(t, 1.0 / n)).value;
    if (omega > 0.0) any_omega = true;
    const double lhs = lhs_osc * space.fundamental(t);
    const double ratio = omega > 0.0 ? lhs / omega : (lhs > 0.0 ? kInf : 0.0);
    res.curve.push_back({t, lhs, omega, ratio});
    res.constant = std::max(res.constant, ratio);
  }
  res.flagged = !any_omega;
  if (res.flagged) res.constant = 0.0;
  return res;
}

}  // namespace rearr
