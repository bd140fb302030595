#include "rearr/battery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rearr/hardy.hpp"
#include "rearr/parallel.hpp"

namespace rearr {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = std::max(unit(), 1e-300), u2 = unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

StepFunction random_step(Rng& rng, std::size_t max_pieces, double vmax, double support) {
  if (!(support > 0.0) || support > 1.0) throw std::invalid_argument("random_step: bad support");
  const std::size_t m = 2 + rng.index(std::max<std::size_t>(1, max_pieces - 1));
  std::vector<double> cuts;
  for (std::size_t i = 0; i + 1 < m; ++i) cuts.push_back(rng.uniform(0.02, 0.98) * support);
  cuts.push_back(support);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> bp{0.0};
  std::vector<double> vals;
  double prev = 0.0;
  for (double c : cuts) {
    if (c - prev < 1e-9) continue;
    bp.push_back(c);
    vals.push_back(vmax * rng.unit());
    prev = c;
  }
  if (bp.back() < 1.0) {
    bp.push_back(1.0);
    vals.push_back(0.0);
  }
  return StepFunction(std::move(bp), std::move(vals));
}

MonotoneStep random_monotone(Rng& rng, std::size_t max_pieces, double vmax) {
  return rearrange_step(random_step(rng, max_pieces, vmax));
}

std::vector<double> boundary_distance(const GridDomain& d) {
  std::vector<std::size_t> boundary;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.is_boundary_cell(i)) boundary.push_back(i);
  std::vector<double> dist(d.size(), 0.0);
  if (boundary.empty()) return dist;
  par::run(d.size(), [&](std::size_t i) {
    const auto& c = d.cell(i).center;
    double best = 1e300;
    for (std::size_t b : boundary) {
      const auto& q = d.cell(b).center;
      const double dx = c[0] - q[0], dy = c[1] - q[1];
      best = std::min(best, dx * dx + dy * dy);
    }
    dist[i] = std::sqrt(best);
  });
  return dist;
}

namespace {

std::array<double, 4> bounding_box(const GridDomain& d) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& c : d.cells()) {
    x0 = std::min(x0, c.center[0]);
    x1 = std::max(x1, c.center[0]);
    y0 = std::min(y0, c.center[1]);
    y1 = std::max(y1, c.center[1]);
  }
  if (d.dim() == 1) {
    y0 = 0.0;
    y1 = 1.0;
  }
  return {x0, x1, y0, y1};
}

SampledFunction make_bump(std::shared_ptr<const GridDomain> dom, Rng& rng, bool at_anchor) {
  const GridDomain& d = *dom;
  const auto x0 = at_anchor ? d.anchor() : d.cell(rng.index(d.size())).center;
  const double rr = d.inscribed_radius();
  const double rho = rng.uniform(0.35, 0.65) * rr;
  const double amp = rng.uniform(0.5, 2.0);
  return SampledFunction::fill(dom, [&](std::array<double, 2> p) {
    const double dx = p[0] - x0[0], dy = d.dim() == 2 ? p[1] - x0[1] : 0.0;
    const double q = (dx * dx + dy * dy) / (rho * rho);
    return q >= 1.0 ? 0.0 : amp * (1.0 - q) * (1.0 - q);
  });
}

}  // namespace

std::vector<SampledFunction> make_battery(std::shared_ptr<const GridDomain> dom,
                                          std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("make_battery: empty battery requested");
  const GridDomain& d = *dom;
  Rng rng(seed);
  const auto [bx0, bx1, by0, by1] = bounding_box(d);
  const double ex = std::max(bx1 - bx0, 1e-12), ey = std::max(by1 - by0, 1e-12);
  std::vector<double> dist;  // filled lazily for the distance-power family

  std::vector<SampledFunction> out;
  out.reserve(count);
  for (std::size_t k = 0; out.size() < count; ++k) {
    switch (k % 6) {
      case 0: {  // affine
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double ax = std::cos(theta), ay = d.dim() == 2 ? std::sin(theta) : 0.0;
        const double scale = rng.uniform(0.5, 2.0);
        const auto anchor = d.anchor();
        out.push_back(SampledFunction::fill(dom, [&](std::array<double, 2> p) {
          return scale * (ax * (p[0] - anchor[0]) + ay * (p[1] - anchor[1]));
        }));
        break;
      }
      case 1:
        out.push_back(make_bump(dom, rng, out.size() % 2 == 0));
        break;
      case 2: {  // tensor sinusoid
        const int kx = 1 + static_cast<int>(rng.index(3));
        const int ky = 1 + static_cast<int>(rng.index(3));
        const double amp = rng.uniform(0.5, 1.5);
        out.push_back(SampledFunction::fill(dom, [&](std::array<double, 2> p) {
          const double u = (p[0] - bx0) / ex, v = (p[1] - by0) / ey;
          double val = std::sin(std::numbers::pi * kx * u);
          if (d.dim() == 2) val *= std::sin(std::numbers::pi * ky * v);
          return amp * val;
        }));
        break;
      }
      case 3: {  // distance-to-boundary power
        if (dist.empty()) dist = boundary_distance(d);
        static constexpr double kGammas[3] = {0.5, 1.0, 2.0};
        const double gamma = kGammas[(k / 6) % 3];
        const double amp = rng.uniform(0.5, 1.5);
        std::vector<double> vals(d.size());
        par::run(d.size(), [&](std::size_t i) { vals[i] = amp * std::pow(dist[i], gamma); });
        out.emplace_back(dom, std::move(vals));
        break;
      }
      case 4: {  // low-frequency Fourier sum, seeded coefficients
        struct Term {
          int kx, ky;
          double c, phase;
        };
        std::vector<Term> terms;
        for (int kx2 = 0; kx2 <= 3; ++kx2)
          for (int ky2 = 0; ky2 <= (d.dim() == 2 ? 3 : 0); ++ky2) {
            if (kx2 == 0 && ky2 == 0) continue;
            terms.push_back({kx2, ky2, rng.normal() / (1.0 + kx2 * kx2 + ky2 * ky2),
                             rng.uniform(0.0, 2.0 * std::numbers::pi)});
          }
        out.push_back(SampledFunction::fill(dom, [&, terms](std::array<double, 2> p) {
          const double u = (p[0] - bx0) / ex, v = (p[1] - by0) / ey;
          double acc = 0.0;
          for (const auto& tm : terms)
            acc += tm.c * std::cos(std::numbers::pi * (tm.kx * u + tm.ky * v) + tm.phase);
          return acc;
        }));
        break;
      }
      case 5: {  // radial Hardy-type test function
        const double support = 0.9 * d.sigma();
        if (support > 1e-6) {
          StepFunction g = random_step(rng, 4, 2.0, support);
          out.push_back(radial_test_function(g, dom));
        } else {
          out.push_back(make_bump(dom, rng, true));
        }
        break;
      }
    }
  }
  return out;
}

std::vector<SampledFunction> make_bump_battery(std::shared_ptr<const GridDomain> dom,
                                               std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SampledFunction> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(make_bump(dom, rng, true));
  return out;
}

}  // namespace rearr
