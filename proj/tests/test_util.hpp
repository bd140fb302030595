#ifndef REARR_TEST_UTIL_HPP
#define REARR_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "rearr/battery.hpp"
#include "rearr/step_function.hpp"

namespace rearr::testutil {

// Random step with breakpoints on the uniform 1e-6 grid, so dense
// Riemann-sum oracles with 1e6 aligned cells are exact for step data.
inline StepFunction random_grid_step(Rng& rng, std::size_t pieces, double vmax,
                                     bool nonneg = true) {
  constexpr double kGrid = 1e-6;
  constexpr long kCells = 1000000;
  std::set<long> cuts;
  while (cuts.size() + 1 < pieces) {
    long c = 1 + static_cast<long>(rng.index(kCells - 1));
    cuts.insert(c);
  }
  std::vector<double> bp{0.0};
  for (long c : cuts) bp.push_back(static_cast<double>(c) * kGrid);
  bp.push_back(1.0);
  std::vector<double> vals(bp.size() - 1);
  for (auto& v : vals) {
    v = vmax * rng.unit();
    if (!nonneg && rng.unit() < 0.5) v = -v;
  }
  return StepFunction(std::move(bp), std::move(vals));
}

inline MonotoneStep random_grid_monotone(Rng& rng, std::size_t pieces, double vmax) {
  return rearrange_step(random_grid_step(rng, pieces, vmax));
}

// Midpoint Riemann prefix sums of fn over (0,1] with n aligned cells.
template <class F>
std::vector<double> riemann_prefix(const F& fn, std::size_t n) {
  std::vector<double> out(n + 1, 0.0);
  const double dt = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k + 1] = out[k] + fn((static_cast<double>(k) + 0.5) * dt) * dt;
  return out;
}

}  // namespace rearr::testutil

#endif
