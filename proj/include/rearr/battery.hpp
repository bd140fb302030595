#ifndef REARR_BATTERY_HPP
#define REARR_BATTERY_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "rearr/sampled.hpp"
#include "rearr/step_function.hpp"

namespace rearr {

/// Deterministic RNG wrapper: raw mt19937_64 words mapped to doubles
/// explicitly, so streams are reproducible independent of the standard
/// library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * unit(); }
  double normal();
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Nonnegative random step function on (0,1] with up to max_pieces pieces,
/// supported in (0, support].
StepFunction random_step(Rng& rng, std::size_t max_pieces, double vmax, double support = 1.0);
MonotoneStep random_monotone(Rng& rng, std::size_t max_pieces, double vmax);

/// Euclidean distance from each cell center to the nearest boundary cell
/// center (cells missing a lattice neighbor).
std::vector<double> boundary_distance(const GridDomain& d);

/// Named generators over a grid: affine, radial bumps, tensor sinusoids,
/// distance-to-boundary powers, low-frequency random Fourier sums and radial
/// Hardy-type test functions.  At least `count` distinct nonconstant
/// functions, reproducible from the seed.
std::vector<SampledFunction> make_battery(std::shared_ptr<const GridDomain> dom,
                                          std::size_t count, std::uint64_t seed);

/// The radial bump subset only (median 0 by construction: supported on less
/// than half the domain).
std::vector<SampledFunction> make_bump_battery(std::shared_ptr<const GridDomain> dom,
                                               std::size_t count, std::uint64_t seed);

}  // namespace rearr

#endif
