#ifndef REARR_PARALLEL_HPP
#define REARR_PARALLEL_HPP

#include <cstddef>
#include <vector>

// OpenMP kernel dispatch. Every parallel loop in the library is a pure map
// over disjoint indices, so the parallel and serial paths produce bitwise
// identical results; reductions are always done serially over an indexed
// buffer afterwards. set_enabled(false) forces the serial reference path
// (used by the tests and the benchmark).
namespace rearr::par {

bool enabled() noexcept;
void set_enabled(bool on) noexcept;

// Loops shorter than this stay serial; OpenMP region setup would dominate.
inline constexpr std::size_t kMinParallel = 4096;

template <class F>
void run(std::size_t n, F&& body) {
  if (enabled() && n >= kMinParallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

// Serial twin, kept for reference comparisons regardless of the toggle.
template <class F>
void run_serial(std::size_t n, F&& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// Deterministic reduction: terms are accumulated in fixed 4096-element
// blocks and the block partials summed in index order, so the result is
// bitwise identical whether or not the blocks run concurrently.
template <class F>
double blocked_sum(std::size_t n, F&& term) {
  constexpr std::size_t kBlock = 4096;
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  if (nblocks <= 1) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += term(i);
    return acc;
  }
  std::vector<double> partial(nblocks, 0.0);
  run(nblocks, [&](std::size_t b) {
    const std::size_t lo = b * kBlock, hi = lo + kBlock < n ? lo + kBlock : n;
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[b] = acc;
  });
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

}  // namespace rearr::par

#endif
