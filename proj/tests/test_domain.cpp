#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <vector>

#include "rearr/battery.hpp"
#include "rearr/io.hpp"
#include "rearr/sampled.hpp"
#include "test_util.hpp"

using namespace rearr;

namespace {

double total_measure(const GridDomain& d) {
  double acc = 0.0;
  for (const auto& c : d.cells()) acc += c.measure;
  return acc;
}

// measure{f >= x} and measure{f <= x} by direct enumeration
double measure_ge(const SampledFunction& f, double x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] >= x) acc += f.domain().cell(i).measure;
  return acc;
}
double measure_le(const SampledFunction& f, double x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] <= x) acc += f.domain().cell(i).measure;
  return acc;
}

}  // namespace

TEST_CASE("interval and square grids have uniform measures") {
  auto interval = GridDomain::make(Shape::interval, 100);
  REQUIRE(interval->size() == 100);
  for (const auto& c : interval->cells()) CHECK(c.measure == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(std::abs(total_measure(*interval) - 1.0) < 1e-10);

  auto square = GridDomain::make(Shape::square, 64);
  REQUIRE(square->size() == 64 * 64);
  for (std::size_t i : {std::size_t{0}, square->size() - 1})
    CHECK(square->cell(i).measure == doctest::Approx(1.0 / 4096).epsilon(1e-12));
  CHECK(std::abs(total_measure(*square) - 1.0) < 1e-10);
  CHECK(square->lattice_full());
}

TEST_CASE("disk, cusp and s_john grids normalize to measure 1") {
  for (auto dom : {GridDomain::make(Shape::disk, 64), GridDomain::make(Shape::beta_cusp, 64, 2.0),
                   GridDomain::make(Shape::s_john, 64, 1.5)}) {
    CHECK(std::abs(total_measure(*dom) - 1.0) < 1e-10);
    CHECK(dom->sigma() > 0.0);
    CHECK(dom->sigma() <= 1.0);
    CHECK_FALSE(dom->lattice_full());
  }
  // the disk is its own inscribed ball
  CHECK(GridDomain::make(Shape::disk, 64)->sigma() == doctest::Approx(1.0).epsilon(1e-12));
  // square: inscribed disk of radius 1/2 has measure pi/4
  CHECK(GridDomain::make(Shape::square, 128)->sigma() ==
        doctest::Approx(std::numbers::pi / 4).epsilon(0.02));
}

TEST_CASE("beta cusp covers the area integral before normalization") {
  // raw covered area ~ int_0^1 2 x^beta dx = 2/(beta+1)
  auto dom = GridDomain::make(Shape::beta_cusp, 128, 2.0);
  const double h = dom->spacing();
  const double raw = static_cast<double>(dom->size()) * h * h;
  CHECK(raw == doctest::Approx(2.0 / 3.0).epsilon(0.03));
}

TEST_CASE("make_domain rejects bad parameters") {
  CHECK_THROWS(GridDomain::make(Shape::interval, 4));
  CHECK_THROWS(GridDomain::make(Shape::beta_cusp, 64, 0.5));
  CHECK_THROWS(GridDomain::make(Shape::s_john, 64, 1.0));
  CHECK_THROWS(shape_from_name("pentagon"));
}

TEST_CASE("adjacency is symmetric with positive spacing") {
  for (auto dom : {GridDomain::make(Shape::disk, 32), GridDomain::make(Shape::s_john, 32, 1.5)}) {
    CHECK(dom->spacing() > 0.0);
    for (std::size_t i = 0; i < dom->size(); ++i)
      for (int axis = 0; axis < dom->dim(); ++axis)
        for (int dir = 0; dir < 2; ++dir) {
          const int j = dom->neighbor(i, axis, dir);
          if (j >= 0)
            CHECK(dom->neighbor(static_cast<std::size_t>(j), axis, 1 - dir) ==
                  static_cast<int>(i));
        }
  }
}

TEST_CASE("gradient: constant, linear, affine 2d") {
  auto interval = GridDomain::make(Shape::interval, 128);
  const auto c = SampledFunction::fill(interval, [](std::array<double, 2>) { return 3.0; });
  const GradientResult gc = gradient_magnitude(c);
  for (std::size_t i = 0; i < gc.magnitude.size(); ++i) CHECK(gc.magnitude[i] == 0.0);

  const auto lin = SampledFunction::fill(interval, [](std::array<double, 2> p) { return p[0]; });
  const GradientResult gl = gradient_magnitude(lin);
  for (std::size_t i = 0; i < gl.magnitude.size(); ++i)
    CHECK(gl.magnitude[i] == doctest::Approx(1.0).epsilon(1e-10));

  auto square = GridDomain::make(Shape::square, 64);
  const auto aff =
      SampledFunction::fill(square, [](std::array<double, 2> p) { return p[0] + 2.0 * p[1]; });
  const GradientResult ga = gradient_magnitude(aff);
  for (std::size_t i = 0; i < ga.magnitude.size(); ++i)
    CHECK(ga.magnitude[i] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-8));
  CHECK(ga.isolated_axes == 0);
}

TEST_CASE("median: constants, symmetric functions, left endpoint of ties") {
  auto interval = GridDomain::make(Shape::interval, 101);  // odd count: 0 is attained
  const auto c = SampledFunction::fill(interval, [](std::array<double, 2>) { return 7.0; });
  CHECK(median_constant(c) == 7.0);

  const auto odd =
      SampledFunction::fill(interval, [](std::array<double, 2> p) { return p[0] - 0.5; });
  CHECK(median_constant(odd) == doctest::Approx(0.0).epsilon(1e-12));

  // two half-measure groups valued {0,1}: admissible interval [0,1], return 0
  auto two = GridDomain::make(Shape::interval, 8);
  std::vector<double> v{0, 0, 0, 0, 1, 1, 1, 1};
  const SampledFunction f2(two, v);
  CHECK(median_constant(f2) == 0.0);
}

TEST_CASE("median satisfies both halving conditions on random data") {
  auto dom = GridDomain::make(Shape::disk, 24);
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const auto f =
        SampledFunction::fill(dom, [&](std::array<double, 2>) { return rng.uniform(-2.0, 2.0); });
    const double r = median_constant(f);
    CHECK(measure_ge(f, r) >= 0.5 - 1e-9);
    CHECK(measure_le(f, r) >= 0.5 - 1e-9);
  }
}

TEST_CASE("truncate: clamp cases and errors") {
  auto dom = GridDomain::make(Shape::interval, 8);
  const SampledFunction f(dom, {0.5, 1.5, 3.0, 0.0, 2.0, 1.0, 0.25, 5.0});
  const SampledFunction tr = truncate(f, 1.0, 2.0);
  CHECK(tr[0] == 0.0);
  CHECK(tr[1] == 0.5);
  CHECK(tr[2] == 1.0);
  CHECK(tr[3] == 0.0);
  CHECK(tr[4] == 1.0);
  CHECK(tr[5] == 0.0);  // f == t1 maps to 0
  CHECK(tr[7] == 1.0);
  CHECK_THROWS(truncate(f, 2.0, 1.0));
  CHECK_THROWS(truncate(f, 0.0, 1.0));
  const SampledFunction neg(dom, {-1, 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS(truncate(neg, 1.0, 2.0));
  // f below t1 everywhere -> identically zero
  const SampledFunction small(dom, {0.1, 0.2, 0.3, 0.1, 0.2, 0.3, 0.1, 0.2});
  const SampledFunction z = truncate(small, 0.5, 1.0);
  for (std::size_t i = 0; i < z.size(); ++i) CHECK(z[i] == 0.0);
}

TEST_CASE("truncation layer-cake identity is exact on dyadic data") {
  auto dom = GridDomain::make(Shape::square, 16);
  Rng rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    // dyadic values keep every telescoping sum bit-exact
    std::vector<double> vals(dom->size());
    for (auto& v : vals) v = static_cast<double>(rng.index(1 << 20)) * 0x1.0p-20 * 4.0;
    const SampledFunction f(dom, vals);
    std::set<long> cutset;
    while (cutset.size() < 5) cutset.insert(1 + static_cast<long>(rng.index((1 << 22) - 1)));
    std::vector<double> cuts{0.0};
    for (long c : cutset) cuts.push_back(static_cast<double>(c) * 0x1.0p-20);
    cuts.push_back(4.0 + 1.0);  // beyond max f
    std::vector<double> acc(dom->size(), 0.0);
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      if (cuts[j] == 0.0) {
        // bottom layer min(f, t) is the t1 -> 0 limit, added directly
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += std::min(f[i], cuts[j + 1]);
      } else {
        const SampledFunction tr = truncate(f, cuts[j], cuts[j + 1]);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += tr[i];
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) CHECK(acc[i] == f[i]);
  }
}

TEST_CASE("rearrange_sampled: indicator, constant, brute-force oracle") {
  auto dom = GridDomain::make(Shape::interval, 10);
  std::vector<double> v(10, 0.0);
  v[2] = v[5] = v[7] = 1.0;  // measure 0.3
  const MonotoneStep r = rearrange_sampled(SampledFunction(dom, v));
  CHECK(r.value_at(0.2) == 1.0);
  CHECK(r.value_at(0.3) == 1.0);
  CHECK(r.value_at(0.31) == 0.0);

  const auto c = SampledFunction::fill(dom, [](std::array<double, 2>) { return -2.0; });
  const MonotoneStep rc = rearrange_sampled(c);
  for (double t : {0.1, 0.5, 1.0}) CHECK(rc.value_at(t) == 2.0);

  Rng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> vals(10);
    for (auto& x : vals) x = rng.uniform(-3.0, 3.0);
    const MonotoneStep m = rearrange_sampled(SampledFunction(dom, vals));
    // brute force: sort |values| descending, uniform weights
    std::vector<double> sorted(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) sorted[i] = std::abs(vals[i]);
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<double>());
    REQUIRE(m.pieces() == sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      CHECK(m.values()[i] == sorted[i]);
      CHECK(m.breakpoints()[i + 1] ==
            doctest::Approx(0.1 * static_cast<double>(i + 1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("rearrange_sampled with explicit weights") {
  auto dom = GridDomain::make(Shape::interval, 8);
  std::vector<double> vals{3, 1, 4, 1, 5, 9, 2, 6};
  const SampledFunction f(dom, vals);
  std::vector<double> w{0.3, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
  const MonotoneStep m = rearrange_sampled(f, &w);
  CHECK(m.values()[0] == 9.0);
  CHECK(m.breakpoints()[1] == doctest::Approx(0.1));
  // the value-3 cell carries weight 0.3 and lands on (0.4, 0.7]
  CHECK(m.value_at(0.45) == 3.0);
  CHECK(m.value_at(0.7) == 3.0);
  CHECK(m.value_at(0.75) == 2.0);
  std::vector<double> bad{0.5, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
  CHECK_THROWS(rearrange_sampled(f, &bad));  // sums to 1.1
  std::vector<double> neg{0.4, 0.2, 0.1, 0.1, 0.1, 0.1, 0.1, -0.1};
  CHECK_THROWS(rearrange_sampled(f, &neg));
}

TEST_CASE("rearrange_sampled is invariant under equal-weight permutations") {
  auto dom = GridDomain::make(Shape::square, 12);
  Rng rng(21);
  std::vector<double> vals(dom->size());
  for (auto& v : vals) v = rng.uniform(-1.0, 1.0);
  const MonotoneStep a = rearrange_sampled(SampledFunction(dom, vals));
  std::vector<double> shuffled = vals;
  for (std::size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[rng.index(i)]);
  const MonotoneStep b = rearrange_sampled(SampledFunction(dom, shuffled));
  for (std::size_t i = 0; i < a.pieces(); ++i) CHECK(a.values()[i] == b.values()[i]);
}

TEST_CASE("mean value: constant, indicator, pairwise-summation oracle") {
  auto dom = GridDomain::make(Shape::interval, 10);
  const auto c = SampledFunction::fill(dom, [](std::array<double, 2>) { return 4.5; });
  CHECK(mean_value(c) == doctest::Approx(4.5).epsilon(1e-14));
  std::vector<double> v(10, 0.0);
  v[0] = v[4] = v[9] = 1.0;
  CHECK(mean_value(SampledFunction(dom, v)) == doctest::Approx(0.3).epsilon(1e-13));

  auto square = GridDomain::make(Shape::square, 32);
  Rng rng(2);
  const auto f =
      SampledFunction::fill(square, [&](std::array<double, 2>) { return rng.uniform(-5.0, 5.0); });
  std::vector<double> terms(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) terms[i] = f[i] * square->cell(i).measure;
  std::function<double(std::size_t, std::size_t)> pairwise =
      [&](std::size_t lo, std::size_t hi) -> double {
    if (hi - lo == 1) return terms[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise(lo, mid) + pairwise(mid, hi);
  };
  CHECK(std::abs(mean_value(f) - pairwise(0, terms.size())) < 1e-12);
}

TEST_CASE("median halving bound by level/constant enumeration") {
  // for w >= 0 with measure{w = 0} >= 1/2:
  //   measure{w >= t} <= 2 inf_c measure{|w - c| >= t/2}
  auto dom = GridDomain::make(Shape::interval, 64);
  Rng rng(19);
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<double> vals(dom->size(), 0.0);
    for (std::size_t i = 0; i < vals.size() / 2; ++i)
      vals[rng.index(vals.size())] = rng.uniform(0.0, 3.0);
    std::size_t zeros = 0;
    for (double v : vals) zeros += v == 0.0;
    if (zeros * 2 < vals.size()) continue;
    const SampledFunction w(dom, vals);
    std::vector<double> levels;
    for (double v : vals)
      if (v > 0.0) levels.push_back(v);
    std::vector<double> cands = vals;
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    const std::size_t base = cands.size();
    for (std::size_t i = 0; i + 1 < base; ++i)
      cands.push_back(0.5 * (cands[i] + cands[i + 1]));
    for (double t : levels) {
      double inf = 1.0;
      for (double c : cands) {
        double meas = 0.0;
        for (std::size_t i = 0; i < vals.size(); ++i)
          if (std::abs(vals[i] - c) >= t / 2.0) meas += dom->cell(i).measure;
        inf = std::min(inf, meas);
      }
      CHECK(measure_ge(w, t) <= 2.0 * inf + 1e-12);
    }
  }
}

TEST_CASE("splitting identity u + v and level sets") {
  auto dom = GridDomain::make(Shape::square, 12);
  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<double> vals(dom->size());
    for (auto& v : vals) v = rng.uniform(-2.0, 2.0);
    const SampledFunction f(dom, vals);
    const double r = median_constant(f);
    std::vector<double> u(vals.size()), w(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
      u[i] = vals[i] >= r ? vals[i] - r : 0.0;
      w[i] = vals[i] <= r ? r - vals[i] : 0.0;
    }
    for (std::size_t i = 0; i < vals.size(); ++i) CHECK(u[i] + w[i] == std::abs(vals[i] - r));
    // {beta > u+v >= alpha} = {beta > u >= alpha} U {beta > v >= alpha}
    for (auto [alpha, beta] : {std::pair{0.1, 0.5}, std::pair{0.25, 1.5}, std::pair{0.75, 2.0}}) {
      std::set<std::size_t> lhs, rhs;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        const double s = u[i] + w[i];
        if (s >= alpha && s < beta) lhs.insert(i);
        if ((u[i] >= alpha && u[i] < beta) || (w[i] >= alpha && w[i] < beta)) rhs.insert(i);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("boundary gradient falls back to one-sided differences") {
  auto dom = GridDomain::make(Shape::interval, 256);
  const auto f = SampledFunction::fill(dom, [](std::array<double, 2> p) { return p[0] * p[0]; });
  const GradientResult g = gradient_magnitude(f);
  // one-sided at the ends, first-order accurate; central in the interior
  CHECK(g.magnitude[0] == doctest::Approx(2.0 * dom->cell(0).center[0]).epsilon(0.6));
  CHECK(g.magnitude[128] == doctest::Approx(2.0 * dom->cell(128).center[0]).epsilon(1e-6));
  CHECK(g.isolated_axes == 0);
}

TEST_CASE("domain JSON round-trip is the identity") {
  auto dom = GridDomain::make(Shape::disk, 16);
  Rng rng(29);
  const auto f =
      SampledFunction::fill(dom, [&](std::array<double, 2>) { return rng.uniform(-1.0, 1.0); });
  const ordered_json j = sampled_to_json(f);
  const SampledFunction g = sampled_from_json(j);
  CHECK(sampled_to_json(g).dump() == j.dump());
}
