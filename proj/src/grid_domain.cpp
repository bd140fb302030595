#include "rearr/grid_domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rearr {

namespace {

double dist2(std::array<double, 2> a, std::array<double, 2> b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

}  // namespace

Shape shape_from_name(const std::string& name) {
  if (name == "interval") return Shape::interval;
  if (name == "square") return Shape::square;
  if (name == "disk") return Shape::disk;
  if (name == "beta_cusp") return Shape::beta_cusp;
  if (name == "s_john") return Shape::s_john;
  throw std::invalid_argument("unknown shape '" + name + "'");
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::interval: return "interval";
    case Shape::square: return "square";
    case Shape::disk: return "disk";
    case Shape::beta_cusp: return "beta_cusp";
    case Shape::s_john: return "s_john";
  }
  return "?";
}

void GridDomain::build_lattice_index() {
  lattice_.assign(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_), -1);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const auto& p = cells_[c].center;
    const int ix = static_cast<int>(std::floor((p[0] - origin_[0]) / spacing_));
    const int iy = dim_ == 2 ? static_cast<int>(std::floor((p[1] - origin_[1]) / spacing_)) : 0;
    lattice_[static_cast<std::size_t>(iy) * nx_ + ix] = static_cast<std::int32_t>(c);
  }
  lattice_full_ =
      cells_.size() == static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_);
  nbr_.assign(cells_.size(), {-1, -1, -1, -1});
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const auto [ix, iy] = lattice_coords(c);
    nbr_[c][0] = static_cast<std::int32_t>(cell_at_lattice(ix - 1, iy));
    nbr_[c][1] = static_cast<std::int32_t>(cell_at_lattice(ix + 1, iy));
    if (dim_ == 2) {
      nbr_[c][2] = static_cast<std::int32_t>(cell_at_lattice(ix, iy - 1));
      nbr_[c][3] = static_cast<std::int32_t>(cell_at_lattice(ix, iy + 1));
    }
  }
}

void GridDomain::finalize(std::array<double, 2> anchor, double r_max) {
  double total = 0.0;
  for (const auto& c : cells_) total += c.measure;
  if (!(total > 0.0)) throw std::invalid_argument("GridDomain: empty discretization");
  for (auto& c : cells_) c.measure /= total;
  build_lattice_index();
  anchor_ = anchor;
  r_max_ = r_max;
  double sig = 0.0;
  const double r2 = r_max * r_max * (1.0 + 1e-12);
  for (const auto& c : cells_)
    if (dist2(c.center, anchor) <= r2) sig += c.measure;
  sigma_ = std::min(sig, 1.0);
}

std::array<int, 2> GridDomain::lattice_coords(std::size_t i) const {
  const auto& p = cells_[i].center;
  const int ix = static_cast<int>(std::floor((p[0] - origin_[0]) / spacing_));
  const int iy = dim_ == 2 ? static_cast<int>(std::floor((p[1] - origin_[1]) / spacing_)) : 0;
  return {ix, iy};
}

int GridDomain::cell_at_lattice(int ix, int iy) const {
  if (ix < 0 || ix >= nx_ || iy < 0 || iy >= ny_) return -1;
  return lattice_[static_cast<std::size_t>(iy) * nx_ + ix];
}

int GridDomain::cell_at(std::array<double, 2> p) const {
  const int ix = static_cast<int>(std::floor((p[0] - origin_[0]) / spacing_));
  const int iy = dim_ == 2 ? static_cast<int>(std::floor((p[1] - origin_[1]) / spacing_)) : 0;
  return cell_at_lattice(ix, iy);
}

bool GridDomain::segment_inside(std::array<double, 2> a, std::array<double, 2> b) const {
  const double len = std::sqrt(dist2(a, b));
  const int steps = std::max(1, static_cast<int>(std::ceil(len / (0.5 * spacing_))));
  for (int k = 0; k <= steps; ++k) {
    const double u = static_cast<double>(k) / steps;
    if (cell_at({a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1])}) < 0) return false;
  }
  return true;
}

bool GridDomain::is_boundary_cell(std::size_t i) const {
  for (int axis = 0; axis < dim_; ++axis)
    for (int dir = 0; dir < 2; ++dir)
      if (neighbor(i, axis, dir) < 0) return true;
  return false;
}

std::shared_ptr<const GridDomain> GridDomain::make(Shape shape, int resolution, double param) {
  if (resolution < 8) throw std::invalid_argument("make_domain: resolution must be >= 8");
  auto dom = std::shared_ptr<GridDomain>(new GridDomain());
  dom->shape_ = shape;
  dom->param_ = param;
  dom->resolution_ = resolution;
  const int R = resolution;

  switch (shape) {
    case Shape::interval: {
      dom->dim_ = 1;
      const double h = 1.0 / R;
      dom->spacing_ = h;
      dom->origin_ = {0.0, 0.0};
      dom->nx_ = R;
      dom->ny_ = 1;
      dom->cells_.resize(static_cast<std::size_t>(R));
      for (int i = 0; i < R; ++i)
        dom->cells_[static_cast<std::size_t>(i)] = {{(i + 0.5) * h, 0.0}, h};
      dom->finalize({0.5, 0.0}, 0.5);
      break;
    }
    case Shape::square: {
      dom->dim_ = 2;
      const double h = 1.0 / R;
      dom->spacing_ = h;
      dom->origin_ = {0.0, 0.0};
      dom->nx_ = R;
      dom->ny_ = R;
      dom->cells_.reserve(static_cast<std::size_t>(R) * R);
      for (int j = 0; j < R; ++j)
        for (int i = 0; i < R; ++i)
          dom->cells_.push_back({{(i + 0.5) * h, (j + 0.5) * h}, h * h});
      dom->finalize({0.5, 0.5}, 0.5);
      break;
    }
    case Shape::disk: {
      dom->dim_ = 2;
      const double rd = 1.0 / std::sqrt(std::numbers::pi);
      const double h = 2.0 * rd / R;
      dom->spacing_ = h;
      dom->origin_ = {-rd, -rd};
      dom->nx_ = R;
      dom->ny_ = R;
      for (int j = 0; j < R; ++j)
        for (int i = 0; i < R; ++i) {
          const std::array<double, 2> c{-rd + (i + 0.5) * h, -rd + (j + 0.5) * h};
          if (c[0] * c[0] + c[1] * c[1] < rd * rd) dom->cells_.push_back({c, h * h});
        }
      dom->finalize({0.0, 0.0}, rd);
      break;
    }
    case Shape::beta_cusp: {
      if (!(param >= 1.0)) throw std::invalid_argument("beta_cusp: beta must be >= 1");
      dom->dim_ = 2;
      const double h = 1.0 / R;
      dom->spacing_ = h;
      dom->origin_ = {0.0, -1.0};
      dom->nx_ = R;
      dom->ny_ = 2 * R;
      for (int j = 0; j < 2 * R; ++j)
        for (int i = 0; i < R; ++i) {
          const std::array<double, 2> c{(i + 0.5) * h, -1.0 + (j + 0.5) * h};
          if (std::abs(c[1]) < std::pow(c[0], param)) dom->cells_.push_back({c, h * h});
        }
      // anchor in the thick part; nearest boundary is either x = 1 or the cusp curve
      const std::array<double, 2> anchor{0.75, 0.0};
      double rb = 1.0 - anchor[0];
      for (int k = 1; k <= 20000; ++k) {
        const double x = static_cast<double>(k) / 20000.0;
        rb = std::min(rb, std::sqrt(dist2(anchor, {x, std::pow(x, param)})));
      }
      dom->finalize(anchor, rb);
      break;
    }
    case Shape::s_john: {
      if (!(param > 1.0)) throw std::invalid_argument("s_john: s must be > 1");
      dom->dim_ = 2;
      // room of measure ~0.8 with a corridor below that tapers to a cusp tip;
      // half-width at height y in [-L,0] is w0*((L+y)/L)^s
      const double a = std::sqrt(0.8);
      const double L = 0.5, w0 = 0.2, xc = 0.5 * a;
      const double h = 1.0 / R;
      dom->spacing_ = h;
      dom->origin_ = {0.0, -L};
      dom->nx_ = static_cast<int>(std::ceil(a / h));
      dom->ny_ = static_cast<int>(std::ceil((a + L) / h));
      for (int j = 0; j < dom->ny_; ++j)
        for (int i = 0; i < dom->nx_; ++i) {
          const std::array<double, 2> c{(i + 0.5) * h, -L + (j + 0.5) * h};
          bool in = false;
          if (c[1] > 0.0)
            in = c[0] < a && c[1] < a;
          else
            in = std::abs(c[0] - xc) < w0 * std::pow((L + c[1]) / L, param);
          if (in) dom->cells_.push_back({c, h * h});
        }
      dom->finalize({xc, 0.5 * a}, 0.5 * a);
      break;
    }
  }
  return dom;
}

std::shared_ptr<const GridDomain> GridDomain::ball(int dim, int resolution) {
  if (dim == 2) return make(Shape::disk, resolution);
  if (dim != 1) throw std::invalid_argument("ball: dim must be 1 or 2");
  if (resolution < 8) throw std::invalid_argument("ball: resolution must be >= 8");
  auto dom = std::shared_ptr<GridDomain>(new GridDomain());
  dom->shape_ = Shape::interval;
  dom->dim_ = 1;
  dom->resolution_ = resolution;
  const double h = 1.0 / resolution;
  dom->spacing_ = h;
  dom->origin_ = {-0.5, 0.0};
  dom->nx_ = resolution;
  dom->ny_ = 1;
  dom->cells_.resize(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i)
    dom->cells_[static_cast<std::size_t>(i)] = {{-0.5 + (i + 0.5) * h, 0.0}, h};
  dom->finalize({0.0, 0.0}, 0.5);
  return dom;
}

}  // namespace rearr
