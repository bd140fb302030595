#ifndef REARR_GRID_DOMAIN_HPP
#define REARR_GRID_DOMAIN_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rearr {

enum class Shape { interval, square, disk, beta_cusp, s_john };

Shape shape_from_name(const std::string& name);
std::string shape_name(Shape s);

/// Uniform-lattice discretization of a reference shape with total measure
/// renormalized to 1.  Cells are lattice squares (segments in 1d) identified
/// by their centers; adjacency links nearest lattice neighbors along each
/// axis with constant spacing.  sigma is the measure of the cell set inside
/// the largest shape-inscribed ball centered at the anchor point.
class GridDomain {
 public:
  struct Cell {
    std::array<double, 2> center{0.0, 0.0};
    double measure = 0.0;
  };

  static std::shared_ptr<const GridDomain> make(Shape shape, int resolution, double param = 0.0);
  // Unit-measure ball grid: centered interval for dim 1, disk for dim 2.
  static std::shared_ptr<const GridDomain> ball(int dim, int resolution);

  int dim() const noexcept { return dim_; }
  Shape shape() const noexcept { return shape_; }
  double param() const noexcept { return param_; }
  int resolution() const noexcept { return resolution_; }
  double spacing() const noexcept { return spacing_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  // Neighbor cell index along axis (0 or 1), dir 0 = minus / 1 = plus; -1 if
  // the neighbor lattice site is not part of the domain.
  int neighbor(std::size_t i, int axis, int dir) const {
    return nbr_[i][static_cast<std::size_t>(2 * axis + dir)];
  }

  std::array<double, 2> anchor() const noexcept { return anchor_; }
  double inscribed_radius() const noexcept { return r_max_; }
  double sigma() const noexcept { return sigma_; }

  // Cell containing a point, -1 if outside the discretized domain.
  int cell_at(std::array<double, 2> p) const;
  // Lattice coordinates of a cell and direct lattice lookup (for shift sweeps).
  std::array<int, 2> lattice_coords(std::size_t i) const;
  int cell_at_lattice(int ix, int iy) const;
  std::array<int, 2> lattice_extent() const { return {nx_, ny_}; }
  // Every lattice site occupied (box-like domains); segment containment then
  // reduces to endpoint bounds checks.
  bool lattice_full() const noexcept { return lattice_full_; }

  // Whole-segment containment, sampled at half-spacing resolution.
  bool segment_inside(std::array<double, 2> a, std::array<double, 2> b) const;

  bool is_boundary_cell(std::size_t i) const;

 private:
  GridDomain() = default;
  void build_lattice_index();
  void finalize(std::array<double, 2> anchor, double r_max);

  int dim_ = 2;
  Shape shape_ = Shape::square;
  double param_ = 0.0;
  int resolution_ = 0;
  double spacing_ = 0.0;
  std::vector<Cell> cells_;
  std::vector<std::array<std::int32_t, 4>> nbr_;
  std::array<double, 2> origin_{0.0, 0.0};
  int nx_ = 0, ny_ = 1;
  std::vector<std::int32_t> lattice_;  // cell id per lattice site, -1 empty
  std::array<double, 2> anchor_{0.0, 0.0};
  double r_max_ = 0.0;
  double sigma_ = 0.0;
  bool lattice_full_ = false;
};

}  // namespace rearr

#endif
