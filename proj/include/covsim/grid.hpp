#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <iosfwd>
#include <string>

namespace covsim {

/// Regular 2-D grid over a rectangular domain. Cell (ix, iy) has its center
/// at origin + ((ix + 0.5) * width / nx, (iy + 0.5) * height / ny); values are
/// stored row-major, one row per iy scan line.
struct GridSpec {
  double ox = 0.0;
  double oy = 0.0;
  double width = 0.0;
  double height = 0.0;
  int nx = 0;
  int ny = 0;

  double dx() const { return width / nx; }
  double dy() const { return height / ny; }
  double cell_area() const { return dx() * dy(); }
  int cells() const { return nx * ny; }
  int index(int ix, int iy) const { return iy * nx + ix; }

  Eigen::Vector2d cell_center(int ix, int iy) const {
    return {ox + (ix + 0.5) * dx(), oy + (iy + 0.5) * dy()};
  }

  bool valid() const {
    return nx >= 1 && ny >= 1 && width > 0.0 && height > 0.0 &&
           std::isfinite(ox) && std::isfinite(oy) && std::isfinite(width) &&
           std::isfinite(height);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Scalar field sampled at the cell centers of a GridSpec.
struct ScalarField {
  GridSpec spec;
  Eigen::ArrayXd values;

  static ScalarField zeros(const GridSpec& spec);
  static ScalarField constant(const GridSpec& spec, double value);

  double& at(int ix, int iy) { return values[spec.index(ix, iy)]; }
  double at(int ix, int iy) const { return values[spec.index(ix, iy)]; }

  bool compatible_with(const ScalarField& other) const {
    return spec == other.spec;
  }
};

/// Penalty f(e) = max{0, e}^p with integer exponent p >= 2.
struct PenaltySpec {
  int exponent = 2;
};

/// Throws std::invalid_argument when the two fields live on different grids.
void require_compatible(const ScalarField& a, const ScalarField& b,
                        const char* op);

/// One exact step of the linear decay ODE with the source field held
/// constant: I' = e^{delta*dt} I + d (e^{delta*dt} - 1)/delta, or I + d*dt
/// when delta == 0. Requires delta <= 0 and dt > 0.
ScalarField decay_accumulate(const ScalarField& info, const ScalarField& d,
                             double delta, double dt);

/// Required sensing level for persistent coverage: max{0, C* - I} per cell.
ScalarField tdf_persistent(const ScalarField& info, double c_star);

/// Sensing error field e = d_star - d (may be negative where over-covered).
ScalarField tef(const ScalarField& d_star, const ScalarField& d);

double penalty_value(double e, const PenaltySpec& penalty);
double penalty_derivative(double e, const PenaltySpec& penalty);

/// Weighted error integral over the grid (midpoint quadrature):
/// sum over cells of f(e) * sigma * cell_area.
double error_index(const ScalarField& e, const ScalarField& sigma,
                   const PenaltySpec& penalty);

/// Text dump: `field <name> nx ny ox oy w h` header followed by the values,
/// row-major, full double precision.
void dump_field(std::ostream& os, const std::string& name,
                const ScalarField& field);
ScalarField load_field(std::istream& is, std::string* name = nullptr);

/// Visits every cell whose center lies within `radius` of `center`.
/// fn(ix, iy, cell_center) is called in row-major order.
template <typename Fn>
void for_each_cell_in_disc(const GridSpec& spec, const Eigen::Vector2d& center,
                           double radius, Fn&& fn) {
  const double r2 = radius * radius;
  int ix0 = static_cast<int>(std::ceil((center.x() - radius - spec.ox) / spec.dx() - 0.5));
  int ix1 = static_cast<int>(std::floor((center.x() + radius - spec.ox) / spec.dx() - 0.5));
  int iy0 = static_cast<int>(std::ceil((center.y() - radius - spec.oy) / spec.dy() - 0.5));
  int iy1 = static_cast<int>(std::floor((center.y() + radius - spec.oy) / spec.dy() - 0.5));
  ix0 = std::max(ix0, 0);
  iy0 = std::max(iy0, 0);
  ix1 = std::min(ix1, spec.nx - 1);
  iy1 = std::min(iy1, spec.ny - 1);
  for (int iy = iy0; iy <= iy1; ++iy) {
    for (int ix = ix0; ix <= ix1; ++ix) {
      const Eigen::Vector2d q = spec.cell_center(ix, iy);
      if ((q - center).squaredNorm() <= r2) {
        fn(ix, iy, q);
      }
    }
  }
}

}  // namespace covsim
