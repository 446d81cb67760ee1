#pragma once

#include <string>

#include "swe/errors.hpp"

namespace swe {

// Uniform 1D mesh. Cell i spans [x_lo + i*dx, x_lo + (i+1)*dx), i = 0..n_cells-1.
// Three ghost layers suffice for the 5-cell reconstruction stencil at every
// face, including the reconstruction inside the first ghost cell that supplies
// the outer trace of each boundary face.
struct Grid1D {
  double x_lo = 0.0;
  double x_hi = 1.0;
  int n_cells = 0;
  double dx = 0.0;
  static constexpr int n_ghost = 3;

  double center(int i) const { return x_lo + (i + 0.5) * dx; }
  double face(int f) const { return x_lo + f * dx; }
  double length() const { return x_hi - x_lo; }
};

inline Grid1D build_grid_1d(double x_lo, double x_hi, int n_cells) {
  if (!(x_hi > x_lo))
    throw ConfigError("grid: domain [" + std::to_string(x_lo) + ", " +
                      std::to_string(x_hi) + "] is degenerate");
  if (n_cells < 10)
    throw ConfigError("grid: need at least 10 cells, got " +
                      std::to_string(n_cells));
  Grid1D g;
  g.x_lo = x_lo;
  g.x_hi = x_hi;
  g.n_cells = n_cells;
  g.dx = (x_hi - x_lo) / n_cells;
  return g;
}

// Tensor-product uniform 2D mesh; both axes satisfy the Grid1D invariants.
struct Grid2D {
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;
  static constexpr int n_ghost = 3;

  double xc(int i) const { return x_lo + (i + 0.5) * dx; }
  double yc(int j) const { return y_lo + (j + 0.5) * dy; }
  double xface(int f) const { return x_lo + f * dx; }
  double yface(int f) const { return y_lo + f * dy; }
};

inline Grid2D build_grid_2d(double x_lo, double x_hi, int nx, double y_lo,
                            double y_hi, int ny) {
  Grid1D gx = build_grid_1d(x_lo, x_hi, nx);
  Grid1D gy = build_grid_1d(y_lo, y_hi, ny);
  Grid2D g;
  g.x_lo = gx.x_lo;
  g.x_hi = gx.x_hi;
  g.y_lo = gy.x_lo;
  g.y_hi = gy.x_hi;
  g.nx = nx;
  g.ny = ny;
  g.dx = gx.dx;
  g.dy = gy.dx;
  return g;
}

}  // namespace swe
