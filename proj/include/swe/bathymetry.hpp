#pragma once

#include <array>
#include <functional>
#include <vector>

#include "swe/boundary.hpp"
#include "swe/grid.hpp"
#include "swe/quadrature.hpp"
#include "swe/recon2d.hpp"
#include "swe/weno_ao.hpp"

namespace swe {

// Per-cell average of an analytic function via 5-point Gauss-Legendre
// (degree-9 exact). Cases with discontinuous data supply an exact interval
// average instead; see avg_fn_1d below.
inline double cell_average(const std::function<double(double)>& f, double x0,
                           double x1) {
  const double mid = 0.5 * (x0 + x1), len = x1 - x0;
  double acc = 0.0;
  for (int q = 0; q < 5; ++q)
    acc += QuadratureTables::gauss5_weights[q] *
           f(mid + QuadratureTables::gauss5_nodes[q] * len);
  return acc;
}

inline std::vector<double> cell_average_scalar(
    const std::function<double(double)>& f, const Grid1D& grid) {
  std::vector<double> avg(static_cast<size_t>(grid.n_cells));
  for (int i = 0; i < grid.n_cells; ++i)
    avg[static_cast<size_t>(i)] = cell_average(f, grid.face(i), grid.face(i + 1));
  return avg;
}

// Average over [x0, x1]: either the quadrature default or a case-supplied
// exact rule for piecewise data.
using AvgFn1D = std::function<double(double, double)>;

inline AvgFn1D avg_fn_1d(std::function<double(double)> f) {
  return [f = std::move(f)](double x0, double x1) {
    return cell_average(f, x0, x1);
  };
}

inline double cell_average_2d(const std::function<double(double, double)>& f,
                              double x0, double x1, double y0, double y1) {
  const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
  const double lx = x1 - x0, ly = y1 - y0;
  double acc = 0.0;
  for (int qy = 0; qy < 5; ++qy) {
    const double y = ym + QuadratureTables::gauss5_nodes[qy] * ly;
    double row = 0.0;
    for (int qx = 0; qx < 5; ++qx)
      row += QuadratureTables::gauss5_weights[qx] *
             f(xm + QuadratureTables::gauss5_nodes[qx] * lx, y);
    acc += QuadratureTables::gauss5_weights[qy] * row;
  }
  return acc;
}

using AvgFn2D = std::function<double(double, double, double, double)>;

inline AvgFn2D avg_fn_2d(std::function<double(double, double)> f) {
  return [f = std::move(f)](double x0, double x1, double y0, double y1) {
    return cell_average_2d(f, x0, x1, y0, y1);
  };
}

// One-time precomputation of every bottom-topography quantity the scheme
// needs: extended cell averages, per-cell face traces (covering the ghost
// ring so both sides of the boundary faces are available), and b_x at the
// four Gauss-Lobatto source nodes of each interior cell.
struct Bathymetry1D {
  int n = 0;
  std::vector<double> b_ext;                    // n + 6 cell averages
  std::vector<double> b_left, b_right;          // traces of cells -1..n (n+2)
  std::vector<std::array<double, 4>> bx_lobatto;  // interior cells only

  double b_bar(int i) const { return b_ext[static_cast<size_t>(i + 3)]; }
  // Traces at face f = i+1/2 (f = 0..n): minus from cell f-1, plus from cell f.
  double face_minus(int f) const { return b_right[static_cast<size_t>(f)]; }
  double face_plus(int f) const { return b_left[static_cast<size_t>(f + 1)]; }
  // Per-cell access for ring cells i = -1..n.
  double cell_left(int i) const { return b_left[static_cast<size_t>(i + 1)]; }
  double cell_right(int i) const { return b_right[static_cast<size_t>(i + 1)]; }
};

inline Bathymetry1D precompute_bathymetry_1d(const std::vector<double>& b_bar,
                                             const Grid1D& grid,
                                             const BoundaryCondition1D& bc,
                                             const WenoAoConfig& cfg = {}) {
  constexpr int G = Grid1D::n_ghost;
  const int n = grid.n_cells;
  Bathymetry1D out;
  out.n = n;
  out.b_ext.assign(static_cast<size_t>(n + 2 * G), 0.0);
  for (int i = 0; i < n; ++i) out.b_ext[static_cast<size_t>(i + G)] = b_bar[static_cast<size_t>(i)];
  apply_boundary_scalar(out.b_ext, n, bc);

  out.b_left.assign(static_cast<size_t>(n + 2), 0.0);
  out.b_right.assign(static_cast<size_t>(n + 2), 0.0);
  out.bx_lobatto.assign(static_cast<size_t>(n), {});
  for (int i = -1; i <= n; ++i) {
    const ReconPoly P = weno_ao_blend(&out.b_ext[static_cast<size_t>(i + G - 2)], cfg);
    out.b_left[static_cast<size_t>(i + 1)] = P.eval(-0.5);
    out.b_right[static_cast<size_t>(i + 1)] = P.eval(0.5);
    if (i >= 0 && i < n) {
      for (int l = 0; l < 4; ++l)
        out.bx_lobatto[static_cast<size_t>(i)][static_cast<size_t>(l)] =
            P.deval(QuadratureTables::lobatto4_nodes[static_cast<size_t>(l)]) / grid.dx;
    }
  }
  return out;
}

// 2D bottom tables: face-node traces at the three Gauss points of every x- and
// y-face plus b_x at the (x^l, yhat^k) nodes and b_y at the (xhat^k, y^l)
// nodes. All reconstructions happen once, at setup.
struct Bathymetry2D {
  int nx = 0, ny = 0;
  std::vector<double> b_ext;                    // (nx+6)*(ny+6)
  std::vector<double> xb_m, xb_p;               // x-face node traces
  std::vector<double> yb_m, yb_p;               // y-face node traces
  std::vector<double> bx_src, by_src;           // 12 nodes per interior cell

  double b_bar(int i, int j) const {
    return b_ext[static_cast<size_t>(j + 3) * (nx + 6) + (i + 3)];
  }
};

inline Bathymetry2D precompute_bathymetry_2d(const std::vector<double>& b_bar,
                                             const Grid2D& grid,
                                             const BoundaryCondition2D& bc,
                                             const WenoAoConfig& cfg = {}) {
  constexpr int G = Grid2D::n_ghost;
  const int nx = grid.nx, ny = grid.ny;
  const int P = nx + 2 * G;
  Bathymetry2D out;
  out.nx = nx;
  out.ny = ny;
  out.b_ext.assign(static_cast<size_t>(P) * (ny + 2 * G), 0.0);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      out.b_ext[static_cast<size_t>(j + G) * P + (i + G)] =
          b_bar[static_cast<size_t>(j) * nx + i];
  apply_boundary_scalar_2d(out.b_ext, nx, ny, bc);

  const size_t nxf = static_cast<size_t>(nx + 1) * ny * 3;
  const size_t nyf = static_cast<size_t>(ny + 1) * nx * 3;
  const size_t nsrc = static_cast<size_t>(nx) * ny * 12;
  out.xb_m.assign(nxf, 0.0);
  out.xb_p.assign(nxf, 0.0);
  out.yb_m.assign(nyf, 0.0);
  out.yb_p.assign(nyf, 0.0);
  out.bx_src.assign(nsrc, 0.0);
  out.by_src.assign(nsrc, 0.0);

  std::vector<double> Wm(static_cast<size_t>(nx + 1) * (ny + 4));
  std::vector<double> Wp(Wm.size());
  std::vector<double> gx(static_cast<size_t>(nx) * 3 * (ny + 4));
  detail::x_line_pass(out.b_ext.data(), nx, ny, cfg, Wm.data(), Wp.data(), gx.data());
  detail::xface_gauss_pass(Wm.data(), nx, ny, cfg, out.xb_m.data());
  detail::xface_gauss_pass(Wp.data(), nx, ny, cfg, out.xb_p.data());
  detail::src_lobatto_pass_y(gx.data(), nx, ny, cfg, true, 1.0 / grid.dy,
                             out.by_src.data());

  std::vector<double> Vm(static_cast<size_t>(ny + 1) * (nx + 4));
  std::vector<double> Vp(Vm.size());
  std::vector<double> gy(static_cast<size_t>(ny) * 3 * (nx + 4));
  detail::y_line_pass(out.b_ext.data(), nx, ny, cfg, Vm.data(), Vp.data(), gy.data());
  detail::yface_gauss_pass(Vm.data(), nx, ny, cfg, out.yb_m.data());
  detail::yface_gauss_pass(Vp.data(), nx, ny, cfg, out.yb_p.data());
  detail::src_lobatto_pass_x(gy.data(), nx, ny, cfg, true, 1.0 / grid.dx,
                             out.bx_src.data());
  return out;
}

}  // namespace swe
