#pragma once

#include <vector>

#include "swe/parallel.hpp"
#include "swe/quadrature.hpp"
#include "swe/weno_ao.hpp"

namespace swe {

// Node-value indexing shared by the 2D solver and the 2D bathymetry tables.
// x-faces: f = 0..nx, rows j = 0..ny-1, Gauss node k = 0..2.
inline size_t xnode(int f, int j, int k, int ny) {
  return (static_cast<size_t>(f) * ny + j) * 3 + k;
}
// y-faces: columns i = 0..nx-1, g = 0..ny, node k.
inline size_t ynode(int i, int g, int k, int nx) {
  return (static_cast<size_t>(g) * nx + i) * 3 + k;
}
// Source nodes (x_i^l, yhat_j^k): 4 Lobatto x 3 Gauss per cell.
inline size_t snode1(int i, int j, int l, int k, int nx) {
  return (static_cast<size_t>(j) * nx + i) * 12 + static_cast<size_t>(l) * 3 + k;
}
// Source nodes (xhat_i^k, y_j^l): 3 Gauss x 4 Lobatto per cell.
inline size_t snode2(int i, int j, int k, int l, int nx) {
  return (static_cast<size_t>(j) * nx + i) * 12 + static_cast<size_t>(k) * 4 + l;
}

namespace detail {

// Dimension-by-dimension reconstruction passes. Pass 1 runs along one axis of
// the extended cell-average array and produces line averages (face traces or
// in-cell Gauss values that are still averaged over the other axis); pass 2
// reconstructs those along the remaining axis and evaluates at points. The
// outer pass always runs along the axis of the final point evaluation.

// Pass 1 along x. ext is (nx+6)*(ny+6) row-major with 3 ghosts. Covers rows
// j = -2..ny+1 (slot jr = j+2, R = ny+4 rows) and cells i = -1..nx; writes
// minus/plus line traces of faces f = 0..nx at Wm/Wp[f*R + jr], and, when g3
// is given, the three Gauss-x in-cell values for i = 0..nx-1 at
// g3[(i*3+k)*R + jr].
inline void x_line_pass(const double* ext, int nx, int ny,
                        const WenoAoConfig& cfg, double* Wm, double* Wp,
                        double* g3) {
  const int P = nx + 6, R = ny + 4;
  parallel_for(-2, ny + 2, [&](long j) {
    const size_t jr = static_cast<size_t>(j + 2);
    const double* row = ext + static_cast<size_t>(j + 3) * P;
    for (int i = -1; i <= nx; ++i) {
      const ReconPoly P5 = weno_ao_blend(row + (i + 1), cfg);
      // the right trace of cell i is the minus side of face i+1,
      // the left trace is the plus side of face i
      if (i + 1 <= nx) Wm[static_cast<size_t>(i + 1) * R + jr] = P5.eval(0.5);
      if (i >= 0) Wp[static_cast<size_t>(i) * R + jr] = P5.eval(-0.5);
      if (g3 && i >= 0 && i < nx) {
        for (int k = 0; k < 3; ++k)
          g3[(static_cast<size_t>(i) * 3 + k) * R + jr] =
              P5.eval(QuadratureTables::gauss3_nodes[static_cast<size_t>(k)]);
      }
    }
  }, 1);
}

// Pass 1 along y, mirror of x_line_pass. Covers columns i = -2..nx+1
// (slot ic = i+2, C = nx+4) and cells j = -1..ny; traces of faces g = 0..ny at
// Vm/Vp[g*C + ic], Gauss-y values for j = 0..ny-1 at g3[(j*3+k)*C + ic].
inline void y_line_pass(const double* ext, int nx, int ny,
                        const WenoAoConfig& cfg, double* Vm, double* Vp,
                        double* g3) {
  const int P = nx + 6, C = nx + 4;
  parallel_for(-2, nx + 2, [&](long i) {
    const size_t ic = static_cast<size_t>(i + 2);
    double col[5];
    for (int j = -1; j <= ny; ++j) {
      for (int s = 0; s < 5; ++s)
        col[s] = ext[static_cast<size_t>(j + 1 + s) * P + (i + 3)];
      const ReconPoly P5 = weno_ao_blend(col, cfg);
      if (j + 1 <= ny) Vm[static_cast<size_t>(j + 1) * C + ic] = P5.eval(0.5);
      if (j >= 0) Vp[static_cast<size_t>(j) * C + ic] = P5.eval(-0.5);
      if (g3 && j >= 0 && j < ny) {
        for (int k = 0; k < 3; ++k)
          g3[(static_cast<size_t>(j) * 3 + k) * C + ic] =
              P5.eval(QuadratureTables::gauss3_nodes[static_cast<size_t>(k)]);
      }
    }
  }, 1);
}

// Pass 2 for x-face traces: reconstruct the line averages W[f*R + jr] along y
// and evaluate at the three Gauss-y nodes of each row cell.
inline void xface_gauss_pass(const double* W, int nx, int ny,
                             const WenoAoConfig& cfg, double* out) {
  const int R = ny + 4;
  parallel_for(0, nx + 1, [&](long f) {
    const double* line = W + static_cast<size_t>(f) * R;
    for (int j = 0; j < ny; ++j) {
      const ReconPoly P5 = weno_ao_blend(line + j, cfg);
      for (int k = 0; k < 3; ++k)
        out[xnode(static_cast<int>(f), j, k, ny)] =
            P5.eval(QuadratureTables::gauss3_nodes[static_cast<size_t>(k)]);
    }
  }, 1);
}

// Pass 2 for y-face traces: reconstruct V[g*C + ic] along x.
inline void yface_gauss_pass(const double* V, int nx, int ny,
                             const WenoAoConfig& cfg, double* out) {
  const int C = nx + 4;
  parallel_for(0, ny + 1, [&](long g) {
    const double* line = V + static_cast<size_t>(g) * C;
    for (int i = 0; i < nx; ++i) {
      const ReconPoly P5 = weno_ao_blend(line + i, cfg);
      for (int k = 0; k < 3; ++k)
        out[ynode(i, static_cast<int>(g), k, nx)] =
            P5.eval(QuadratureTables::gauss3_nodes[static_cast<size_t>(k)]);
    }
  }, 1);
}

// Pass 2 for the (x^l, yhat^k) source nodes: reconstruct the Gauss-y line
// values gy[(j*3+k)*C + ic] along x and evaluate (or differentiate, for b_x)
// at the four Lobatto-x offsets.
inline void src_lobatto_pass_x(const double* gy, int nx, int ny,
                               const WenoAoConfig& cfg, bool deriv,
                               double inv_dx, double* out) {
  const int C = nx + 4;
  parallel_for(0, ny, [&](long j) {
    for (int k = 0; k < 3; ++k) {
      const double* line = gy + (static_cast<size_t>(j) * 3 + k) * C;
      for (int i = 0; i < nx; ++i) {
        const ReconPoly P5 = weno_ao_blend(line + i, cfg);
        for (int l = 0; l < 4; ++l) {
          const double xi = QuadratureTables::lobatto4_nodes[static_cast<size_t>(l)];
          out[snode1(i, static_cast<int>(j), l, k, nx)] =
              deriv ? P5.deval(xi) * inv_dx : P5.eval(xi);
        }
      }
    }
  }, 1);
}

// Pass 2 for the (xhat^k, y^l) source nodes: reconstruct gx[(i*3+k)*R + jr]
// along y.
inline void src_lobatto_pass_y(const double* gx, int nx, int ny,
                               const WenoAoConfig& cfg, bool deriv,
                               double inv_dy, double* out) {
  const int R = ny + 4;
  parallel_for(0, nx, [&](long i) {
    for (int k = 0; k < 3; ++k) {
      const double* line = gx + (static_cast<size_t>(i) * 3 + k) * R;
      for (int j = 0; j < ny; ++j) {
        const ReconPoly P5 = weno_ao_blend(line + j, cfg);
        for (int l = 0; l < 4; ++l) {
          const double xi = QuadratureTables::lobatto4_nodes[static_cast<size_t>(l)];
          out[snode2(i, static_cast<int>(j), k, l, nx)] =
              deriv ? P5.deval(xi) * inv_dy : P5.eval(xi);
        }
      }
    }
  }, 1);
}

}  // namespace detail
}  // namespace swe
