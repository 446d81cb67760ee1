#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "swe/bathymetry.hpp"
#include "swe/boundary.hpp"
#include "swe/errors.hpp"
#include "swe/grid.hpp"
#include "swe/parallel.hpp"
#include "swe/quadrature.hpp"
#include "swe/recon2d.hpp"
#include "swe/solver1d.hpp"
#include "swe/state.hpp"

namespace swe {

// Reconstructed edge and source-node values of one rhs evaluation.
// x-face arrays are indexed with xnode(f, j, k), y-face arrays with
// ynode(i, g, k); h carries the PP-limited depth when the limiter is on and
// b the matching bottom (b = H - h at every node).
struct EdgeTrace2D {
  int nx = 0, ny = 0;
  std::vector<double> xH_m, xH_p, xhu_m, xhu_p, xhv_m, xhv_p, xh_m, xh_p,
      xb_m, xb_p;
  std::vector<double> yH_m, yH_p, yhu_m, yhu_p, yhv_m, yhv_p, yh_m, yh_p,
      yb_m, yb_p;
  std::vector<double> Hsrc1, Hsrc2;  // H at (x^l, yhat^k) and (xhat^k, y^l)
};

struct FluxIntegrals2D {
  std::vector<double> PhiH, Phihu, Phihv;  // x-faces, index f*ny + j
  std::vector<double> PsiH, Psihu, Psihv;  // y-faces, index g*nx + i
};

// Gauss-Lobatto tensor source for one cell: S1 = g sum_{k,l} gk wl
// (Hbar - H(x^l, yhat^k)) bx(x^l, yhat^k), S2 the y analogue.
inline std::array<double, 2> source_cell_2d(const double* Hs1, const double* bx,
                                            const double* Hs2, const double* by,
                                            double H_global, double g) {
  double s1 = 0.0, s2 = 0.0;
  for (int l = 0; l < 4; ++l) {
    const double wl = QuadratureTables::lobatto4_weights[static_cast<size_t>(l)];
    for (int k = 0; k < 3; ++k) {
      const double gk = QuadratureTables::gauss3_weights[static_cast<size_t>(k)];
      s1 += gk * wl * (H_global - Hs1[l * 3 + k]) * bx[l * 3 + k];
      s2 += gk * wl * (H_global - Hs2[k * 4 + l]) * by[k * 4 + l];
    }
  }
  return {g * s1, g * s2};
}

class Solver2D {
 public:
  Solver2D(const Grid2D& grid, BoundaryCondition2D bc,
           std::vector<double> b_bar_interior, double g,
           SolverOptions opt = {}, WenoAoConfig weno = {})
      : grid_(grid), bc_(bc), g_(g), opt_(opt), weno_(weno) {
    validate(bc_);
    bath_ = precompute_bathymetry_2d(b_bar_interior, grid_, bc_, weno_);
    const int nx = grid_.nx, ny = grid_.ny;
    const size_t ext = static_cast<size_t>(nx + 6) * (ny + 6);
    Hext_.assign(ext, 0.0);
    huext_.assign(ext, 0.0);
    hvext_.assign(ext, 0.0);

    const size_t nxf = static_cast<size_t>(nx + 1) * ny * 3;
    const size_t nyf = static_cast<size_t>(ny + 1) * nx * 3;
    const size_t nsrc = static_cast<size_t>(nx) * ny * 12;
    edges_.nx = nx;
    edges_.ny = ny;
    for (auto* v : {&edges_.xH_m, &edges_.xH_p, &edges_.xhu_m, &edges_.xhu_p,
                    &edges_.xhv_m, &edges_.xhv_p, &edges_.xh_m, &edges_.xh_p,
                    &edges_.xb_m, &edges_.xb_p})
      v->assign(nxf, 0.0);
    for (auto* v : {&edges_.yH_m, &edges_.yH_p, &edges_.yhu_m, &edges_.yhu_p,
                    &edges_.yhv_m, &edges_.yhv_p, &edges_.yh_m, &edges_.yh_p,
                    &edges_.yb_m, &edges_.yb_p})
      v->assign(nyf, 0.0);
    edges_.Hsrc1.assign(nsrc, 0.0);
    edges_.Hsrc2.assign(nsrc, 0.0);

    Wm_.assign(static_cast<size_t>(nx + 1) * (ny + 4), 0.0);
    Wp_.assign(Wm_.size(), 0.0);
    gx_.assign(static_cast<size_t>(nx) * 3 * (ny + 4), 0.0);
    Vm_.assign(static_cast<size_t>(ny + 1) * (nx + 4), 0.0);
    Vp_.assign(Vm_.size(), 0.0);
    gy_.assign(static_cast<size_t>(ny) * 3 * (nx + 4), 0.0);

    flux_.PhiH.assign(static_cast<size_t>(nx + 1) * ny, 0.0);
    flux_.Phihu.assign(flux_.PhiH.size(), 0.0);
    flux_.Phihv.assign(flux_.PhiH.size(), 0.0);
    flux_.PsiH.assign(static_cast<size_t>(ny + 1) * nx, 0.0);
    flux_.Psihu.assign(flux_.PsiH.size(), 0.0);
    flux_.Psihv.assign(flux_.PsiH.size(), 0.0);
  }

  const Grid2D& grid() const { return grid_; }
  const Bathymetry2D& bathymetry() const { return bath_; }
  double gravity() const { return g_; }
  SolverOptions& options() { return opt_; }
  const SolverOptions& options() const { return opt_; }

  // alpha1 = max |u| + sqrt(g h), alpha2 = max |v| + sqrt(g h) over interior
  // cell averages, dry cells skipped; deterministic scan order.
  std::pair<double, double> wave_speeds(const State2D& s) const {
    double a1 = 0.0, a2 = 0.0;
    for (int j = 0; j < s.ny; ++j) {
      for (int i = 0; i < s.nx; ++i) {
        const size_t c = static_cast<size_t>(j) * s.nx + i;
        const double h = s.H_bar[c] - bath_.b_bar(i, j);
        if (h < opt_.eps_dry) continue;
        const double cg = std::sqrt(g_ * h);
        a1 = std::max(a1, std::abs(s.hu_bar[c] / h) + cg);
        a2 = std::max(a2, std::abs(s.hv_bar[c] / h) + cg);
      }
    }
    return {a1, a2};
  }

  double surface_average(const State2D& s) const {
    double acc = 0.0;
    for (double H : s.H_bar) acc += H;
    return acc / static_cast<double>(s.size());
  }

  // Dimension-by-dimension reconstruction of all edge traces and source
  // nodes, followed by the PP limiter when enabled.
  const EdgeTrace2D& reconstruct(const State2D& U, double t) const {
    const int nx = grid_.nx, ny = grid_.ny;
    fill_ext(U);

    auto xchain = [&](const std::vector<double>& ext, std::vector<double>& out_m,
                      std::vector<double>& out_p, bool with_gauss) {
      detail::x_line_pass(ext.data(), nx, ny, weno_, Wm_.data(), Wp_.data(),
                          with_gauss ? gx_.data() : nullptr);
      detail::xface_gauss_pass(Wm_.data(), nx, ny, weno_, out_m.data());
      detail::xface_gauss_pass(Wp_.data(), nx, ny, weno_, out_p.data());
    };
    auto ychain = [&](const std::vector<double>& ext, std::vector<double>& out_m,
                      std::vector<double>& out_p, bool with_gauss) {
      detail::y_line_pass(ext.data(), nx, ny, weno_, Vm_.data(), Vp_.data(),
                          with_gauss ? gy_.data() : nullptr);
      detail::yface_gauss_pass(Vm_.data(), nx, ny, weno_, out_m.data());
      detail::yface_gauss_pass(Vp_.data(), nx, ny, weno_, out_p.data());
    };

    xchain(Hext_, edges_.xH_m, edges_.xH_p, true);
    detail::src_lobatto_pass_y(gx_.data(), nx, ny, weno_, false, 0.0,
                               edges_.Hsrc2.data());
    xchain(huext_, edges_.xhu_m, edges_.xhu_p, false);
    xchain(hvext_, edges_.xhv_m, edges_.xhv_p, false);

    ychain(Hext_, edges_.yH_m, edges_.yH_p, true);
    detail::src_lobatto_pass_x(gy_.data(), nx, ny, weno_, false, 0.0,
                               edges_.Hsrc1.data());
    ychain(huext_, edges_.yhu_m, edges_.yhu_p, false);
    ychain(hvext_, edges_.yhv_m, edges_.yhv_p, false);

    // depths and bottoms at the face nodes
    const size_t nxf = edges_.xH_m.size(), nyf = edges_.yH_m.size();
    parallel_for(0, static_cast<long>(nxf), [&](long q) {
      const size_t s = static_cast<size_t>(q);
      edges_.xh_m[s] = edges_.xH_m[s] - bath_.xb_m[s];
      edges_.xh_p[s] = edges_.xH_p[s] - bath_.xb_p[s];
      edges_.xb_m[s] = bath_.xb_m[s];
      edges_.xb_p[s] = bath_.xb_p[s];
    });
    parallel_for(0, static_cast<long>(nyf), [&](long q) {
      const size_t s = static_cast<size_t>(q);
      edges_.yh_m[s] = edges_.yH_m[s] - bath_.yb_m[s];
      edges_.yh_p[s] = edges_.yH_p[s] - bath_.yb_p[s];
      edges_.yb_m[s] = bath_.yb_m[s];
      edges_.yb_p[s] = bath_.yb_p[s];
    });

    if (opt_.pp_limiter) pp_limit(U, t);
    return edges_;
  }

  // Gauss line integrals of the LF fluxes over every face.
  const FluxIntegrals2D& flux_integrals(const EdgeTrace2D& e, double H_global,
                                        double alpha1, double alpha2) const {
    const int nx = grid_.nx, ny = grid_.ny;
    parallel_for(0, static_cast<long>(nx + 1) * ny, [&](long q) {
      const int f = static_cast<int>(q / ny), j = static_cast<int>(q % ny);
      double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const size_t s = xnode(f, j, k, ny);
        double hsm, hsp;
        if (opt_.disable_hydrostatic_fix) {
          hsm = e.xh_m[s];
          hsp = e.xh_p[s];
        } else {
          const double bf = std::max(e.xb_m[s], e.xb_p[s]);
          hsm = std::max(0.0, e.xH_m[s] - bf);
          hsp = std::max(0.0, e.xH_p[s] - bf);
        }
        const double cap = std::max(alpha1, alpha2);
        const double um = flux_velocity(e.xh_m[s], e.xhu_m[s], opt_.eps_dry, cap);
        const double up = flux_velocity(e.xh_p[s], e.xhu_p[s], opt_.eps_dry, cap);
        const double vm = flux_velocity(e.xh_m[s], e.xhv_m[s], opt_.eps_dry, cap);
        const double vp = flux_velocity(e.xh_p[s], e.xhv_p[s], opt_.eps_dry, cap);
        const double qm = hsm * um, qp = hsp * up;
        const double Mm = hsm * um * um + g_ * (H_global - e.xH_m[s]) * e.xb_m[s] +
                          0.5 * g_ * e.xH_m[s] * e.xH_m[s];
        const double Mp = hsp * up * up + g_ * (H_global - e.xH_p[s]) * e.xb_p[s] +
                          0.5 * g_ * e.xH_p[s] * e.xH_p[s];
        const double gk = QuadratureTables::gauss3_weights[static_cast<size_t>(k)];
        acc0 += gk * (0.5 * (qm + qp) - 0.5 * alpha1 * (hsp - hsm));
        acc1 += gk * (0.5 * (Mm + Mp) - 0.5 * alpha1 * (qp - qm));
        acc2 += gk * (0.5 * (qm * vm + qp * vp) - 0.5 * alpha1 * (hsp * vp - hsm * vm));
      }
      flux_.PhiH[static_cast<size_t>(q)] = acc0;
      flux_.Phihu[static_cast<size_t>(q)] = acc1;
      flux_.Phihv[static_cast<size_t>(q)] = acc2;
    });
    parallel_for(0, static_cast<long>(ny + 1) * nx, [&](long q) {
      double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const size_t s = static_cast<size_t>(q) * 3 + k;
        double hsm, hsp;
        if (opt_.disable_hydrostatic_fix) {
          hsm = e.yh_m[s];
          hsp = e.yh_p[s];
        } else {
          const double bf = std::max(e.yb_m[s], e.yb_p[s]);
          hsm = std::max(0.0, e.yH_m[s] - bf);
          hsp = std::max(0.0, e.yH_p[s] - bf);
        }
        const double cap = std::max(alpha1, alpha2);
        const double um = flux_velocity(e.yh_m[s], e.yhu_m[s], opt_.eps_dry, cap);
        const double up = flux_velocity(e.yh_p[s], e.yhu_p[s], opt_.eps_dry, cap);
        const double vm = flux_velocity(e.yh_m[s], e.yhv_m[s], opt_.eps_dry, cap);
        const double vp = flux_velocity(e.yh_p[s], e.yhv_p[s], opt_.eps_dry, cap);
        const double qm = hsm * vm, qp = hsp * vp;
        const double Mm = hsm * vm * vm + g_ * (H_global - e.yH_m[s]) * e.yb_m[s] +
                          0.5 * g_ * e.yH_m[s] * e.yH_m[s];
        const double Mp = hsp * vp * vp + g_ * (H_global - e.yH_p[s]) * e.yb_p[s] +
                          0.5 * g_ * e.yH_p[s] * e.yH_p[s];
        const double gk = QuadratureTables::gauss3_weights[static_cast<size_t>(k)];
        acc0 += gk * (0.5 * (qm + qp) - 0.5 * alpha2 * (hsp - hsm));
        acc1 += gk * (0.5 * (hsm * vm * um + hsp * vp * up) -
                      0.5 * alpha2 * (hsp * up - hsm * um));
        acc2 += gk * (0.5 * (Mm + Mp) - 0.5 * alpha2 * (qp - qm));
      }
      flux_.PsiH[static_cast<size_t>(q)] = acc0;
      flux_.Psihu[static_cast<size_t>(q)] = acc1;
      flux_.Psihv[static_cast<size_t>(q)] = acc2;
    });
    return flux_;
  }

  void rhs(const State2D& U, double t, State2D& L) const {
    const int nx = grid_.nx, ny = grid_.ny;
    const double H_global = surface_average(U);
    const auto [a1, a2] = wave_speeds(U);
    const EdgeTrace2D& e = reconstruct(U, t);
    const FluxIntegrals2D& F = flux_integrals(e, H_global, a1, a2);

    L.nx = nx;
    L.ny = ny;
    const size_t n = static_cast<size_t>(nx) * ny;
    L.H_bar.resize(n);
    L.hu_bar.resize(n);
    L.hv_bar.resize(n);
    const double inv_dx = 1.0 / grid_.dx, inv_dy = 1.0 / grid_.dy;
    parallel_for(0, static_cast<long>(n), [&](long q) {
      const int i = static_cast<int>(q % nx), j = static_cast<int>(q / nx);
      const size_t xw = static_cast<size_t>(i) * ny + j;      // face i, row j
      const size_t xe = static_cast<size_t>(i + 1) * ny + j;  // face i+1
      const size_t ys = static_cast<size_t>(j) * nx + i;      // face j, col i
      const size_t yn = static_cast<size_t>(j + 1) * nx + i;  // face j+1
      const size_t c = static_cast<size_t>(q);
      const auto S = source_cell_2d(&e.Hsrc1[c * 12], &bath_.bx_src[c * 12],
                                    &e.Hsrc2[c * 12], &bath_.by_src[c * 12],
                                    H_global, g_);
      L.H_bar[c] = -(F.PhiH[xe] - F.PhiH[xw]) * inv_dx -
                   (F.PsiH[yn] - F.PsiH[ys]) * inv_dy;
      L.hu_bar[c] = -(F.Phihu[xe] - F.Phihu[xw]) * inv_dx -
                    (F.Psihu[yn] - F.Psihu[ys]) * inv_dy + S[0];
      L.hv_bar[c] = -(F.Phihv[xe] - F.Phihv[xw]) * inv_dx -
                    (F.Psihv[yn] - F.Psihv[ys]) * inv_dy + S[1];
    });
    for (size_t c = 0; c < n; ++c) {
      if (!std::isfinite(L.H_bar[c]) || !std::isfinite(L.hu_bar[c]) ||
          !std::isfinite(L.hv_bar[c]))
        throw BlowupError("non-finite flux divergence at cell (" +
                              std::to_string(c % static_cast<size_t>(nx)) + ", " +
                              std::to_string(c / static_cast<size_t>(nx)) +
                              "), t = " + std::to_string(t),
                          static_cast<long>(c), t);
    }
  }

  // Dry cells carry no momentum; see Solver1D::post_stage.
  void post_stage(State2D& s) const {
    if (!opt_.pp_limiter) return;
    for (int j = 0; j < s.ny; ++j) {
      for (int i = 0; i < s.nx; ++i) {
        const size_t c = static_cast<size_t>(j) * s.nx + i;
        if (s.H_bar[c] - bath_.b_bar(i, j) < opt_.eps_dry) {
          s.hu_bar[c] = 0.0;
          s.hv_bar[c] = 0.0;
        }
      }
    }
  }

 private:
  void fill_ext(const State2D& U) const {
    constexpr int G = Grid2D::n_ghost;
    const int nx = grid_.nx, ny = grid_.ny, P = nx + 2 * G;
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const size_t s = static_cast<size_t>(j) * nx + i;
        const size_t d = static_cast<size_t>(j + G) * P + (i + G);
        Hext_[d] = U.H_bar[s];
        huext_[d] = U.hu_bar[s];
        hvext_[d] = U.hv_bar[s];
      }
    }
    apply_boundary_scalar_2d(Hext_, nx, ny, bc_);
    apply_boundary_scalar_2d(huext_, nx, ny, bc_);
    apply_boundary_scalar_2d(hvext_, nx, ny, bc_);
  }

  // Per-cell scaling limiter: theta1 pulls the six x-face node depths of the
  // cell toward its average, theta2 the six y-face node depths; Gauss-averaged
  // auxiliary values xi^1, xi^2 keep the forward-Euler positivity argument.
  // Discharge traces are scaled by the same factors so trace velocities stay
  // bounded by cell-average velocities. Bottom traces are redefined as
  // b = H - h at every node afterwards.
  void pp_limit(const State2D& U, double t) const {
    constexpr double w1 = 1.0 / 12.0;
    const int nx = grid_.nx, ny = grid_.ny;

    double hbar_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const double hbar =
            U.H_bar[static_cast<size_t>(j) * nx + i] - bath_.b_bar(i, j);
        if (hbar < -1e-13)
          throw InvariantError(
              "pp limiter: negative cell average h = " + std::to_string(hbar) +
              " at cell (" + std::to_string(i) + ", " + std::to_string(j) +
              "), t = " + std::to_string(t));
        hbar_min = std::min(hbar_min, hbar);
      }
    }
    const double eta = std::min(1e-13, hbar_min);

    parallel_for(0, static_cast<long>(nx) * ny, [&](long q) {
      const int i = static_cast<int>(q % nx), j = static_cast<int>(q / nx);
      const double hbar = U.H_bar[static_cast<size_t>(q)] - bath_.b_bar(i, j);

      double avg_w = 0.0, avg_e = 0.0, m1 = std::numeric_limits<double>::infinity();
      for (int k = 0; k < 3; ++k) {
        const double gk = QuadratureTables::gauss3_weights[static_cast<size_t>(k)];
        const double hw = edges_.xh_p[xnode(i, j, k, ny)];
        const double he = edges_.xh_m[xnode(i + 1, j, k, ny)];
        avg_w += gk * hw;
        avg_e += gk * he;
        m1 = std::min({m1, hw, he});
      }
      const double xi1 = (hbar - w1 * avg_w - w1 * avg_e) / (1.0 - 2.0 * w1);
      m1 = std::min(m1, xi1);
      double th1 = 1.0;
      if (m1 < eta) th1 = std::clamp((hbar - eta) / (hbar - m1), 0.0, 1.0);

      double avg_s = 0.0, avg_n = 0.0, m2 = std::numeric_limits<double>::infinity();
      for (int k = 0; k < 3; ++k) {
        const double gk = QuadratureTables::gauss3_weights[static_cast<size_t>(k)];
        const double hs = edges_.yh_p[ynode(i, j, k, nx)];
        const double hn = edges_.yh_m[ynode(i, j + 1, k, nx)];
        avg_s += gk * hs;
        avg_n += gk * hn;
        m2 = std::min({m2, hs, hn});
      }
      const double xi2 = (hbar - w1 * avg_s - w1 * avg_n) / (1.0 - 2.0 * w1);
      m2 = std::min(m2, xi2);
      double th2 = 1.0;
      if (m2 < eta) th2 = std::clamp((hbar - eta) / (hbar - m2), 0.0, 1.0);

      const double qu = U.hu_bar[static_cast<size_t>(q)];
      const double qv = U.hv_bar[static_cast<size_t>(q)];
      for (int k = 0; k < 3; ++k) {
        const size_t sw = xnode(i, j, k, ny), se = xnode(i + 1, j, k, ny);
        if (th1 < 1.0) {
          edges_.xh_p[sw] = th1 * (edges_.xh_p[sw] - hbar) + hbar;
          edges_.xh_m[se] = th1 * (edges_.xh_m[se] - hbar) + hbar;
          edges_.xhu_p[sw] = th1 * (edges_.xhu_p[sw] - qu) + qu;
          edges_.xhu_m[se] = th1 * (edges_.xhu_m[se] - qu) + qu;
          edges_.xhv_p[sw] = th1 * (edges_.xhv_p[sw] - qv) + qv;
          edges_.xhv_m[se] = th1 * (edges_.xhv_m[se] - qv) + qv;
        }
        edges_.xb_p[sw] = edges_.xH_p[sw] - edges_.xh_p[sw];
        edges_.xb_m[se] = edges_.xH_m[se] - edges_.xh_m[se];
        const size_t ss = ynode(i, j, k, nx), sn = ynode(i, j + 1, k, nx);
        if (th2 < 1.0) {
          edges_.yh_p[ss] = th2 * (edges_.yh_p[ss] - hbar) + hbar;
          edges_.yh_m[sn] = th2 * (edges_.yh_m[sn] - hbar) + hbar;
          edges_.yhu_p[ss] = th2 * (edges_.yhu_p[ss] - qu) + qu;
          edges_.yhu_m[sn] = th2 * (edges_.yhu_m[sn] - qu) + qu;
          edges_.yhv_p[ss] = th2 * (edges_.yhv_p[ss] - qv) + qv;
          edges_.yhv_m[sn] = th2 * (edges_.yhv_m[sn] - qv) + qv;
        }
        edges_.yb_p[ss] = edges_.yH_p[ss] - edges_.yh_p[ss];
        edges_.yb_m[sn] = edges_.yH_m[sn] - edges_.yh_m[sn];
      }
    });

    // Ghost-side traces of wrap faces must match the limited interior values,
    // otherwise periodic runs lose exact flux telescoping.
    if (bc_.west == BcKind::Periodic) {
      for (int j = 0; j < ny; ++j) {
        for (int k = 0; k < 3; ++k) {
          for (auto* v : {&edges_.xh_m, &edges_.xb_m, &edges_.xhu_m, &edges_.xhv_m})
            (*v)[xnode(0, j, k, ny)] = (*v)[xnode(nx, j, k, ny)];
          for (auto* v : {&edges_.xh_p, &edges_.xb_p, &edges_.xhu_p, &edges_.xhv_p})
            (*v)[xnode(nx, j, k, ny)] = (*v)[xnode(0, j, k, ny)];
        }
      }
    }
    if (bc_.south == BcKind::Periodic) {
      for (int i = 0; i < nx; ++i) {
        for (int k = 0; k < 3; ++k) {
          for (auto* v : {&edges_.yh_m, &edges_.yb_m, &edges_.yhu_m, &edges_.yhv_m})
            (*v)[ynode(i, 0, k, nx)] = (*v)[ynode(i, ny, k, nx)];
          for (auto* v : {&edges_.yh_p, &edges_.yb_p, &edges_.yhu_p, &edges_.yhv_p})
            (*v)[ynode(i, ny, k, nx)] = (*v)[ynode(i, 0, k, nx)];
        }
      }
    }
  }

  Grid2D grid_;
  BoundaryCondition2D bc_;
  double g_;
  SolverOptions opt_;
  WenoAoConfig weno_;
  Bathymetry2D bath_;

  mutable std::vector<double> Hext_, huext_, hvext_;
  mutable std::vector<double> Wm_, Wp_, gx_, Vm_, Vp_, gy_;
  mutable EdgeTrace2D edges_;
  mutable FluxIntegrals2D flux_;
};

}  // namespace swe
