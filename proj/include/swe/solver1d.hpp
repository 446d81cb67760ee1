#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "swe/bathymetry.hpp"
#include "swe/boundary.hpp"
#include "swe/errors.hpp"
#include "swe/grid.hpp"
#include "swe/parallel.hpp"
#include "swe/quadrature.hpp"
#include "swe/state.hpp"
#include "swe/weno_ao.hpp"

namespace swe {

struct SolverOptions {
  bool pp_limiter = false;
  double eps_dry = 1e-8;            // velocity desingularization threshold
  bool disable_hydrostatic_fix = false;  // debug switch, breaks well-balance
};

// Global spatial average of the water surface. Uniform cells, so the
// integral average reduces to the mean; summed in index order so the result
// is deterministic.
inline double global_surface_average(const State1D& s) {
  double acc = 0.0;
  for (double H : s.H_bar) acc += H;
  return acc / static_cast<double>(s.size());
}

// Dry-guarded trace velocity. The momentum flux is assembled as h* u^2, so a
// zero here removes the advective contribution of a dry trace entirely.
inline double velocity_from_trace(double h, double hu, double eps_dry = 1e-10) {
  return (h >= eps_dry) ? hu / h : 0.0;
}

// Trace velocity entering the fluxes: dry-guarded and capped at the global
// wave speed. Near wet/dry fronts the depth and discharge reconstructions
// wiggle independently, so the raw ratio hu/h can exceed alpha by orders of
// magnitude; the Lax-Friedrichs positivity coefficients (alpha +- u) must
// stay non-negative. The cap never activates in resolved wet flow.
inline double flux_velocity(double h, double hu, double eps_dry, double alpha) {
  const double u = velocity_from_trace(h, hu, eps_dry);
  return std::clamp(u, -alpha, alpha);
}

// h*,+- = max(0, H+- - max(b-, b+)). Equalizes the face depths at the
// lake-at-rest state and keeps them non-negative.
inline std::pair<double, double> hydrostatic_fix(double H_m, double H_p,
                                                 double b_m, double b_p) {
  const double b_face = std::max(b_m, b_p);
  return {std::max(0.0, H_m - b_face), std::max(0.0, H_p - b_face)};
}

// alpha = max_i (|u_i| + sqrt(g h_i)) over interior cell averages; dry cells
// contribute nothing.
inline double max_wave_speed(const State1D& s, const Bathymetry1D& bath,
                             double g, double eps_dry = 1e-10) {
  double alpha = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    const double h = s.H_bar[static_cast<size_t>(i)] - bath.b_bar(i);
    if (h < eps_dry) continue;
    const double speed = std::abs(s.hu_bar[static_cast<size_t>(i)] / h) + std::sqrt(g * h);
    if (speed > alpha) alpha = speed;
  }
  return alpha;
}

// Everything the CST Lax-Friedrichs flux needs at one face.
struct FaceVals {
  double H_m = 0, H_p = 0;
  double hstar_m = 0, hstar_p = 0;
  double u_m = 0, u_p = 0;
  double b_m = 0, b_p = 0;
};

// F_H  = 1/2 (h*- u- + h*+ u+) - a/2 (h*+ - h*-)
// F_hu = 1/2 (M- + M+) - a/2 (h*+ u+ - h*- u-),
// M+- = h* u^2 + g (Hbar - H) b + g H^2 / 2.
// Both the flux gradient and the source vanish at the lake-at-rest state
// because H = Hbar there.
inline std::array<double, 2> lf_flux_cst(const FaceVals& f, double H_global,
                                         double alpha, double g) {
  const double qm = f.hstar_m * f.u_m;
  const double qp = f.hstar_p * f.u_p;
  const double M_m = f.hstar_m * f.u_m * f.u_m +
                     g * (H_global - f.H_m) * f.b_m + 0.5 * g * f.H_m * f.H_m;
  const double M_p = f.hstar_p * f.u_p * f.u_p +
                     g * (H_global - f.H_p) * f.b_p + 0.5 * g * f.H_p * f.H_p;
  return {0.5 * (qm + qp) - 0.5 * alpha * (f.hstar_p - f.hstar_m),
          0.5 * (M_m + M_p) - 0.5 * alpha * (qp - qm)};
}

// Four-point Gauss-Lobatto approximation of the momentum source per unit
// length: sum_l w_l g (Hbar - H_l) (b_x)_l. The H component is zero.
inline double source_integral(const std::array<double, 4>& H_lob,
                              const std::array<double, 4>& bx_lob,
                              double H_global, double g) {
  double acc = 0.0;
  for (int l = 0; l < 4; ++l)
    acc += QuadratureTables::lobatto4_weights[static_cast<size_t>(l)] *
           (H_global - H_lob[static_cast<size_t>(l)]) * bx_lob[static_cast<size_t>(l)];
  return g * acc;
}

// Auxiliary variable of the PP analysis:
// xi_i = (h_i - w1 h^+_{i-1/2} - w4 h^-_{i+1/2}) / (1 - w1 - w4).
inline double pp_auxiliary_xi(double h_bar, double h_left_trace,
                              double h_right_trace) {
  constexpr double w1 = 1.0 / 12.0;
  return (h_bar - w1 * h_left_trace - w1 * h_right_trace) / (1.0 - 2.0 * w1);
}

// Scaling factor theta = min(1, (h - eta)/(h - m)), m = min(h^+, h^-, xi).
// Clamped so ghost cells with averages below the floor still get a valid
// scale instead of a signed overshoot.
inline double pp_theta(double h_bar, double h_left_trace, double h_right_trace,
                       double eta) {
  const double xi = pp_auxiliary_xi(h_bar, h_left_trace, h_right_trace);
  const double m = std::min({h_left_trace, h_right_trace, xi});
  if (m >= eta) return 1.0;
  return std::clamp((h_bar - eta) / (h_bar - m), 0.0, 1.0);
}

// Reconstructed interface values at faces f = 0..n, assembled for inspection
// and tests. The minus side of face f comes from cell f-1, the plus side from
// cell f; ghost-ring cells supply the outer sides of the boundary faces.
struct FaceTrace1D {
  std::vector<double> H_m, H_p, hu_m, hu_p, h_m, h_p, hstar_m, hstar_p, u_m,
      u_p, b_m, b_p;
};

class Solver1D {
 public:
  Solver1D(const Grid1D& grid, BoundaryCondition1D bc,
           std::vector<double> b_bar_interior, double g,
           SolverOptions opt = {}, WenoAoConfig weno = {})
      : grid_(grid), bc_(std::move(bc)), g_(g), opt_(opt), weno_(weno) {
    validate(bc_);
    bath_ = precompute_bathymetry_1d(b_bar_interior, grid_, bc_, weno_);
    const size_t n = static_cast<size_t>(grid_.n_cells);
    Hext_.assign(n + 6, 0.0);
    huext_.assign(n + 6, 0.0);
    H_lob_.assign(n + 2, {});
    huL_.assign(n + 2, 0.0);
    huR_.assign(n + 2, 0.0);
    hL_.assign(n + 2, 0.0);
    hR_.assign(n + 2, 0.0);
    bL_.assign(n + 2, 0.0);
    bR_.assign(n + 2, 0.0);
    FH_.assign(n + 1, 0.0);
    Fhu_.assign(n + 1, 0.0);
  }

  const Grid1D& grid() const { return grid_; }
  const Bathymetry1D& bathymetry() const { return bath_; }
  const BoundaryCondition1D& boundary() const { return bc_; }
  double gravity() const { return g_; }
  SolverOptions& options() { return opt_; }
  const SolverOptions& options() const { return opt_; }

  double max_speed(const State1D& s) const {
    return max_wave_speed(s, bath_, g_, opt_.eps_dry);
  }

  // Mass flux F_H through the domain faces recorded by the last rhs() call.
  struct BoundaryFlux {
    double left = 0.0, right = 0.0;
  };
  BoundaryFlux last_boundary_flux() const { return bflux_; }

  // Semi-discrete operator L(U): BC fill, WENO-AO traces, optional PP limit,
  // hydrostatic fix, CST fluxes and Lobatto source.
  void rhs(const State1D& U, double t, State1D& L) const {
    const int n = grid_.n_cells;
    const double H_global = global_surface_average(U);
    const double alpha = max_speed(U);
    compute_traces(U, t);

    parallel_for(0, n + 1, [&](long f) {
      const size_t m = static_cast<size_t>(f);      // cell f-1 in ring storage
      const size_t p = static_cast<size_t>(f + 1);  // cell f
      FaceVals fv;
      fv.H_m = H_lob_[m][3];
      fv.H_p = H_lob_[p][0];
      fv.b_m = bR_[m];
      fv.b_p = bL_[p];
      if (opt_.disable_hydrostatic_fix) {
        fv.hstar_m = hR_[m];
        fv.hstar_p = hL_[p];
      } else {
        std::tie(fv.hstar_m, fv.hstar_p) =
            hydrostatic_fix(fv.H_m, fv.H_p, fv.b_m, fv.b_p);
      }
      fv.u_m = flux_velocity(hR_[m], huR_[m], opt_.eps_dry, alpha);
      fv.u_p = flux_velocity(hL_[p], huL_[p], opt_.eps_dry, alpha);
      const std::array<double, 2> F = lf_flux_cst(fv, H_global, alpha, g_);
      FH_[static_cast<size_t>(f)] = F[0];
      Fhu_[static_cast<size_t>(f)] = F[1];
    });

    L.H_bar.resize(static_cast<size_t>(n));
    L.hu_bar.resize(static_cast<size_t>(n));
    const double inv_dx = 1.0 / grid_.dx;
    parallel_for(0, n, [&](long i) {
      const size_t c = static_cast<size_t>(i);
      L.H_bar[c] = -(FH_[c + 1] - FH_[c]) * inv_dx;
      L.hu_bar[c] = -(Fhu_[c + 1] - Fhu_[c]) * inv_dx +
                    source_integral(H_lob_[c + 1], bath_.bx_lobatto[c],
                                    H_global, g_);
    });

    for (int i = 0; i < n; ++i) {
      if (!std::isfinite(L.H_bar[static_cast<size_t>(i)]) ||
          !std::isfinite(L.hu_bar[static_cast<size_t>(i)]))
        throw BlowupError("non-finite flux divergence at cell " +
                              std::to_string(i) + ", t = " + std::to_string(t),
                          i, t);
    }
    bflux_ = {FH_[0], FH_[static_cast<size_t>(n)]};
  }

  // Wetting/drying state fix applied after every RK stage when the limiter is
  // active: cells below the dry threshold cannot carry momentum. Without this
  // the flux/source imbalance at discontinuous bottoms slowly deposits
  // discharge into dry cells, and the first arriving water turns the stored
  // ratio hu/h into an unbounded wave speed.
  void post_stage(State1D& s) const {
    if (!opt_.pp_limiter) return;
    for (int i = 0; i < s.size(); ++i) {
      if (s.H_bar[static_cast<size_t>(i)] - bath_.b_bar(i) < opt_.eps_dry)
        s.hu_bar[static_cast<size_t>(i)] = 0.0;
    }
  }

  // Trace snapshot after limiting and the hydrostatic fix, for tests.
  FaceTrace1D face_traces(const State1D& U, double t) const {
    const int n = grid_.n_cells;
    compute_traces(U, t);
    FaceTrace1D ft;
    for (auto* v : {&ft.H_m, &ft.H_p, &ft.hu_m, &ft.hu_p, &ft.h_m, &ft.h_p,
                    &ft.hstar_m, &ft.hstar_p, &ft.u_m, &ft.u_p, &ft.b_m, &ft.b_p})
      v->resize(static_cast<size_t>(n + 1));
    for (int f = 0; f <= n; ++f) {
      const size_t m = static_cast<size_t>(f), p = static_cast<size_t>(f + 1),
                   k = static_cast<size_t>(f);
      ft.H_m[k] = H_lob_[m][3];
      ft.H_p[k] = H_lob_[p][0];
      ft.hu_m[k] = huR_[m];
      ft.hu_p[k] = huL_[p];
      ft.h_m[k] = hR_[m];
      ft.h_p[k] = hL_[p];
      ft.b_m[k] = bR_[m];
      ft.b_p[k] = bL_[p];
      std::tie(ft.hstar_m[k], ft.hstar_p[k]) =
          hydrostatic_fix(ft.H_m[k], ft.H_p[k], ft.b_m[k], ft.b_p[k]);
      ft.u_m[k] = velocity_from_trace(ft.h_m[k], ft.hu_m[k], opt_.eps_dry);
      ft.u_p[k] = velocity_from_trace(ft.h_p[k], ft.hu_p[k], opt_.eps_dry);
    }
    return ft;
  }

 private:
  // WENO-AO reconstruction over the ring of cells -1..n, followed by the
  // scaling PP limiter when enabled. Ring storage index = cell + 1.
  void compute_traces(const State1D& U, double t) const {
    constexpr int G = Grid1D::n_ghost;
    const int n = grid_.n_cells;
    for (int i = 0; i < n; ++i) {
      Hext_[static_cast<size_t>(i + G)] = U.H_bar[static_cast<size_t>(i)];
      huext_[static_cast<size_t>(i + G)] = U.hu_bar[static_cast<size_t>(i)];
    }
    apply_boundary(Hext_, huext_, n, bc_, t, bath_.b_ext, g_);

    parallel_for(-1, n + 1, [&](long i) {
      const size_t r = static_cast<size_t>(i + 1);
      const size_t s0 = static_cast<size_t>(i + G - 2);
      const ReconPoly PH = weno_ao_blend(&Hext_[s0], weno_);
      for (int l = 0; l < 4; ++l)
        H_lob_[r][static_cast<size_t>(l)] =
            PH.eval(QuadratureTables::lobatto4_nodes[static_cast<size_t>(l)]);
      const ReconPoly Pq = weno_ao_blend(&huext_[s0], weno_);
      huL_[r] = Pq.eval(-0.5);
      huR_[r] = Pq.eval(0.5);
      hL_[r] = H_lob_[r][0] - bath_.cell_left(static_cast<int>(i));
      hR_[r] = H_lob_[r][3] - bath_.cell_right(static_cast<int>(i));
      bL_[r] = bath_.cell_left(static_cast<int>(i));
      bR_[r] = bath_.cell_right(static_cast<int>(i));
    });

    if (opt_.pp_limiter) pp_limit(t);
  }

  // Scaling limiter of the face traces (Steps 3a/3b): pull the depth traces
  // toward the non-negative cell average and redefine the bottom traces
  // through b~ = H - h~ so the lake-at-rest identity b~ + h~ = H survives
  // limiting. The discharge traces are scaled by the same theta; this keeps
  // the trace velocity hu~/h~ bounded by cell-average velocities, which the
  // forward-Euler positivity argument needs (an unscaled hu over a floored
  // depth produces unbounded momentum fluxes at wet/dry fronts).
  void pp_limit(double t) const {
    constexpr int G = Grid1D::n_ghost;
    const int n = grid_.n_cells;

    double hbar_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double hbar = Hext_[static_cast<size_t>(i + G)] - bath_.b_bar(i);
      if (hbar < -1e-13)
        throw InvariantError(
            "pp limiter: negative cell average h = " + std::to_string(hbar) +
            " at cell " + std::to_string(i) + ", t = " + std::to_string(t));
      hbar_min = std::min(hbar_min, hbar);
    }
    const double eta = std::min(1e-13, hbar_min);

    parallel_for(-1, n + 1, [&](long i) {
      const size_t r = static_cast<size_t>(i + 1);
      const double hbar =
          Hext_[static_cast<size_t>(i + G)] - bath_.b_bar(static_cast<int>(i));
      const double theta = pp_theta(hbar, hL_[r], hR_[r], eta);
      if (theta < 1.0) {
        const double qbar = huext_[static_cast<size_t>(i + G)];
        hL_[r] = theta * (hL_[r] - hbar) + hbar;
        hR_[r] = theta * (hR_[r] - hbar) + hbar;
        huL_[r] = theta * (huL_[r] - qbar) + qbar;
        huR_[r] = theta * (huR_[r] - qbar) + qbar;
      }
      bL_[r] = H_lob_[r][0] - hL_[r];
      bR_[r] = H_lob_[r][3] - hR_[r];
    });
  }

  Grid1D grid_;
  BoundaryCondition1D bc_;
  double g_;
  SolverOptions opt_;
  WenoAoConfig weno_;
  Bathymetry1D bath_;

  mutable std::vector<double> Hext_, huext_;
  mutable std::vector<std::array<double, 4>> H_lob_;
  mutable std::vector<double> huL_, huR_, hL_, hR_, bL_, bR_;
  mutable std::vector<double> FH_, Fhu_;
  mutable BoundaryFlux bflux_;
};

// First-order Lax-Friedrichs reference step with the well-balanced flux.
// Keeps h >= 0 under lambda * alpha <= 1; used as a testing reference for the
// positivity analysis, not part of the production scheme.
inline std::vector<double> lf_first_order_step(const std::vector<double>& h,
                                               const std::vector<double>& u,
                                               const std::vector<double>& b,
                                               double lambda, double g) {
  const int n = static_cast<int>(h.size());
  double alpha = 0.0;
  for (int i = 0; i < n; ++i) {
    if (h[static_cast<size_t>(i)] < 0.0)
      throw InvariantError("lf_first_order_step: h must be non-negative");
    alpha = std::max(alpha, std::abs(u[static_cast<size_t>(i)]) +
                                std::sqrt(g * h[static_cast<size_t>(i)]));
  }
  if (lambda * alpha > 1.0 + 1e-12)
    throw InvariantError("lf_first_order_step: CFL contract lambda*alpha <= 1 "
                         "violated");
  auto cell = [&](int i) { return std::clamp(i, 0, n - 1); };  // transmissive
  auto hstar_plus = [&](int i) {
    const size_t c = static_cast<size_t>(cell(i));
    return std::max(0.0, h[c] + b[c] - std::max(b[c], b[static_cast<size_t>(cell(i + 1))]));
  };
  auto hstar_minus = [&](int i) {
    const size_t c = static_cast<size_t>(cell(i));
    return std::max(0.0, h[c] + b[c] - std::max(b[static_cast<size_t>(cell(i - 1))], b[c]));
  };
  auto flux = [&](double hl, double ul, double hr, double ur) {
    return 0.5 * (hl * ul + hr * ur - alpha * (hr - hl));
  };
  std::vector<double> next(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double Fr = flux(hstar_plus(i), u[static_cast<size_t>(cell(i))],
                           hstar_minus(i + 1), u[static_cast<size_t>(cell(i + 1))]);
    const double Fl = flux(hstar_plus(i - 1), u[static_cast<size_t>(cell(i - 1))],
                           hstar_minus(i), u[static_cast<size_t>(cell(i))]);
    next[static_cast<size_t>(i)] = h[static_cast<size_t>(i)] - lambda * (Fr - Fl);
  }
  return next;
}

}  // namespace swe
