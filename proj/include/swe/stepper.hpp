#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "swe/errors.hpp"
#include "swe/state.hpp"

namespace swe {

struct StepControl {
  double cfl = 0.6;
  bool strict_pp = false;  // enforce the provable PP bound lambda*alpha <= 1/12
  double t_final = 0.0;
  long max_steps = 100'000'000;
};

inline double effective_cfl(const StepControl& c) {
  return c.strict_pp ? std::min(c.cfl, 1.0 / 12.0) : c.cfl;
}

namespace detail {
inline double clip_to_final(double dt_raw, double t, double t_final,
                            bool* landed) {
  if (t + dt_raw >= t_final) {
    *landed = true;
    return t_final - t;
  }
  *landed = false;
  return dt_raw;
}
}  // namespace detail

// dt = cfl dx / alpha, clipped so the last step lands on t_final exactly.
inline double compute_dt_1d(double alpha, double dx, const StepControl& c,
                            double t, bool* landed = nullptr) {
  if (alpha <= 0.0) {
    if (t < c.t_final)
      throw StallError("zero wave speed at t = " + std::to_string(t) +
                       " before t_final; run is stalled");
    if (landed) *landed = true;
    return 0.0;
  }
  bool flag = false;
  const double dt =
      detail::clip_to_final(effective_cfl(c) * dx / alpha, t, c.t_final, &flag);
  if (landed) *landed = flag;
  return dt;
}

// dt (alpha1/dx + alpha2/dy) = cfl.
inline double compute_dt_2d(double alpha1, double alpha2, double dx, double dy,
                            const StepControl& c, double t,
                            bool* landed = nullptr) {
  const double rate = alpha1 / dx + alpha2 / dy;
  if (rate <= 0.0) {
    if (t < c.t_final)
      throw StallError("zero wave speed at t = " + std::to_string(t) +
                       " before t_final; run is stalled");
    if (landed) *landed = true;
    return 0.0;
  }
  bool flag = false;
  const double dt = detail::clip_to_final(effective_cfl(c) / rate, t, c.t_final, &flag);
  if (landed) *landed = flag;
  return dt;
}

namespace detail {
template <class State>
void axpy_stage(State& out, double a, const State& u, double b,
                const State& v, double c_dt, const State& L) {
  copy_shape(out, u);
  auto po = out.components();
  auto pu = u.components();
  auto pv = v.components();
  auto pl = L.components();
  for (size_t k = 0; k < po.size(); ++k) {
    auto& o = *po[k];
    const auto& x = *pu[k];
    const auto& y = *pv[k];
    const auto& l = *pl[k];
    const size_t n = x.size();
    o.resize(n);
    for (size_t i = 0; i < n; ++i)
      o[i] = a * x[i] + b * y[i] + c_dt * l[i];
  }
}
}  // namespace detail

// Third-order strong-stability-preserving Runge-Kutta step:
//   U1 = U + dt L(U)
//   U2 = 3/4 U + 1/4 U1 + 1/4 dt L(U1)
//   U  = 1/3 U + 2/3 U2 + 2/3 dt L(U2)
// Each stage is a convex combination of forward-Euler steps, so stagewise
// positivity carries over to the full step. The stage_fix hook runs on every
// freshly combined stage state (wetting/drying cleanup). Rhs errors gain the
// stage index.
template <class State, class RhsFn, class StageFix>
void ssp_rk3_step(State& u, double t, double dt, RhsFn&& rhs, State& u1,
                  State& u2, State& L, StageFix&& stage_fix) {
  int stage = 0;
  try {
    rhs(u, t, L);
    detail::axpy_stage(u1, 1.0, u, 0.0, u, dt, L);
    stage_fix(u1);
    stage = 1;
    rhs(u1, t + dt, L);
    detail::axpy_stage(u2, 0.75, u, 0.25, u1, 0.25 * dt, L);
    stage_fix(u2);
    stage = 2;
    rhs(u2, t + 0.5 * dt, L);
    detail::axpy_stage(u, 1.0 / 3.0, u, 2.0 / 3.0, u2, 2.0 / 3.0 * dt, L);
    stage_fix(u);
  } catch (BlowupError& e) {
    e.rk_stage = stage;
    throw;
  }
}

template <class State, class RhsFn>
void ssp_rk3_step(State& u, double t, double dt, RhsFn&& rhs, State& u1,
                  State& u2, State& L) {
  ssp_rk3_step(u, t, dt, rhs, u1, u2, L, [](State&) {});
}

struct StepRecord {
  long step = 0;
  double t = 0.0, dt = 0.0, min_h = 0.0, total_mass = 0.0;
};

struct RunLog {
  std::vector<StepRecord> steps;
  // time integral of the boundary mass fluxes (1D runs), RK-weighted
  double boundary_outflow = 0.0;
};

}  // namespace swe
