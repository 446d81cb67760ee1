#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "swe/solver1d.hpp"
#include "swe/solver2d.hpp"
#include "swe/stepper.hpp"

namespace swe {

inline double compute_dt(const Solver1D& s, const State1D& u,
                         const StepControl& c, double t, bool* landed) {
  return compute_dt_1d(s.max_speed(u), s.grid().dx, c, t, landed);
}

inline double compute_dt(const Solver2D& s, const State2D& u,
                         const StepControl& c, double t, bool* landed) {
  const auto [a1, a2] = s.wave_speeds(u);
  return compute_dt_2d(a1, a2, s.grid().dx, s.grid().dy, c, t, landed);
}

// alpha/dx (1D) or alpha1/dx + alpha2/dy (2D): dt * cfl_rate is the CFL number
// a state actually experiences.
inline double cfl_rate(const Solver1D& s, const State1D& u) {
  return s.max_speed(u) / s.grid().dx;
}

inline double cfl_rate(const Solver2D& s, const State2D& u) {
  const auto [a1, a2] = s.wave_speeds(u);
  return a1 / s.grid().dx + a2 / s.grid().dy;
}

inline double min_depth(const State1D& u, const Solver1D& s) {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < u.size(); ++i)
    m = std::min(m, u.H_bar[static_cast<size_t>(i)] - s.bathymetry().b_bar(i));
  return m;
}

inline double min_depth(const State2D& u, const Solver2D& s) {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < u.ny; ++j)
    for (int i = 0; i < u.nx; ++i)
      m = std::min(m, u.H_bar[static_cast<size_t>(j) * u.nx + i] -
                          s.bathymetry().b_bar(i, j));
  return m;
}

// Water volume sum (h = H - b) * cell area, summed in index order.
inline double total_mass(const State1D& u, const Solver1D& s) {
  double acc = 0.0;
  for (int i = 0; i < u.size(); ++i)
    acc += u.H_bar[static_cast<size_t>(i)] - s.bathymetry().b_bar(i);
  return acc * s.grid().dx;
}

inline double total_mass(const State2D& u, const Solver2D& s) {
  double acc = 0.0;
  for (int j = 0; j < u.ny; ++j)
    for (int i = 0; i < u.nx; ++i)
      acc += u.H_bar[static_cast<size_t>(j) * u.nx + i] - s.bathymetry().b_bar(i, j);
  return acc * s.grid().dx * s.grid().dy;
}

namespace detail {
inline void accumulate_boundary(const Solver1D& s, double weight_dt,
                                double* outflow) {
  const auto f = s.last_boundary_flux();
  *outflow += weight_dt * (f.right - f.left);
}
inline void accumulate_boundary(const Solver2D&, double, double*) {}
}  // namespace detail

template <class State>
using SnapshotFn = std::function<void(const State&, double)>;

struct RunOptions {
  std::vector<double> snapshot_times;  // must be sorted ascending
  bool keep_log = true;
  long log_stride = 1;  // record every k-th step (first/last always kept)
};

// Advances the state to control.t_final with SSP-RK3 and adaptive dt; lands
// exactly on every snapshot time strictly inside (t0, t_final) and on t_final
// itself. Outputs at t0 and t_final are the caller's job. The log records
// per-step t, dt, min depth and total mass; boundary_outflow integrates the
// RK-weighted mass flux through the domain ends (1D).
template <class Solver, class State>
State run_to(const Solver& solver, State state, const StepControl& control,
             RunLog* log = nullptr, const RunOptions& ropt = {},
             SnapshotFn<State> on_snapshot = {}, double t0 = 0.0) {
  double t = t0;
  State u1, u2, L;
  long step = 0;
  size_t next_snap = 0;
  const auto& snaps = ropt.snapshot_times;
  while (next_snap < snaps.size() &&
         (snaps[next_snap] <= t0 || snaps[next_snap] >= control.t_final))
    ++next_snap;

  // RK weights of the three stage fluxes in the completed step
  constexpr double stage_w[3] = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};
  struct StepRejected {};
  State saved;

  while (t < control.t_final) {
    if (step >= control.max_steps)
      throw StallError("max_steps = " + std::to_string(control.max_steps) +
                       " exceeded at t = " + std::to_string(t));
    bool landed = false;
    double dt = compute_dt(solver, state, control, t, &landed);
    bool snap_landing = false;
    if (next_snap < snaps.size() && t + dt >= snaps[next_snap]) {
      dt = snaps[next_snap] - t;
      landed = false;
      snap_landing = true;
    }

    // The PP bound lambda*alpha <= 1/12 must hold for the alpha each stage
    // actually sees, and alpha can grow within a step near violent fronts.
    // Reject and retry with a halved step when a stage overruns the bound
    // (or dips below zero through an overlong stage).
    double outflow = 0.0;
    int stage = 0;
    auto attempt = [&](double trial_dt) {
      outflow = log ? log->boundary_outflow : 0.0;
      stage = 0;
      auto rhs = [&](const State& u, double ts, State& out) {
        solver.rhs(u, ts, out);
        detail::accumulate_boundary(solver, stage_w[stage] * trial_dt, &outflow);
        ++stage;
      };
      auto fix = [&](State& s) {
        solver.post_stage(s);
        if (control.strict_pp &&
            trial_dt * cfl_rate(solver, s) > (1.0 / 12.0) * 1.0001)
          throw StepRejected{};
      };
      ssp_rk3_step(state, t, trial_dt, rhs, u1, u2, L, fix);
    };
    if (control.strict_pp) {
      saved = state;
      int tries = 0;
      for (;;) {
        try {
          attempt(dt);
          break;
        } catch (const StepRejected&) {
        } catch (const InvariantError&) {
          if (tries >= 30) throw;
        }
        if (++tries > 30)
          throw StallError("step rejected 30 times at t = " + std::to_string(t));
        state = saved;
        dt *= 0.5;
        landed = false;
        snap_landing = false;
      }
    } else {
      attempt(dt);
    }
    t = landed ? control.t_final : (snap_landing ? snaps[next_snap] : t + dt);
    ++step;

    if (log) {
      log->boundary_outflow = outflow;
      if (ropt.keep_log &&
          (step % ropt.log_stride == 0 || landed || snap_landing || step == 1))
        log->steps.push_back({step, t, dt, min_depth(state, solver),
                              total_mass(state, solver)});
    }
    if (snap_landing) {
      if (on_snapshot) on_snapshot(state, t);
      ++next_snap;
      while (next_snap < snaps.size() && snaps[next_snap] >= control.t_final)
        ++next_snap;
    }
  }
  return state;
}

// Fixed-step variant used by equivalence tests (1D vs y-invariant 2D).
template <class Solver, class State>
State run_fixed_steps(const Solver& solver, State state, double dt, long steps,
                      double t0 = 0.0) {
  State u1, u2, L;
  double t = t0;
  for (long k = 0; k < steps; ++k) {
    auto rhs = [&](const State& u, double ts, State& out) {
      solver.rhs(u, ts, out);
    };
    ssp_rk3_step(state, t, dt, rhs, u1, u2, L,
                 [&](State& s) { solver.post_stage(s); });
    t += dt;
  }
  return state;
}

}  // namespace swe
