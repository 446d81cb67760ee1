#pragma once

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "swe/analysis.hpp"
#include "swe/cases.hpp"
#include "swe/io.hpp"
#include "swe/run.hpp"

namespace swe {

// CFL schedule used during mesh refinement so the O(dt^3) time error stays
// below the fifth-order spatial error on every level.
inline double cfl_for_refinement(int n) {
  if (n <= 50) return 0.6;
  if (n <= 100) return 0.4;
  if (n <= 200) return 0.3;
  if (n <= 400) return 0.2;
  return 0.1;
}

struct ResolvedRun {
  const CaseSpec* spec = nullptr;
  int nx = 0, ny = 0;
  double cfl = 0.6;
  double t_final = 0.0;
  bool pp = false;
  bool strict_pp = false;
  std::vector<double> snapshots;
  std::string out_dir = ".";
};

// Fill in case defaults. The PP limiter follows the case unless overridden;
// runs with the limiter default to the provable CFL bound (strict stepping),
// since the scaling limiter guarantees non-negative depths only under it.
inline ResolvedRun resolve_run(const RunConfig& rc) {
  const CaseSpec& spec = find_case(rc.case_name);
  ResolvedRun r;
  r.spec = &spec;
  r.nx = rc.nx.value_or(spec.default_nx);
  r.ny = rc.ny.value_or(spec.default_ny);
  if (r.nx <= 0 || (spec.dim == 2 && r.ny <= 0))
    throw ConfigError("run: grid size must be positive");
  r.cfl = rc.cfl.value_or(0.6);
  if (!(r.cfl > 0.0 && r.cfl <= 1.0))
    throw ConfigError("run: cfl must lie in (0, 1]");
  r.t_final = rc.t_final.value_or(spec.t_final);
  if (r.t_final < 0.0) throw ConfigError("run: t_final must be non-negative");
  r.pp = rc.pp.value_or(spec.pp_required);
  r.strict_pp = rc.strict_pp.value_or(r.pp);
  r.snapshots = rc.snapshots_set ? rc.snapshot_times : spec.snapshot_times;
  r.out_dir = rc.out_dir;
  return r;
}

// Runs one case and writes solution snapshots plus the step log.
inline void cmd_run(const RunConfig& rc, std::ostream& out) {
  const ResolvedRun r = resolve_run(rc);
  const CaseSpec& spec = *r.spec;
  std::filesystem::create_directories(r.out_dir);
  auto path = [&](const std::string& f) { return r.out_dir + "/" + f; };

  StepControl ctl;
  ctl.cfl = r.cfl;
  ctl.strict_pp = r.strict_pp;
  ctl.t_final = r.t_final;
  RunLog log;
  RunOptions ropt;
  ropt.snapshot_times = r.snapshots;

  out << "case " << spec.name << ": n = " << r.nx;
  if (spec.dim == 2) out << " x " << r.ny;
  out << ", cfl = " << r.cfl << (r.strict_pp ? " (pp bound)" : "")
      << ", pp = " << (r.pp ? "on" : "off") << ", t_final = " << r.t_final
      << "\n";

  if (spec.dim == 1) {
    Problem1D p = setup_1d(spec, r.nx);
    p.solver.options().pp_limiter = r.pp;
    auto snap = [&](const State1D& s, double t) {
      write_solution_csv(path(snapshot_filename(t)), p.grid,
                         p.solver.bathymetry(), s);
    };
    if (!r.snapshots.empty() && r.snapshots.front() <= 0.0) snap(p.state, 0.0);
    State1D fin = run_to(p.solver, std::move(p.state), ctl, &log, ropt,
                         SnapshotFn<State1D>(snap));
    snap(fin, r.t_final);
  } else {
    Problem2D p = setup_2d(spec, r.nx, r.ny);
    p.solver.options().pp_limiter = r.pp;
    auto snap = [&](const State2D& s, double t) {
      write_solution_csv(path(snapshot_filename(t)), p.grid,
                         p.solver.bathymetry(), s);
    };
    if (!r.snapshots.empty() && r.snapshots.front() <= 0.0) snap(p.state, 0.0);
    State2D fin = run_to(p.solver, std::move(p.state), ctl, &log, ropt,
                         SnapshotFn<State2D>(snap));
    snap(fin, r.t_final);
  }
  write_run_log_csv(path("run_log.csv"), log);
  double min_h = log.steps.empty() ? 0.0 : log.steps.front().min_h;
  for (const auto& s : log.steps) min_h = std::min(min_h, s.min_h);
  out << "done: " << (log.steps.empty() ? 0 : log.steps.back().step)
      << " steps, min h = " << min_h << ", wrote " << r.out_dir << "\n";
}

// Refinement ladder with the paper's CFL schedule; errors are measured
// against a block-averaged self-run on the reference grid.
inline std::vector<ConvergenceRow> cmd_convergence(
    const std::string& case_name, int levels = 0, int ref_n = 0,
    const std::string& csv_path = {}, std::ostream* out = nullptr) {
  const CaseSpec& spec = find_case(case_name);
  const int base = spec.dim == 1 ? 50 : 25;
  if (levels <= 0) levels = spec.dim == 1 ? 5 : 4;
  const int n_max = base << (levels - 1);
  if (ref_n <= 0) ref_n = spec.dim == 1 ? 4 * n_max : 2 * n_max;
  if (ref_n % n_max != 0)
    throw ConfigError("convergence: reference n must be a multiple of the "
                      "finest ladder level " + std::to_string(n_max));

  auto run_1d = [&](int n) {
    Problem1D p = setup_1d(spec, n);
    StepControl ctl{.cfl = cfl_for_refinement(n), .strict_pp = false,
                    .t_final = spec.t_final};
    return run_to(p.solver, std::move(p.state), ctl);
  };
  auto run_2d = [&](int n) {
    Problem2D p = setup_2d(spec, n, n);
    StepControl ctl{.cfl = cfl_for_refinement(n), .strict_pp = false,
                    .t_final = spec.t_final};
    return run_to(p.solver, std::move(p.state), ctl);
  };

  std::vector<ConvergenceRow> rows;
  if (spec.dim == 1) {
    const State1D ref = run_1d(ref_n);
    for (int k = 0; k < levels; ++k) {
      const int n = base << k;
      const State1D sol = run_1d(n);
      const State1D res = restrict_state(ref, ref_n / n);
      ConvergenceRow row;
      row.n = n;
      row.cfl = cfl_for_refinement(n);
      row.err = error_norms(sol, res, build_grid_1d(spec.x_lo, spec.x_hi, n));
      rows.push_back(row);
    }
  } else {
    const State2D ref = run_2d(ref_n);
    for (int k = 0; k < levels; ++k) {
      const int n = base << k;
      const State2D sol = run_2d(n);
      const State2D res = restrict_state(ref, ref_n / n);
      ConvergenceRow row;
      row.n = n;
      row.cfl = cfl_for_refinement(n);
      row.err = error_norms(sol, res, build_grid_2d(spec.x_lo, spec.x_hi, n,
                                                    spec.y_lo, spec.y_hi, n));
      rows.push_back(row);
    }
  }
  for (size_t k = 1; k < rows.size(); ++k) {
    rows[k].l1_h_order = convergence_order(rows[k - 1].err.h.l1, rows[k].err.h.l1);
    rows[k].l1_hu_order =
        convergence_order(rows[k - 1].err.hu.l1, rows[k].err.hu.l1);
    rows[k].linf_h_order =
        convergence_order(rows[k - 1].err.h.linf, rows[k].err.h.linf);
    rows[k].linf_hu_order =
        convergence_order(rows[k - 1].err.hu.linf, rows[k].err.hu.linf);
    if (spec.dim == 2) {
      rows[k].l1_hv_order =
          convergence_order(rows[k - 1].err.hv.l1, rows[k].err.hv.l1);
      rows[k].linf_hv_order =
          convergence_order(rows[k - 1].err.hv.linf, rows[k].err.hv.linf);
    }
  }
  if (!csv_path.empty()) write_convergence_csv(csv_path, rows, spec.dim == 2);
  if (out) {
    char buf[160];
    *out << "  n    cfl   L1(h)       order  L1(hu)      order  Linf(h)     "
            "order  Linf(hu)    order\n";
    for (const auto& r : rows) {
      auto o = [](const std::optional<double>& v) { return v ? *v : 0.0; };
      std::snprintf(buf, sizeof buf,
                    "%5d  %.2f  %.4e %5.2f  %.4e %5.2f  %.4e %5.2f  %.4e %5.2f\n",
                    r.n, r.cfl, r.err.h.l1, o(r.l1_h_order), r.err.hu.l1,
                    o(r.l1_hu_order), r.err.h.linf, o(r.linf_h_order),
                    r.err.hu.linf, o(r.linf_hu_order));
      *out << buf;
    }
  }
  return rows;
}

struct CPropertyRow {
  std::string name;
  ErrorReport err;
  bool pass = false;
};

// Lake-at-rest suite: evolve each steady case and compare against the initial
// cell averages. Everything must stay at round-off (<= 1e-11).
inline std::vector<CPropertyRow> cmd_cproperty(int dim,
                                               bool disable_hydrostatic_fix =
                                                   false,
                                               std::ostream* out = nullptr) {
  constexpr double tol = 1e-11;
  std::vector<CPropertyRow> rows;
  auto check = [&](const ErrorReport& e, bool with_hv) {
    bool ok = e.h.l1 <= tol && e.h.linf <= tol && e.hu.l1 <= tol &&
              e.hu.linf <= tol;
    if (with_hv) ok = ok && e.hv.l1 <= tol && e.hv.linf <= tol;
    return ok;
  };
  if (dim == 1) {
    for (const char* name : {"ex4.1-smooth", "ex4.1-step", "ex4.1-dry"}) {
      const CaseSpec& spec = find_case(name);
      Problem1D p = setup_1d(spec);
      p.solver.options().disable_hydrostatic_fix = disable_hydrostatic_fix;
      StepControl ctl{.cfl = 0.6, .strict_pp = false, .t_final = spec.t_final};
      const State1D init = p.state;
      const State1D fin = run_to(p.solver, std::move(p.state), ctl);
      CPropertyRow row;
      row.name = name;
      row.err = error_norms(fin, init, p.grid);
      row.pass = check(row.err, false);
      rows.push_back(std::move(row));
    }
  } else {
    for (const char* name : {"ex4.8-smooth", "ex4.8-dry"}) {
      const CaseSpec& spec = find_case(name);
      Problem2D p = setup_2d(spec);
      p.solver.options().disable_hydrostatic_fix = disable_hydrostatic_fix;
      StepControl ctl{.cfl = 0.6, .strict_pp = false, .t_final = spec.t_final};
      const State2D init = p.state;
      const State2D fin = run_to(p.solver, std::move(p.state), ctl);
      CPropertyRow row;
      row.name = name;
      row.err = error_norms(fin, init, p.grid);
      row.pass = check(row.err, true);
      rows.push_back(std::move(row));
    }
  }
  if (out) {
    for (const auto& r : rows) {
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "%-14s L1(h)=%.2e L1(hu)=%.2e Linf(h)=%.2e Linf(hu)=%.2e"
                    "  %s\n",
                    r.name.c_str(), r.err.h.l1, r.err.hu.l1, r.err.h.linf,
                    r.err.hu.linf, r.pass ? "pass" : "FAIL");
      *out << buf;
    }
  }
  return rows;
}

inline void cmd_list(std::ostream& out) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-24s %3s %7s %9s %4s  %s\n", "name", "dim",
                "grid", "t_final", "pp", "description");
  out << buf;
  for (const auto& c : catalogue()) {
    std::string grid = std::to_string(c.default_nx);
    if (c.dim == 2) grid += "x" + std::to_string(c.default_ny);
    std::snprintf(buf, sizeof buf, "%-24s %3d %7s %9g %4s  %s\n",
                  c.name.c_str(), c.dim, grid.c_str(), c.t_final,
                  c.pp_required ? "on" : "off", c.description.c_str());
    out << buf;
  }
}

}  // namespace swe
