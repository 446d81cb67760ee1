#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swe/bathymetry.hpp"
#include "swe/boundary.hpp"
#include "swe/errors.hpp"
#include "swe/grid.hpp"
#include "swe/solver1d.hpp"
#include "swe/solver2d.hpp"
#include "swe/state.hpp"

namespace swe {

// What can serve as reference data for a case.
struct Reference {
  enum class Kind {
    None,         // snapshots only
    SteadyState,  // the initial state is the exact solution for all t
    Exact,        // closed-form (x, t) solution
    Asymptotic,   // highly accurate approximate solution
    FineGrid      // self-run on a refined grid, restricted by block averaging
  };
  Kind kind = Kind::None;
  int refine_factor = 8;
  std::function<std::array<double, 2>(double, double)> eval;  // (x,t) -> (h,hu)
};

// One benchmark: domain, bottom, initial data, boundaries, horizon, grid and
// expected checks. Piecewise-defined data carries exact interval averages so
// quadrature across jumps never pollutes the initial cell averages.
struct CaseSpec {
  std::string name;
  std::string description;
  int dim = 1;
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  int default_nx = 100, default_ny = 1;
  double g = 9.812;
  double t_final = 1.0;
  bool pp_required = false;
  std::vector<double> snapshot_times;

  BoundaryCondition1D bc1;
  BoundaryCondition2D bc2;

  std::function<double(double)> b, H0, hu0;
  AvgFn1D b_avg, H0_avg, hu0_avg;

  std::function<double(double, double)> b2, H02, hu02, hv02;
  AvgFn2D b2_avg, H02_avg, hu02_avg, hv02_avg;

  Reference reference;
};

namespace detail {

constexpr double kPi = std::numbers::pi_v<double>;

// fraction of [x0, x1] covered by [a, b]
inline double overlap_fraction(double x0, double x1, double a, double b) {
  const double lo = std::max(x0, a), hi = std::min(x1, b);
  return hi > lo ? (hi - lo) / (x1 - x0) : 0.0;
}

// average over [x0, x1] of a two-piece constant with jump at xj
inline AvgFn1D piecewise_const_avg(double xj, double left, double right) {
  return [=](double x0, double x1) {
    const double fr = overlap_fraction(x0, x1, xj, 1e300);
    return left * (1.0 - fr) + right * fr;
  };
}

// average of c * 1_{[a,b]}
inline AvgFn1D indicator_avg(double a, double b, double c, double base = 0.0) {
  return [=](double x0, double x1) {
    return base + c * overlap_fraction(x0, x1, a, b);
  };
}

}  // namespace detail

// Dry-bed dam break over a flat bottom with still water of depth h_l on the
// left of x = 0: still region, rarefaction fan, dry region.
inline std::array<double, 2> ritter_solution(double x, double t, double h_l,
                                             double g) {
  if (t <= 0.0) return {x <= 0.0 ? h_l : 0.0, 0.0};
  const double c = std::sqrt(g * h_l);
  if (x < -c * t) return {h_l, 0.0};
  if (x > 2.0 * c * t) return {0.0, 0.0};
  const double h = (2.0 * c - x / t) * (2.0 * c - x / t) / (9.0 * g);
  const double u = 2.0 / 3.0 * (x / t + c);
  return {h, h * u};
}

namespace detail {

inline CaseSpec base_1d(std::string name, std::string descr, double x_lo,
                        double x_hi, int n, double t_final) {
  CaseSpec c;
  c.name = std::move(name);
  c.description = std::move(descr);
  c.dim = 1;
  c.x_lo = x_lo;
  c.x_hi = x_hi;
  c.default_nx = n;
  c.t_final = t_final;
  c.bc1 = {bc_transmissive(), bc_transmissive()};
  c.b = [](double) { return 0.0; };
  c.hu0 = [](double) { return 0.0; };
  return c;
}

inline void finalize_avgs(CaseSpec& c) {
  if (c.dim == 1) {
    if (!c.b_avg) c.b_avg = avg_fn_1d(c.b);
    if (!c.H0_avg) c.H0_avg = avg_fn_1d(c.H0);
    if (!c.hu0_avg) c.hu0_avg = avg_fn_1d(c.hu0);
  } else {
    if (!c.hu02) c.hu02 = [](double, double) { return 0.0; };
    if (!c.hv02) c.hv02 = [](double, double) { return 0.0; };
    if (!c.b2_avg) c.b2_avg = avg_fn_2d(c.b2);
    if (!c.H02_avg) c.H02_avg = avg_fn_2d(c.H02);
    if (!c.hu02_avg) c.hu02_avg = avg_fn_2d(c.hu02);
    if (!c.hv02_avg) c.hv02_avg = avg_fn_2d(c.hv02);
  }
}

inline std::vector<CaseSpec> build_catalogue() {
  std::vector<CaseSpec> cat;
  const double pi = kPi;

  // --- lake at rest over three bottoms, surface level 10 on [0, 10] ---
  auto steady_ref = [](const CaseSpec& c) {
    Reference r;
    r.kind = Reference::Kind::SteadyState;
    r.eval = [b = c.b, H = c.H0, hu = c.hu0](double x, double) {
      return std::array<double, 2>{H(x) - b(x), hu(x)};
    };
    return r;
  };

  {
    CaseSpec c = base_1d("ex4.1-smooth", "lake at rest, smooth bump", 0, 10,
                         200, 0.5);
    c.b = [](double x) { return 5.0 * std::exp(-0.4 * (x - 5.0) * (x - 5.0)); };
    c.H0 = [](double) { return 10.0; };
    c.reference = steady_ref(c);
    cat.push_back(std::move(c));
  }
  {
    CaseSpec c = base_1d("ex4.1-step", "lake at rest, discontinuous bump", 0,
                         10, 200, 0.5);
    c.b = [](double x) { return (x >= 4.0 && x <= 8.0) ? 4.0 : 0.0; };
    c.b_avg = indicator_avg(4.0, 8.0, 4.0);
    c.H0 = [](double) { return 10.0; };
    c.reference = steady_ref(c);
    cat.push_back(std::move(c));
  }
  {
    CaseSpec c = base_1d("ex4.1-dry", "lake at rest touching the bump crest",
                         0, 10, 200, 0.5);
    c.b = [](double x) { return 10.0 * std::exp(-0.4 * (x - 5.0) * (x - 5.0)); };
    c.H0 = [](double) { return 10.0; };
    c.pp_required = true;
    c.reference = steady_ref(c);
    cat.push_back(std::move(c));
  }

  // --- smooth accuracy test on [0, 1], periodic ---
  {
    CaseSpec c = base_1d("ex4.2-accuracy", "smooth accuracy test", 0, 1, 200,
                         0.1);
    c.bc1 = {bc_periodic(), bc_periodic()};
    c.b = [pi](double x) {
      const double s = std::sin(pi * x);
      return s * s;
    };
    c.H0 = [pi, b = c.b](double x) {
      return 5.0 + std::exp(std::cos(2.0 * pi * x)) + b(x);
    };
    c.hu0 = [pi](double x) { return std::sin(std::cos(2.0 * pi * x)); };
    c.reference.kind = Reference::Kind::FineGrid;
    c.reference.refine_factor = 4;
    cat.push_back(std::move(c));
  }

  // --- tidal wave flow on [0, 14000] ---
  {
    const double L = 14000.0;
    CaseSpec c = base_1d("ex4.3-tidal", "tidal wave over sloping bed", 0, L,
                         200, 7552.13);
    c.b = [pi, L](double x) {
      return 10.0 + 40.0 * x / L + 10.0 * std::sin(4.0 * pi * x / L - pi / 2.0);
    };
    c.H0 = [](double) { return 60.5; };
    auto surface = [pi](double t) {
      return 64.5 - 4.0 * std::sin(4.0 * pi * t / 86400.0 + pi / 2.0);
    };
    c.bc1.left = bc_fixed_surface(surface);
    c.bc1.right = bc_fixed_discharge([](double) { return 0.0; });
    c.reference.kind = Reference::Kind::Asymptotic;
    c.reference.eval = [pi, L, surface, b = c.b](double x, double t) {
      const double H = surface(t);
      const double hu = pi * (x - L) / 5400.0 *
                        std::cos(4.0 * pi * t / 86400.0 + pi / 2.0);
      return std::array<double, 2>{H - b(x), hu};
    };
    cat.push_back(std::move(c));
  }

  // --- small perturbation of the lake at rest on [0, 2] ---
  auto pulse_case = [&](const char* name, double eps) {
    CaseSpec c = base_1d(name, "perturbed lake at rest", 0, 2, 200, 0.2);
    c.b = [pi](double x) {
      return (x >= 1.4 && x <= 1.6)
                 ? 0.25 * (std::cos(10.0 * pi * (x - 1.5)) + 1.0)
                 : 0.0;
    };
    c.H0 = [eps](double x) {
      return 1.0 + ((x >= 1.1 && x <= 1.2) ? eps : 0.0);
    };
    c.H0_avg = indicator_avg(1.1, 1.2, eps, 1.0);
    c.reference.kind = Reference::Kind::FineGrid;
    c.reference.refine_factor = 8;
    return c;
  };
  cat.push_back(pulse_case("ex4.4-pulse-big", 0.2));
  cat.push_back(pulse_case("ex4.4-pulse-small", 0.001));

  // --- dam break over a rectangular bump on [0, 1500] ---
  {
    CaseSpec c = base_1d("ex4.5-dambreak-bump", "dam break over a bump", 0,
                         1500, 400, 60.0);
    c.snapshot_times = {15.0, 60.0};
    c.b = [](double x) { return std::abs(x - 750.0) <= 187.5 ? 8.0 : 0.0; };
    c.b_avg = indicator_avg(562.5, 937.5, 8.0);
    c.H0 = [](double x) { return x <= 750.0 ? 20.0 : 15.0; };
    c.H0_avg = piecewise_const_avg(750.0, 20.0, 15.0);
    c.reference.kind = Reference::Kind::FineGrid;
    c.reference.refine_factor = 8;
    cat.push_back(std::move(c));
  }

  // --- steady flows over a parabolic hump on [0, 25] ---
  auto hump_case = [&](const char* name, const char* descr, double inflow_hu,
                       double outflow_H) {
    CaseSpec c = base_1d(name, descr, 0, 25, 400, 200.0);
    c.b = [](double x) {
      return (x >= 8.0 && x <= 12.0) ? 0.2 - 0.05 * (x - 10.0) * (x - 10.0)
                                     : 0.0;
    };
    c.b_avg = [](double x0, double x1) {
      // exact piecewise integral of the parabolic hump
      auto anti = [](double x) {
        const double s = x - 10.0;
        return 0.2 * x - 0.05 * s * s * s / 3.0;
      };
      const double lo = std::max(x0, 8.0), hi = std::min(x1, 12.0);
      return hi > lo ? (anti(hi) - anti(lo)) / (x1 - x0) : 0.0;
    };
    c.H0 = [](double) { return 0.5; };
    c.bc1.left = bc_steady_inflow(inflow_hu);
    c.bc1.right = bc_steady_outflow(outflow_H, inflow_hu);
    return c;
  };
  cat.push_back(hump_case("ex4.6-subcritical", "subcritical steady flow", 4.42, 2.0));
  cat.push_back(hump_case("ex4.6-transcritical",
                          "transcritical steady flow without shock", 1.53, 0.41));
  cat.push_back(hump_case("ex4.6-transcritical-shock",
                          "transcritical steady flow with shock", 0.18, 0.33));

  // --- positivity tests in 1D ---
  {
    CaseSpec c = base_1d("ex4.7-drybed", "dam break onto a dry bed", -300, 300,
                         250, 12.0);
    c.snapshot_times = {4.0, 8.0};
    c.H0 = [](double x) { return x <= 0.0 ? 10.0 : 0.0; };
    c.H0_avg = piecewise_const_avg(0.0, 10.0, 0.0);
    c.pp_required = true;
    c.reference.kind = Reference::Kind::Exact;
    c.reference.eval = [](double x, double t) {
      return ritter_solution(x, t, 10.0, 9.812);
    };
    cat.push_back(std::move(c));
  }
  {
    CaseSpec c = base_1d("ex4.7-drying", "double rarefaction drying the middle",
                         -200, 400, 250, 6.0);
    c.snapshot_times = {2.0, 4.0};
    c.H0 = [](double x) { return x <= 0.0 ? 5.0 : 10.0; };
    c.H0_avg = piecewise_const_avg(0.0, 5.0, 10.0);
    c.hu0 = [](double x) { return x <= 0.0 ? 0.0 : 400.0; };
    c.hu0_avg = piecewise_const_avg(0.0, 0.0, 400.0);
    c.pp_required = true;
    c.reference.kind = Reference::Kind::FineGrid;
    c.reference.refine_factor = 8;
    cat.push_back(std::move(c));
  }
  {
    CaseSpec c = base_1d("ex4.7-outflow", "supercritical outflow over a bump",
                         0, 25, 250, 0.65);
    c.snapshot_times = {0.25};
    c.b = [](double x) { return (x >= 25.0 / 3.0 && x <= 12.5) ? 1.0 : 0.0; };
    c.b_avg = indicator_avg(25.0 / 3.0, 12.5, 1.0);
    c.H0 = [](double) { return 10.0; };
    c.hu0 = [](double x) { return x <= 50.0 / 3.0 ? -350.0 : 350.0; };
    c.hu0_avg = piecewise_const_avg(50.0 / 3.0, -350.0, 350.0);
    c.pp_required = true;
    c.reference.kind = Reference::Kind::FineGrid;
    c.reference.refine_factor = 8;
    cat.push_back(std::move(c));
  }

  // --- 2D lake at rest on [0,1]^2 ---
  auto cproperty_2d = [&](const char* name, double amp) {
    CaseSpec c;
    c.name = name;
    c.description = "2D lake at rest over a Gaussian bump";
    c.dim = 2;
    c.x_lo = 0;
    c.x_hi = 1;
    c.y_lo = 0;
    c.y_hi = 1;
    c.default_nx = 100;
    c.default_ny = 100;
    c.t_final = 0.1;
    c.b2 = [amp](double x, double y) {
      return amp * std::exp(-50.0 * ((x - 0.5) * (x - 0.5) +
                                     (y - 0.5) * (y - 0.5)));
    };
    c.H02 = [](double, double) { return 1.0; };
    c.reference.kind = Reference::Kind::SteadyState;
    return c;
  };
  cat.push_back(cproperty_2d("ex4.8-smooth", 0.8));
  {
    CaseSpec c = cproperty_2d("ex4.8-dry", 1.0);
    c.description = "2D lake at rest touching the bump crest";
    c.pp_required = true;
    cat.push_back(std::move(c));
  }

  // --- 2D smooth accuracy test ---
  {
    CaseSpec c;
    c.name = "ex4.9-accuracy2d";
    c.description = "2D smooth accuracy test";
    c.dim = 2;
    c.x_lo = 0;
    c.x_hi = 1;
    c.y_lo = 0;
    c.y_hi = 1;
    c.default_nx = 100;
    c.default_ny = 100;
    c.t_final = 0.05;
    c.bc2 = {BcKind::Periodic, BcKind::Periodic, BcKind::Periodic,
             BcKind::Periodic};
    c.b2 = [pi](double x, double y) {
      return std::sin(2.0 * pi * x) + std::cos(2.0 * pi * y);
    };
    c.H02 = [pi, b = c.b2](double x, double y) {
      return 10.0 + std::exp(std::sin(2.0 * pi * x)) * std::cos(2.0 * pi * y) +
             b(x, y);
    };
    c.hu02 = [pi](double x, double y) {
      return std::sin(std::cos(2.0 * pi * x)) * std::sin(2.0 * pi * y);
    };
    c.hv02 = [pi](double x, double y) {
      return std::cos(2.0 * pi * x) * std::cos(std::sin(2.0 * pi * y));
    };
    c.reference.kind = Reference::Kind::FineGrid;
    c.reference.refine_factor = 2;
    cat.push_back(std::move(c));
  }

  // --- 2D small perturbation over an elliptic hump ---
  {
    CaseSpec c;
    c.name = "ex4.10-perturbation2d";
    c.description = "small surface pulse passing an elliptic hump";
    c.dim = 2;
    c.x_lo = 0;
    c.x_hi = 2;
    c.y_lo = 0;
    c.y_hi = 1;
    c.default_nx = 200;
    c.default_ny = 100;
    c.t_final = 0.6;
    c.snapshot_times = {0.12, 0.24, 0.36, 0.48};
    c.b2 = [](double x, double y) {
      return 0.8 * std::exp(-5.0 * (x - 0.9) * (x - 0.9) -
                            50.0 * (y - 0.5) * (y - 0.5));
    };
    c.H02 = [](double x, double) {
      return 1.0 + ((x >= 0.05 && x <= 0.15) ? 0.01 : 0.0);
    };
    c.H02_avg = [](double x0, double x1, double, double) {
      return 1.0 + 0.01 * overlap_fraction(x0, x1, 0.05, 0.15);
    };
    cat.push_back(std::move(c));
  }

  // --- 2D circular dam break over an isolated bump ---
  {
    CaseSpec c;
    c.name = "ex4.11-circular-dambreak";
    c.description = "circular dam break over a cosine-squared island";
    c.dim = 2;
    c.x_lo = 0;
    c.x_hi = 2;
    c.y_lo = 0;
    c.y_hi = 2;
    c.default_nx = 200;
    c.default_ny = 200;
    c.t_final = 0.15;
    c.b2 = [pi](double x, double y) {
      const double r2 = (x - 1.5) * (x - 1.5) + (y - 1.0) * (y - 1.0);
      if (r2 > 0.25) return 0.0;
      return 0.125 * (std::cos(2.0 * pi * (x - 0.5)) + 1.0) *
             (std::cos(2.0 * pi * y) + 1.0);
    };
    c.H02 = [](double x, double y) {
      const double r2 = (x - 1.25) * (x - 1.25) + (y - 1.0) * (y - 1.0);
      return r2 <= 0.01 ? 1.1 : 0.6;
    };
    cat.push_back(std::move(c));
  }

  // --- 2D positivity tests ---
  {
    CaseSpec c;
    c.name = "ex4.12-oblique";
    c.description = "oblique dry front over a flat bottom";
    c.dim = 2;
    c.x_lo = -0.5;
    c.x_hi = 0.5;
    c.y_lo = -0.5;
    c.y_hi = 0.5;
    c.default_nx = 100;
    c.default_ny = 100;
    c.t_final = 0.1;
    c.snapshot_times = {0.02, 0.06};
    c.b2 = [](double, double) { return 0.0; };
    c.H02 = [](double x, double y) { return x + y <= 0.0 ? 1.0 : 0.0; };
    c.pp_required = true;
    c.reference.kind = Reference::Kind::FineGrid;
    c.reference.refine_factor = 4;
    cat.push_back(std::move(c));
  }
  auto outflow_2d = [&](const char* name,
                        std::function<double(double)> stripe) {
    CaseSpec c;
    c.name = name;
    c.description = "supercritical outflow drying the middle, 2D";
    c.dim = 2;
    c.x_lo = 0;
    c.x_hi = 25;
    c.y_lo = 0;
    c.y_hi = 25;
    c.default_nx = 250;
    c.default_ny = 250;
    c.t_final = 0.65;
    c.snapshot_times = {0.05, 0.25};
    c.b2 = [stripe](double x, double) {
      return (x >= 25.0 / 3.0 && x <= 12.5) ? stripe(x) : 0.0;
    };
    auto stripe_avg = avg_fn_1d([stripe](double x) {
      return (x >= 25.0 / 3.0 && x <= 12.5) ? stripe(x) : 0.0;
    });
    c.b2_avg = [stripe_avg](double x0, double x1, double, double) {
      return stripe_avg(x0, x1);
    };
    c.H02 = [](double, double) { return 10.0; };
    c.hu02 = [](double x, double) { return x <= 50.0 / 3.0 ? -350.0 : 350.0; };
    c.hu02_avg = [](double x0, double x1, double, double) {
      const double fr = overlap_fraction(x0, x1, 50.0 / 3.0, 1e300);
      return -350.0 * (1.0 - fr) + 350.0 * fr;
    };
    c.pp_required = true;
    c.reference.kind = Reference::Kind::FineGrid;
    c.reference.refine_factor = 4;
    return c;
  };
  cat.push_back(outflow_2d("ex4.12-step", [](double) { return 1.0; }));
  {
    const double pi_ = kPi;
    CaseSpec c = outflow_2d("ex4.12-hump", [pi_](double x) {
      return std::sin(6.0 * pi_ * (x / 25.0 - 1.0 / 3.0));
    });
    c.name = "ex4.12-hump";
    // closed-form stripe average for the sine hump
    c.b2_avg = [pi_](double x0, double x1, double, double) {
      auto anti = [pi_](double x) {
        return -25.0 / (6.0 * pi_) *
               std::cos(6.0 * pi_ * (x / 25.0 - 1.0 / 3.0));
      };
      const double lo = std::max(x0, 25.0 / 3.0), hi = std::min(x1, 12.5);
      return hi > lo ? (anti(hi) - anti(lo)) / (x1 - x0) : 0.0;
    };
    cat.push_back(std::move(c));
  }

  for (auto& c : cat) finalize_avgs(c);
  return cat;
}

}  // namespace detail

inline const std::vector<CaseSpec>& catalogue() {
  static const std::vector<CaseSpec> cat = detail::build_catalogue();
  return cat;
}

inline const CaseSpec& find_case(std::string_view name) {
  for (const auto& c : catalogue())
    if (c.name == name) return c;
  throw ConfigError("unknown case '" + std::string(name) +
                    "'; run the list command for the catalogue");
}

// Pointwise reference values (h, hu) at (x, t).
inline std::array<double, 2> reference_solution(const CaseSpec& c, double x,
                                                double t) {
  using K = Reference::Kind;
  if (c.reference.kind == K::Exact || c.reference.kind == K::Asymptotic)
    return c.reference.eval(x, t);
  if (c.reference.kind == K::SteadyState && c.dim == 1)
    return std::array<double, 2>{c.H0(x) - c.b(x), c.hu0(x)};
  throw ConfigError("case '" + c.name +
                    "' has no pointwise reference solution");
}

// Initial cell averages (state + bottom) on a given grid.
inline std::pair<State1D, std::vector<double>> make_initial_1d(
    const CaseSpec& c, const Grid1D& grid) {
  State1D s;
  s.H_bar.resize(static_cast<size_t>(grid.n_cells));
  s.hu_bar.resize(static_cast<size_t>(grid.n_cells));
  std::vector<double> b_bar(static_cast<size_t>(grid.n_cells));
  for (int i = 0; i < grid.n_cells; ++i) {
    const double x0 = grid.face(i), x1 = grid.face(i + 1);
    s.H_bar[static_cast<size_t>(i)] = c.H0_avg(x0, x1);
    s.hu_bar[static_cast<size_t>(i)] = c.hu0_avg(x0, x1);
    b_bar[static_cast<size_t>(i)] = c.b_avg(x0, x1);
  }
  return {std::move(s), std::move(b_bar)};
}

inline std::pair<State2D, std::vector<double>> make_initial_2d(
    const CaseSpec& c, const Grid2D& grid) {
  State2D s = make_state_2d(grid.nx, grid.ny);
  std::vector<double> b_bar(static_cast<size_t>(grid.nx) * grid.ny);
  for (int j = 0; j < grid.ny; ++j) {
    const double y0 = grid.yface(j), y1 = grid.yface(j + 1);
    for (int i = 0; i < grid.nx; ++i) {
      const double x0 = grid.xface(i), x1 = grid.xface(i + 1);
      const size_t q = static_cast<size_t>(j) * grid.nx + i;
      s.H_bar[q] = c.H02_avg(x0, x1, y0, y1);
      s.hu_bar[q] = c.hu02_avg(x0, x1, y0, y1);
      s.hv_bar[q] = c.hv02_avg(x0, x1, y0, y1);
      b_bar[q] = c.b2_avg(x0, x1, y0, y1);
    }
  }
  return {std::move(s), std::move(b_bar)};
}

// Grid + solver + initial state for a case, with optional resolution override.
struct Problem1D {
  Grid1D grid;
  Solver1D solver;
  State1D state;
};

inline Problem1D setup_1d(const CaseSpec& c, int n = 0) {
  if (c.dim != 1) throw ConfigError("case '" + c.name + "' is not 1D");
  Grid1D grid = build_grid_1d(c.x_lo, c.x_hi, n > 0 ? n : c.default_nx);
  auto [state, b_bar] = make_initial_1d(c, grid);
  SolverOptions opt;
  opt.pp_limiter = c.pp_required;
  return {grid, Solver1D(grid, c.bc1, std::move(b_bar), c.g, opt),
          std::move(state)};
}

struct Problem2D {
  Grid2D grid;
  Solver2D solver;
  State2D state;
};

inline Problem2D setup_2d(const CaseSpec& c, int nx = 0, int ny = 0) {
  if (c.dim != 2) throw ConfigError("case '" + c.name + "' is not 2D");
  Grid2D grid = build_grid_2d(c.x_lo, c.x_hi, nx > 0 ? nx : c.default_nx,
                              c.y_lo, c.y_hi, ny > 0 ? ny : c.default_ny);
  auto [state, b_bar] = make_initial_2d(c, grid);
  SolverOptions opt;
  opt.pp_limiter = c.pp_required;
  return {grid, Solver2D(grid, c.bc2, std::move(b_bar), c.g, opt),
          std::move(state)};
}

}  // namespace swe
