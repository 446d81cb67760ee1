#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "swe/cases.hpp"
#include "swe/run.hpp"
#include "swe/solver1d.hpp"

using namespace swe;

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
constexpr double kG = 9.812;
}

TEST_CASE("global surface average") {
  State1D s;
  s.H_bar = {1, 2, 3};
  s.hu_bar = {0, 0, 0};
  CHECK(global_surface_average(s) == Catch::Approx(2.0).margin(1e-15));

  s.H_bar.assign(128, 10.0);
  s.hu_bar.assign(128, 0.0);
  CHECK(global_surface_average(s) == 10.0);

  // averages of 5 + e^{cos 2 pi x} on [0,1]; oracle is a fine Simpson rule
  Grid1D g = build_grid_1d(0, 1, 100);
  auto f = [](double x) { return 5.0 + std::exp(std::cos(2.0 * kPi * x)); };
  State1D t;
  t.H_bar = cell_average_scalar(f, g);
  t.hu_bar.assign(100, 0.0);
  const int m = 100000;
  double simpson = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double w = (k == 0 || k == m) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    simpson += w * f(static_cast<double>(k) / m);
  }
  simpson /= 3.0 * m;
  CHECK(global_surface_average(t) == Catch::Approx(simpson).epsilon(1e-12));
}

TEST_CASE("velocity desingularization") {
  CHECK(velocity_from_trace(2.0, 4.0) == 2.0);
  CHECK(velocity_from_trace(0.0, 0.0) == 0.0);
  CHECK(velocity_from_trace(1e-14, 1e-14) == 0.0);  // below eps_dry
  CHECK(flux_velocity(1e-9, 1.0, 1e-8, 20.0) == 0.0);
  CHECK(flux_velocity(1e-4, 1.0, 1e-8, 20.0) == 20.0);  // capped at alpha
}

TEST_CASE("hydrostatic reconstruction of face depths") {
  auto [a, b] = hydrostatic_fix(10.0, 10.0, 4.0, 0.0);
  CHECK(a == 6.0);
  CHECK(b == 6.0);

  auto [c, d] = hydrostatic_fix(0.5, 0.5, 1.0, 1.0);
  CHECK(c == 0.0);
  CHECK(d == 0.0);

  // equal surface levels produce an equal pair for any bottoms
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int k = 0; k < 50; ++k) {
    const double C = 5.0 + U(rng);
    auto [hm, hp] = hydrostatic_fix(C, C, U(rng), U(rng));
    CHECK(hm == hp);
    CHECK(hm >= 0.0);
  }
}

TEST_CASE("maximum wave speed over cell averages") {
  const BoundaryCondition1D bc{bc_transmissive(), bc_transmissive()};
  Grid1D g = build_grid_1d(0, 1, 10);
  Bathymetry1D bath = precompute_bathymetry_1d(std::vector<double>(10, 0.0), g, bc);

  State1D s = make_state_1d(10, 10.0, 0.0);
  CHECK(max_wave_speed(s, bath, kG) ==
        Catch::Approx(std::sqrt(kG * 10.0)).epsilon(1e-14));

  State1D dry = make_state_1d(10, 0.0, 0.0);
  CHECK(max_wave_speed(dry, bath, kG) == 0.0);

  State1D mix = make_state_1d(10, 1.0, 3.0);  // h = 1, u = 3
  for (int i = 5; i < 10; ++i) {
    mix.H_bar[static_cast<size_t>(i)] = 4.0;   // h = 4
    mix.hu_bar[static_cast<size_t>(i)] = -4.0; // u = -1
  }
  const double expected =
      std::max(3.0 + std::sqrt(kG), 1.0 + 2.0 * std::sqrt(kG));
  CHECK(max_wave_speed(mix, bath, kG) == Catch::Approx(expected).epsilon(1e-14));
}

TEST_CASE("CST Lax-Friedrichs flux") {
  SECTION("lake at rest gives (0, g C^2 / 2)") {
    FaceVals f;
    f.H_m = f.H_p = 10.0;
    f.hstar_m = f.hstar_p = 6.0;
    f.u_m = f.u_p = 0.0;
    f.b_m = 4.0;
    f.b_p = 4.0;
    auto F = lf_flux_cst(f, 10.0, 9.9, kG);
    CHECK(F[0] == 0.0);
    CHECK(F[1] == Catch::Approx(490.6).epsilon(1e-14));
  }
  SECTION("fully dry trace reduces to the averaged pressure terms") {
    FaceVals f;
    f.H_m = 2.0;
    f.H_p = 2.5;
    f.b_m = 2.0;
    f.b_p = 2.5;
    f.hstar_m = f.hstar_p = 0.0;
    f.u_m = f.u_p = 0.0;
    const double Hbar = 3.7, alpha = 5.0;
    auto F = lf_flux_cst(f, Hbar, alpha, kG);
    CHECK(F[0] == 0.0);
    auto M = [&](double H, double b) {
      return kG * (Hbar - H) * b + 0.5 * kG * H * H;
    };
    CHECK(F[1] == Catch::Approx(0.5 * (M(2.0, 2.0) + M(2.5, 2.5))).epsilon(1e-14));
  }
  SECTION("mirror symmetry: F_H antisymmetric, F_hu symmetric") {
    FaceVals f;
    f.H_m = 2.0;
    f.H_p = 2.2;
    f.hstar_m = 1.4;
    f.hstar_p = 1.6;
    f.u_m = 0.8;
    f.u_p = -0.3;
    f.b_m = 0.6;
    f.b_p = 0.6;
    FaceVals m;  // left-right mirrored with u -> -u
    m.H_m = f.H_p;
    m.H_p = f.H_m;
    m.hstar_m = f.hstar_p;
    m.hstar_p = f.hstar_m;
    m.u_m = -f.u_p;
    m.u_p = -f.u_m;
    m.b_m = f.b_p;
    m.b_p = f.b_m;
    auto F = lf_flux_cst(f, 2.5, 6.0, kG);
    auto Fm = lf_flux_cst(m, 2.5, 6.0, kG);
    CHECK(Fm[0] == Catch::Approx(-F[0]).margin(1e-14));
    CHECK(Fm[1] == Catch::Approx(F[1]).margin(1e-13));
  }
}

TEST_CASE("Gauss-Lobatto source integral") {
  const std::array<double, 4> zeros{0, 0, 0, 0};
  SECTION("H at the global average gives zero") {
    const std::array<double, 4> H{7.0, 7.0, 7.0, 7.0};
    const std::array<double, 4> bx{1.0, -2.0, 0.3, 5.0};
    CHECK(source_integral(H, bx, 7.0, kG) == 0.0);
  }
  SECTION("flat bottom gives zero") {
    const std::array<double, 4> H{1.0, 2.0, 3.0, 4.0};
    CHECK(source_integral(H, zeros, 7.0, kG) == 0.0);
  }
  SECTION("constant offset and slope") {
    const double d = 0.25, c = 1.5;
    const std::array<double, 4> H{7.0 + d, 7.0 + d, 7.0 + d, 7.0 + d};
    const std::array<double, 4> bx{c, c, c, c};
    CHECK(source_integral(H, bx, 7.0, kG) ==
          Catch::Approx(-kG * d * c).epsilon(1e-14));
  }
}

TEST_CASE("semi-discrete operator is well-balanced") {
  for (const char* name : {"ex4.1-smooth", "ex4.1-step", "ex4.1-dry"}) {
    CAPTURE(name);
    auto p = setup_1d(find_case(name), 200);
    State1D L;
    p.solver.rhs(p.state, 0.0, L);
    double worst = 0.0;
    for (double v : L.H_bar) worst = std::max(worst, std::abs(v));
    for (double v : L.hu_bar) worst = std::max(worst, std::abs(v));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("constant state over a flat bottom has zero rhs") {
  Grid1D g = build_grid_1d(0, 1, 20);
  Solver1D solver(g, {bc_transmissive(), bc_transmissive()},
                  std::vector<double>(20, 0.0), kG);
  State1D s = make_state_1d(20, 2.0, 0.0);
  State1D L;
  solver.rhs(s, 0.0, L);
  for (double v : L.H_bar) CHECK(std::abs(v) <= 1e-13);
  for (double v : L.hu_bar) CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("mass is conserved under periodic boundaries") {
  auto p = setup_1d(find_case("ex4.2-accuracy"), 100);
  double m0 = 0.0;
  for (double H : p.state.H_bar) m0 += H;
  StepControl ctl{.cfl = 0.6, .t_final = 1e9};
  bool landed;
  const double dt = compute_dt(p.solver, p.state, ctl, 0.0, &landed);
  State1D u = p.state, u1, u2, L;
  ssp_rk3_step(u, 0.0, dt,
               [&](const State1D& s, double t, State1D& o) { p.solver.rhs(s, t, o); },
               u1, u2, L);
  double m1 = 0.0;
  for (double H : u.H_bar) m1 += H;
  CHECK(std::abs(m1 - m0) <= 1e-12 * std::abs(m0));
}

TEST_CASE("rhs reports non-finite fluxes as blowup") {
  Grid1D g = build_grid_1d(0, 1, 12);
  Solver1D solver(g, {bc_transmissive(), bc_transmissive()},
                  std::vector<double>(12, 0.0), kG);
  State1D s = make_state_1d(12, 1.0, 0.0);
  s.H_bar[5] = std::numeric_limits<double>::quiet_NaN();
  State1D L;
  CHECK_THROWS_AS(solver.rhs(s, 0.0, L), BlowupError);
}

TEST_CASE("pp limiter auxiliary quantities") {
  SECTION("worked example") {
    const double hbar = 0.1, hL = -0.05, hR = 0.2;
    CHECK(pp_auxiliary_xi(hbar, hL, hR) == Catch::Approx(0.105).epsilon(1e-14));
    const double eta = 1e-13;
    const double theta = pp_theta(hbar, hL, hR, eta);
    CHECK(theta == Catch::Approx((hbar - eta) / 0.15).epsilon(1e-12));
    // the limited left trace lands exactly on the floor
    const double limited = theta * (hL - hbar) + hbar;
    CHECK(limited == Catch::Approx(eta).margin(1e-16));
  }
  SECTION("no limiting when every value clears the floor") {
    CHECK(pp_theta(0.5, 0.3, 0.4, 1e-13) == 1.0);
  }
}

TEST_CASE("pp limiter keeps the lake-at-rest identity b + h = H") {
  auto p = setup_1d(find_case("ex4.1-dry"), 200);
  REQUIRE(p.solver.options().pp_limiter);
  FaceTrace1D ft = p.solver.face_traces(p.state, 0.0);
  for (int f = 0; f <= 200; ++f) {
    const size_t k = static_cast<size_t>(f);
    CHECK(ft.h_m[k] + ft.b_m[k] == Catch::Approx(ft.H_m[k]).margin(1e-15));
    CHECK(ft.h_p[k] + ft.b_p[k] == Catch::Approx(ft.H_p[k]).margin(1e-15));
    CHECK(ft.hstar_m[k] == ft.hstar_p[k]);  // equal pairs at lake-at-rest
    CHECK(ft.hstar_m[k] >= 0.0);
  }
}

TEST_CASE("pp limiter rejects negative cell averages") {
  Grid1D g = build_grid_1d(0, 1, 12);
  SolverOptions opt;
  opt.pp_limiter = true;
  Solver1D solver(g, {bc_transmissive(), bc_transmissive()},
                  std::vector<double>(12, 0.0), kG, opt);
  State1D s = make_state_1d(12, 1.0, 0.0);
  s.H_bar[4] = -0.01;
  State1D L;
  CHECK_THROWS_AS(solver.rhs(s, 0.0, L), InvariantError);
}

TEST_CASE("first-order LF reference step") {
  SECTION("still constant water stays put") {
    std::vector<double> h(10, 2.5), u(10, 0.0), b(10, 0.0);
    auto next = lf_first_order_step(h, u, b, 0.01, kG);
    for (double v : next) CHECK(v == Catch::Approx(2.5).margin(1e-15));
  }
  SECTION("dam break cell row stays non-negative at the CFL limit") {
    std::vector<double> h{1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0};
    std::vector<double> u(7, 0.0), b(7, 0.0);
    const double alpha = std::sqrt(kG);
    auto next = lf_first_order_step(h, u, b, 1.0 / alpha, kG);
    for (double v : next) CHECK(v >= 0.0);
  }
  SECTION("CFL contract violation is rejected") {
    std::vector<double> h(10, 1.0), u(10, 0.0), b(10, 0.0);
    CHECK_THROWS_AS(lf_first_order_step(h, u, b, 10.0, kG), InvariantError);
    std::vector<double> neg(10, 1.0);
    neg[3] = -0.1;
    CHECK_THROWS_AS(lf_first_order_step(neg, u, b, 0.001, kG), InvariantError);
  }
  SECTION("positivity on 1000 randomized states") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> Uh(0.0, 3.0), Uu(-2.0, 2.0), Ub(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 24;
      std::vector<double> h(n), u(n), b(n);
      for (int i = 0; i < n; ++i) {
        h[static_cast<size_t>(i)] = (rng() % 5 == 0) ? 0.0 : Uh(rng);
        u[static_cast<size_t>(i)] = Uu(rng);
        b[static_cast<size_t>(i)] = Ub(rng);
      }
      double alpha = 0.0;
      for (int i = 0; i < n; ++i)
        alpha = std::max(alpha, std::abs(u[static_cast<size_t>(i)]) +
                                    std::sqrt(kG * h[static_cast<size_t>(i)]));
      const double lambda = 0.99 / alpha;
      auto next = lf_first_order_step(h, u, b, lambda, kG);
      for (double v : next) CHECK(v >= 0.0);
    }
  }
}

TEST_CASE("forward Euler with the limiter preserves positivity under the pp bound") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const int n = 64;
  Grid1D g = build_grid_1d(0, 1, n);
  const BoundaryCondition1D bc{bc_periodic(), bc_periodic()};

  for (int trial = 0; trial < 120; ++trial) {
    // random smooth-ish bottom and depth with dry patches
    std::vector<double> b(n), hbar(n);
    const double phase1 = U(rng) * 2 * kPi, phase2 = U(rng) * 2 * kPi;
    const double amp = U(rng);
    for (int i = 0; i < n; ++i) {
      const double x = g.center(i);
      b[static_cast<size_t>(i)] = 0.5 * amp * (1.0 + std::sin(2 * kPi * x + phase1));
      double h = std::sin(4 * kPi * x + phase2) + 0.6;
      hbar[static_cast<size_t>(i)] = std::max(0.0, h);
    }
    SolverOptions opt;
    opt.pp_limiter = true;
    Solver1D solver(g, bc, b, kG, opt);
    State1D s;
    s.H_bar.resize(static_cast<size_t>(n));
    s.hu_bar.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      s.H_bar[static_cast<size_t>(i)] = hbar[static_cast<size_t>(i)] + solver.bathymetry().b_bar(i);
      s.hu_bar[static_cast<size_t>(i)] = hbar[static_cast<size_t>(i)] * (2.0 * U(rng) - 1.0);
    }
    const double alpha = solver.max_speed(s);
    if (alpha <= 0.0) continue;
    const double dt = (1.0 / 12.0) * g.dx / alpha;
    State1D L;
    solver.rhs(s, 0.0, L);
    for (int i = 0; i < n; ++i) {
      const double h_next = s.H_bar[static_cast<size_t>(i)] +
                            dt * L.H_bar[static_cast<size_t>(i)] -
                            solver.bathymetry().b_bar(i);
      CHECK(h_next >= -1e-14);
    }
  }
}
