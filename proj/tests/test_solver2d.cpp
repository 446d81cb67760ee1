#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "swe/cases.hpp"
#include "swe/run.hpp"
#include "swe/solver2d.hpp"

using namespace swe;

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
constexpr double kG = 9.812;

Problem2D flat_problem(int nx, int ny, double H0, const BoundaryCondition2D& bc) {
  Grid2D g = build_grid_2d(0, 1, nx, 0, 1, ny);
  Solver2D solver(g, bc, std::vector<double>(static_cast<size_t>(nx) * ny, 0.0), kG);
  State2D s = make_state_2d(nx, ny, H0);
  return {g, std::move(solver), std::move(s)};
}

}  // namespace

TEST_CASE("2d reconstruction of a constant state is exact at every node") {
  const double C = 3.25;
  auto p = flat_problem(16, 12, C, {});
  const auto& e = p.solver.reconstruct(p.state, 0.0);
  for (double v : e.xH_m) CHECK(v == Catch::Approx(C).epsilon(1e-15));
  for (double v : e.xH_p) CHECK(v == Catch::Approx(C).epsilon(1e-15));
  for (double v : e.yH_m) CHECK(v == Catch::Approx(C).epsilon(1e-15));
  for (double v : e.Hsrc1) CHECK(v == Catch::Approx(C).epsilon(1e-15));
  for (double v : e.Hsrc2) CHECK(v == Catch::Approx(C).epsilon(1e-15));
  for (double v : e.xhu_m) CHECK(v == 0.0);
  for (double v : e.yhv_p) CHECK(v == 0.0);
}

TEST_CASE("x-only variation reduces to the 1d reconstruction along each row") {
  const int nx = 24, ny = 10;
  Grid2D g = build_grid_2d(0, 1, nx, 0, 1, ny);
  BoundaryCondition2D per{BcKind::Periodic, BcKind::Periodic, BcKind::Periodic,
                          BcKind::Periodic};
  Solver2D solver(g, per, std::vector<double>(static_cast<size_t>(nx) * ny, 0.0), kG);
  State2D s = make_state_2d(nx, ny);
  std::vector<double> rowH(static_cast<size_t>(nx));
  for (int i = 0; i < nx; ++i)
    rowH[static_cast<size_t>(i)] = 2.0 + std::sin(2 * kPi * g.xc(i));
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      s.H_bar[static_cast<size_t>(j) * nx + i] = rowH[static_cast<size_t>(i)];

  const auto& e = solver.reconstruct(s, 0.0);
  // y-face traces are constant along y and equal at matching nodes
  for (int i = 0; i < nx; ++i)
    for (int gf = 1; gf < ny; ++gf)
      for (int k = 0; k < 3; ++k) {
        CHECK(e.yH_m[ynode(i, gf, k, nx)] ==
              Catch::Approx(e.yH_m[ynode(i, 1, k, nx)]).epsilon(1e-13));
        CHECK(e.yH_m[ynode(i, gf, k, nx)] ==
              Catch::Approx(e.yH_p[ynode(i, gf, k, nx)]).epsilon(1e-13));
      }
  // x-face traces agree with the 1d kernel applied to the row data
  std::vector<double> ext(static_cast<size_t>(nx) + 6);
  for (int i = 0; i < nx; ++i) ext[static_cast<size_t>(i + 3)] = rowH[static_cast<size_t>(i)];
  for (int k = 0; k < 3; ++k) {
    ext[2] = rowH[static_cast<size_t>(nx - 1)];
    ext[1] = rowH[static_cast<size_t>(nx - 2)];
    ext[0] = rowH[static_cast<size_t>(nx - 3)];
    ext[static_cast<size_t>(nx + 3)] = rowH[0];
    ext[static_cast<size_t>(nx + 4)] = rowH[1];
    ext[static_cast<size_t>(nx + 5)] = rowH[2];
  }
  for (int f = 1; f < nx; ++f) {
    const ReconPoly P = weno_ao_blend(&ext[static_cast<size_t>(f)], WenoAoConfig{});
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(e.xH_m[xnode(f, j, k, ny)] ==
              Catch::Approx(P.eval(0.5)).epsilon(1e-12));
  }
}

TEST_CASE("separable smooth traces converge at fifth order") {
  auto H = [](double x, double y) {
    return 5.0 + std::exp(std::sin(2 * kPi * x)) * std::cos(2 * kPi * y);
  };
  BoundaryCondition2D per{BcKind::Periodic, BcKind::Periodic, BcKind::Periodic,
                          BcKind::Periodic};
  auto trace_err = [&](int n) {
    Grid2D g = build_grid_2d(0, 1, n, 0, 1, n);
    Solver2D solver(g, per, std::vector<double>(static_cast<size_t>(n) * n, 0.0), kG);
    State2D s = make_state_2d(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        s.H_bar[static_cast<size_t>(j) * n + i] = cell_average_2d(
            H, g.xface(i), g.xface(i + 1), g.yface(j), g.yface(j + 1));
    const auto& e = solver.reconstruct(s, 0.0);
    double err = 0.0;
    for (int f = 0; f <= n; ++f)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < 3; ++k) {
          const double y = g.yc(j) + QuadratureTables::gauss3_nodes[static_cast<size_t>(k)] * g.dy;
          err = std::max(err, std::abs(e.xH_m[xnode(f, j, k, n)] - H(g.xface(f), y)));
        }
    return err;
  };
  const double e1 = trace_err(24), e2 = trace_err(48);
  CHECK(std::log2(e1 / e2) > 4.3);
}

TEST_CASE("edge flux integrals at the 2d lake at rest") {
  const auto& c = find_case("ex4.8-smooth");
  auto p = setup_2d(c, 40, 40);
  const auto& e = p.solver.reconstruct(p.state, 0.0);
  const auto [a1, a2] = p.solver.wave_speeds(p.state);
  const auto& F = p.solver.flux_integrals(e, p.solver.surface_average(p.state), a1, a2);
  const double expected = 0.5 * kG * 1.0;  // C = 1
  for (size_t q = 0; q < F.PhiH.size(); ++q) {
    CHECK(std::abs(F.PhiH[q]) <= 1e-14);
    CHECK(F.Phihu[q] == Catch::Approx(expected).epsilon(1e-13));
    CHECK(std::abs(F.Phihv[q]) <= 1e-14);
  }
  for (size_t q = 0; q < F.PsiH.size(); ++q) {
    CHECK(std::abs(F.PsiH[q]) <= 1e-14);
    CHECK(std::abs(F.Psihu[q]) <= 1e-14);
    CHECK(F.Psihv[q] == Catch::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("flux integrals match a direct Gauss summation oracle") {
  const auto& c = find_case("ex4.9-accuracy2d");
  auto p = setup_2d(c, 20, 20);
  const int nx = 20, ny = 20;
  const auto& e = p.solver.reconstruct(p.state, 0.0);
  const auto [a1, a2] = p.solver.wave_speeds(p.state);
  const double Hbar = p.solver.surface_average(p.state);
  const auto& F = p.solver.flux_integrals(e, Hbar, a1, a2);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int f = static_cast<int>(rng() % (nx + 1)), j = static_cast<int>(rng() % ny);
    double acc[3] = {0, 0, 0};
    for (int k = 0; k < 3; ++k) {
      const size_t s = xnode(f, j, k, ny);
      const double bf = std::max(e.xb_m[s], e.xb_p[s]);
      const double hsm = std::max(0.0, e.xH_m[s] - bf);
      const double hsp = std::max(0.0, e.xH_p[s] - bf);
      const double cap = std::max(a1, a2);
      const double um = flux_velocity(e.xh_m[s], e.xhu_m[s], 1e-8, cap);
      const double up = flux_velocity(e.xh_p[s], e.xhu_p[s], 1e-8, cap);
      const double vm = flux_velocity(e.xh_m[s], e.xhv_m[s], 1e-8, cap);
      const double vp = flux_velocity(e.xh_p[s], e.xhv_p[s], 1e-8, cap);
      const double Mm = hsm * um * um + kG * (Hbar - e.xH_m[s]) * e.xb_m[s] +
                        0.5 * kG * e.xH_m[s] * e.xH_m[s];
      const double Mp = hsp * up * up + kG * (Hbar - e.xH_p[s]) * e.xb_p[s] +
                        0.5 * kG * e.xH_p[s] * e.xH_p[s];
      const double w = QuadratureTables::gauss3_weights[static_cast<size_t>(k)];
      acc[0] += w * (0.5 * (hsm * um + hsp * up) - 0.5 * a1 * (hsp - hsm));
      acc[1] += w * (0.5 * (Mm + Mp) - 0.5 * a1 * (hsp * up - hsm * um));
      acc[2] += w * (0.5 * (hsm * um * vm + hsp * up * vp) -
                     0.5 * a1 * (hsp * vp - hsm * vm));
    }
    const size_t q = static_cast<size_t>(f) * ny + j;
    CHECK(F.PhiH[q] == Catch::Approx(acc[0]).epsilon(1e-14).margin(1e-14));
    CHECK(F.Phihu[q] == Catch::Approx(acc[1]).epsilon(1e-14).margin(1e-14));
    CHECK(F.Phihv[q] == Catch::Approx(acc[2]).epsilon(1e-14).margin(1e-14));
  }
}

TEST_CASE("2d tensor source quadrature") {
  std::array<double, 12> H1{}, bx{}, H2{}, by{};
  SECTION("H at the global average gives zero") {
    H1.fill(4.0);
    H2.fill(4.0);
    bx.fill(1.3);
    by.fill(-0.4);
    auto S = source_cell_2d(H1.data(), bx.data(), H2.data(), by.data(), 4.0, kG);
    CHECK(S[0] == 0.0);
    CHECK(S[1] == 0.0);
  }
  SECTION("flat bottom gives zero") {
    H1.fill(2.0);
    H2.fill(9.0);
    bx.fill(0.0);
    by.fill(0.0);
    auto S = source_cell_2d(H1.data(), bx.data(), H2.data(), by.data(), 4.0, kG);
    CHECK(S[0] == 0.0);
    CHECK(S[1] == 0.0);
  }
  SECTION("constant offsets recover -g d c") {
    const double d = 0.4, c1 = 2.0, c2 = -0.7;
    H1.fill(4.0 + d);
    H2.fill(4.0 + d);
    bx.fill(c1);
    by.fill(c2);
    auto S = source_cell_2d(H1.data(), bx.data(), H2.data(), by.data(), 4.0, kG);
    CHECK(S[0] == Catch::Approx(-kG * d * c1).epsilon(1e-14));
    CHECK(S[1] == Catch::Approx(-kG * d * c2).epsilon(1e-14));
  }
}

TEST_CASE("2d semi-discrete operator is well-balanced at N=100^2") {
  for (const char* name : {"ex4.8-smooth", "ex4.8-dry"}) {
    CAPTURE(name);
    auto p = setup_2d(find_case(name), 100, 100);
    State2D L;
    p.solver.rhs(p.state, 0.0, L);
    double worst = 0.0;
    for (auto* v : L.components())
      for (double x : *v) worst = std::max(worst, std::abs(x));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("2d pp limiter") {
  SECTION("wet lake at rest leaves traces unlimited") {
    auto p = setup_2d(find_case("ex4.8-smooth"), 24, 24);
    p.solver.options().pp_limiter = true;
    const auto& e = p.solver.reconstruct(p.state, 0.0);
    for (size_t q = 0; q < e.xh_m.size(); ++q) {
      CHECK(e.xh_m[q] + e.xb_m[q] == Catch::Approx(e.xH_m[q]).margin(1e-15));
      CHECK(e.xh_m[q] >= 0.0);
    }
  }
  SECTION("near-dry lake at rest keeps b + h = H and equal h* pairs") {
    auto p = setup_2d(find_case("ex4.8-dry"), 50, 50);
    REQUIRE(p.solver.options().pp_limiter);
    const auto& e = p.solver.reconstruct(p.state, 0.0);
    for (size_t q = 0; q < e.xh_m.size(); ++q) {
      CHECK(e.xh_m[q] + e.xb_m[q] == Catch::Approx(e.xH_m[q]).margin(1e-15));
      const double bf = std::max(e.xb_m[q], e.xb_p[q]);
      const double hsm = std::max(0.0, e.xH_m[q] - bf);
      const double hsp = std::max(0.0, e.xH_p[q] - bf);
      CHECK(hsm == hsp);
    }
  }
  SECTION("y-uniform data reproduces the 1d theta in the x direction") {
    // one near-dry column so theta1 < 1 while theta2 = 1
    const int n = 16;
    Grid2D g = build_grid_2d(0, 1, n, 0, 1, n);
    SolverOptions opt;
    opt.pp_limiter = true;
    Solver2D solver(g, {}, std::vector<double>(static_cast<size_t>(n) * n, 0.0), kG, opt);
    State2D s = make_state_2d(n, n, 1.0);
    for (int j = 0; j < n; ++j) {
      s.H_bar[static_cast<size_t>(j) * n + 7] = 1e-4;  // thin column
      s.H_bar[static_cast<size_t>(j) * n + 8] = 2.0;
    }
    const auto& e = solver.reconstruct(s, 0.0);
    // x-face nodes of the thin column were pulled up to the floor
    for (int j = 2; j < n - 2; ++j)
      for (int k = 0; k < 3; ++k) {
        CHECK(e.xh_p[xnode(7, j, k, n)] >= 0.0);
        CHECK(e.xh_m[xnode(8, j, k, n)] >= 0.0);
      }
    // y-face nodes within the uniform column stay y-independent
    for (int k = 0; k < 3; ++k)
      CHECK(e.yh_p[ynode(7, 5, k, n)] ==
            Catch::Approx(e.yh_p[ynode(7, 9, k, n)]).epsilon(1e-12));
  }
}

TEST_CASE("2d mass conservation under doubly periodic boundaries") {
  auto p = setup_2d(find_case("ex4.9-accuracy2d"), 32, 32);
  double m0 = 0.0;
  for (double H : p.state.H_bar) m0 += H;
  StepControl ctl{.cfl = 0.6, .t_final = 1e9};
  bool landed;
  const double dt = compute_dt(p.solver, p.state, ctl, 0.0, &landed);
  State2D u = p.state, u1, u2, L;
  ssp_rk3_step(u, 0.0, dt,
               [&](const State2D& s, double t, State2D& o) { p.solver.rhs(s, t, o); },
               u1, u2, L);
  double m1 = 0.0;
  for (double H : u.H_bar) m1 += H;
  CHECK(std::abs(m1 - m0) <= 1e-12 * std::abs(m0));
}

TEST_CASE("transpose symmetry: swapping axes commutes with the rhs") {
  const auto& c = find_case("ex4.9-accuracy2d");
  const int n = 32;
  auto p = setup_2d(c, n, n);
  State2D L;
  p.solver.rhs(p.state, 0.0, L);

  auto [s0, b0] = make_initial_2d(c, p.grid);
  State2D st = make_state_2d(n, n);
  std::vector<double> bt(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      st.H_bar[static_cast<size_t>(i) * n + j] = s0.H_bar[static_cast<size_t>(j) * n + i];
      st.hu_bar[static_cast<size_t>(i) * n + j] = s0.hv_bar[static_cast<size_t>(j) * n + i];
      st.hv_bar[static_cast<size_t>(i) * n + j] = s0.hu_bar[static_cast<size_t>(j) * n + i];
      bt[static_cast<size_t>(i) * n + j] = b0[static_cast<size_t>(j) * n + i];
    }
  Solver2D solT(p.grid, c.bc2, bt, c.g);
  State2D Lt;
  solT.rhs(st, 0.0, Lt);
  double dev = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      dev = std::max(dev, std::abs(Lt.H_bar[static_cast<size_t>(i) * n + j] -
                                   L.H_bar[static_cast<size_t>(j) * n + i]));
      dev = std::max(dev, std::abs(Lt.hu_bar[static_cast<size_t>(i) * n + j] -
                                   L.hv_bar[static_cast<size_t>(j) * n + i]));
      dev = std::max(dev, std::abs(Lt.hv_bar[static_cast<size_t>(i) * n + j] -
                                   L.hu_bar[static_cast<size_t>(j) * n + i]));
    }
  CHECK(dev <= 1e-10);
}

TEST_CASE("y-invariant 2d evolution matches the 1d scheme") {
  const auto& c1 = find_case("ex4.2-accuracy");
  const int nx = 50, ny = 12;
  auto p1 = setup_1d(c1, nx);
  auto [s1, b1] = make_initial_1d(c1, p1.grid);

  Grid2D g2 = build_grid_2d(0, 1, nx, 0, 1, ny);
  std::vector<double> b2(static_cast<size_t>(nx) * ny);
  State2D s2 = make_state_2d(nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      b2[static_cast<size_t>(j) * nx + i] = b1[static_cast<size_t>(i)];
      s2.H_bar[static_cast<size_t>(j) * nx + i] = s1.H_bar[static_cast<size_t>(i)];
      s2.hu_bar[static_cast<size_t>(j) * nx + i] = s1.hu_bar[static_cast<size_t>(i)];
    }
  BoundaryCondition2D per{BcKind::Periodic, BcKind::Periodic, BcKind::Periodic,
                          BcKind::Periodic};
  Solver2D sol2(g2, per, b2, c1.g);

  const double dt = 1e-4;
  State1D f1 = run_fixed_steps(p1.solver, s1, dt, 25);
  State2D f2 = run_fixed_steps(sol2, s2, dt, 25);
  double dev = 0.0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      dev = std::max(dev, std::abs(f2.H_bar[static_cast<size_t>(j) * nx + i] -
                                   f1.H_bar[static_cast<size_t>(i)]));
      dev = std::max(dev, std::abs(f2.hu_bar[static_cast<size_t>(j) * nx + i] -
                                   f1.hu_bar[static_cast<size_t>(i)]));
      dev = std::max(dev, std::abs(f2.hv_bar[static_cast<size_t>(j) * nx + i]));
    }
  CHECK(dev <= 1e-12);
}
