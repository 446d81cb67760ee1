#pragma once

#include <array>
#include <cmath>
#include <span>

namespace swe {

// Fifth-order adaptive-order WENO reconstruction on the 5-cell stencil
// {v_{i-2}, ..., v_{i+2}}. One quartic candidate spans the full stencil and
// three quadratics span the sub-stencils; the nonlinear weights fall back to
// the quadratics near discontinuities and recover the quartic for smooth data.
//
// All polynomial algebra lives in the cell-normalized coordinate
// xi = (x - x_i)/dx with the cell mapped to [-1/2, 1/2]; the dx^(2a-1) factor
// of the smoothness indicators cancels in this coordinate, so the weights are
// mesh-size independent.

struct Stencil5 {
  std::array<double, 5> v{};  // cell averages, left to right
};

struct WenoAoConfig {
  // Linear weights (gamma_1..gamma_4); any positive numbers summing to 1 work,
  // this is the suggested tuple with 0.85 on the full-stencil quartic.
  std::array<double, 4> gamma{0.01125, 0.1275, 0.01125, 0.85};
  // Floor in the weight ratio tau/(beta + eps). With 1e-12 the weights keep
  // flickering between stencils at bathymetry kinks and steady flows never
  // settle below ~1e-3 residual; 1e-8 lets them converge without measurable
  // effect on smooth-flow accuracy.
  double eps = 1e-8;
};

// Coefficients indexed by power of xi. Quadratics use c[0..2].
struct CandidatePolys {
  std::array<double, 3> p1{}, p2{}, p3{};
  std::array<double, 5> p4{};
};

// Reconstructed polynomial P(xi) = sum_n c[n] xi^n.
struct ReconPoly {
  std::array<double, 5> c{};

  double eval(double xi) const {
    return ((c[4] * xi + c[3]) * xi + c[2]) * xi * xi + c[1] * xi + c[0];
  }
  // dP/dxi; divide by dx for the physical derivative.
  double deval(double xi) const {
    return ((4.0 * c[4] * xi + 3.0 * c[3]) * xi + 2.0 * c[2]) * xi + c[1];
  }
};

// Closed-form fits: each candidate reproduces the cell averages of its
// sub-stencil exactly. p1 spans cells {-2,-1,0}, p2 {-1,0,1}, p3 {0,1,2},
// p4 all five.
inline CandidatePolys fit_candidates(const Stencil5& s) {
  const double v0 = s.v[0], v1 = s.v[1], v2 = s.v[2], v3 = s.v[3], v4 = s.v[4];
  CandidatePolys p;

  p.p1[2] = 0.5 * (v0 - 2.0 * v1 + v2);
  p.p1[1] = 0.5 * v0 - 2.0 * v1 + 1.5 * v2;
  p.p1[0] = v2 - p.p1[2] / 12.0;

  p.p2[2] = 0.5 * (v1 - 2.0 * v2 + v3);
  p.p2[1] = 0.5 * (v3 - v1);
  p.p2[0] = v2 - p.p2[2] / 12.0;

  p.p3[2] = 0.5 * (v2 - 2.0 * v3 + v4);
  p.p3[1] = -1.5 * v2 + 2.0 * v3 - 0.5 * v4;
  p.p3[0] = v2 - p.p3[2] / 12.0;

  // quartic coefficients assembled from finite differences so constant and
  // linear data annihilate exactly instead of to round-off
  const double d1a = v1 - v0, d1b = v2 - v1, d1c = v3 - v2, d1d = v4 - v3;
  const double d2a = d1b - d1a, d2b = d1c - d1b, d2c = d1d - d1c;
  const double d3a = d2b - d2a, d3b = d2c - d2b;
  const double d4 = d3b - d3a;
  p.p4[4] = d4 / 24.0;
  p.p4[3] = (d3a + d3b) / 12.0;
  p.p4[2] = -(d2a + d2c) / 16.0 + (5.0 / 8.0) * d2b;
  p.p4[1] = (-5.0 / 48.0) * (d1a + d1d) + (29.0 / 48.0) * (d1b + d1c);
  p.p4[0] = v2 + (3.0 / 640.0) * (d2a + d2c) - (49.0 / 960.0) * d2b;
  return p;
}

// Smoothness indicator beta = sum_{a=1}^{kappa} int_{-1/2}^{1/2} (p^(a))^2 dxi,
// evaluated in closed form. kappa = 2 for the quadratics, 4 for the quartic;
// beta = 0 exactly iff the polynomial is constant.
inline double smoothness(std::span<const double> coeffs, int kappa) {
  if (kappa == 2) {
    const double a1 = coeffs[1], a2 = coeffs.size() > 2 ? coeffs[2] : 0.0;
    return a1 * a1 + (13.0 / 3.0) * a2 * a2;
  }
  // kappa == 4, quartic
  const double a1 = coeffs[1], a2 = coeffs[2], a3 = coeffs[3], a4 = coeffs[4];
  return a1 * a1 + 0.5 * a1 * a3 + (13.0 / 3.0) * a2 * a2 +
         (21.0 / 5.0) * a2 * a4 + (3129.0 / 80.0) * a3 * a3 +
         (87617.0 / 140.0) * a4 * a4;
}

// tau = (1/3) sum_k |beta_4 - beta_k|, alpha_k = gamma_k [1 + (tau/(beta_k+eps))^2].
inline std::array<double, 4> nonlinear_weights(const std::array<double, 4>& beta,
                                               const WenoAoConfig& cfg) {
  const double tau =
      (std::abs(beta[3] - beta[0]) + std::abs(beta[3] - beta[1]) +
       std::abs(beta[3] - beta[2])) / 3.0;
  std::array<double, 4> w;
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double r = tau / (beta[k] + cfg.eps);
    w[k] = cfg.gamma[k] * (1.0 + r * r);
    sum += w[k];
  }
  const double inv = 1.0 / sum;
  for (double& wk : w) wk *= inv;
  return w;
}

// The full AO blend as a single polynomial:
//   P = (w4/g4) [p4 - sum_k g_k p_k] + sum_k w_k p_k.
inline ReconPoly weno_ao_blend(const Stencil5& s, const WenoAoConfig& cfg) {
  const CandidatePolys p = fit_candidates(s);
  const std::array<double, 4> beta = {
      smoothness(p.p1, 2), smoothness(p.p2, 2), smoothness(p.p3, 2),
      smoothness(p.p4, 4)};
  const std::array<double, 4> w = nonlinear_weights(beta, cfg);

  const double s4 = w[3] / cfg.gamma[3];
  const double c1 = w[0] - s4 * cfg.gamma[0];
  const double c2 = w[1] - s4 * cfg.gamma[1];
  const double c3 = w[2] - s4 * cfg.gamma[2];

  ReconPoly out;
  for (int n = 0; n < 3; ++n)
    out.c[n] = s4 * p.p4[n] + c1 * p.p1[n] + c2 * p.p2[n] + c3 * p.p3[n];
  out.c[3] = s4 * p.p4[3];
  out.c[4] = s4 * p.p4[4];
  return out;
}

inline ReconPoly weno_ao_blend(const double* v, const WenoAoConfig& cfg) {
  return weno_ao_blend(Stencil5{{v[0], v[1], v[2], v[3], v[4]}}, cfg);
}

// Point values of the reconstruction at in-cell locations xi in [-1/2, 1/2].
inline void reconstruct(const Stencil5& s, const WenoAoConfig& cfg,
                        std::span<const double> xi_targets,
                        std::span<double> out) {
  const ReconPoly P = weno_ao_blend(s, cfg);
  for (size_t m = 0; m < xi_targets.size(); ++m) out[m] = P.eval(xi_targets[m]);
}

// First derivative P'(x) = (dP/dxi)/dx at the given in-cell locations.
inline void reconstruct_derivative(const Stencil5& s, const WenoAoConfig& cfg,
                                   double dx, std::span<const double> xi_targets,
                                   std::span<double> out) {
  const ReconPoly P = weno_ao_blend(s, cfg);
  for (size_t m = 0; m < xi_targets.size(); ++m)
    out[m] = P.deval(xi_targets[m]) / dx;
}

}  // namespace swe
