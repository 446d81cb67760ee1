#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "swe/bathymetry.hpp"
#include "swe/errors.hpp"
#include "swe/grid.hpp"
#include "swe/state.hpp"

namespace swe {

struct Norms {
  double l1 = 0.0;
  double linf = 0.0;
};

// L1 = dx sum |e_i| (dx dy in 2D), Linf = max |e_i|, measured on the evolved
// cell averages per variable. Depth errors equal surface-level errors here
// because both states share the bottom averages.
struct ErrorReport {
  Norms h, hu, hv;
};

namespace detail {
inline Norms norms_of_diff(const std::vector<double>& a,
                           const std::vector<double>& b, double cell_measure) {
  Norms n;
  for (size_t i = 0; i < a.size(); ++i) {
    const double e = std::abs(a[i] - b[i]);
    n.l1 += e;
    if (e > n.linf) n.linf = e;
  }
  n.l1 *= cell_measure;
  return n;
}
}  // namespace detail

inline ErrorReport error_norms(const State1D& num, const State1D& ref,
                               const Grid1D& grid) {
  if (num.size() != ref.size() || num.size() != grid.n_cells)
    throw ConfigError("error_norms: grid mismatch");
  ErrorReport r;
  r.h = detail::norms_of_diff(num.H_bar, ref.H_bar, grid.dx);
  r.hu = detail::norms_of_diff(num.hu_bar, ref.hu_bar, grid.dx);
  return r;
}

inline ErrorReport error_norms(const State2D& num, const State2D& ref,
                               const Grid2D& grid) {
  if (num.nx != ref.nx || num.ny != ref.ny || num.nx != grid.nx ||
      num.ny != grid.ny)
    throw ConfigError("error_norms: grid mismatch");
  const double measure = grid.dx * grid.dy;
  ErrorReport r;
  r.h = detail::norms_of_diff(num.H_bar, ref.H_bar, measure);
  r.hu = detail::norms_of_diff(num.hu_bar, ref.hu_bar, measure);
  r.hv = detail::norms_of_diff(num.hv_bar, ref.hv_bar, measure);
  return r;
}

// order = log2(e_N / e_2N); undefined when either error vanishes.
inline std::optional<double> convergence_order(double e_coarse, double e_fine) {
  if (e_coarse <= 0.0 || e_fine <= 0.0) return std::nullopt;
  return std::log2(e_coarse / e_fine);
}

// max norm of (U^{n+1} - U^n)/dt over all variables and cells.
template <class State>
double steadiness_residual(const State& prev, const State& next, double dt) {
  double m = 0.0;
  auto pa = prev.components();
  auto pb = next.components();
  for (size_t k = 0; k < pa.size(); ++k) {
    const auto& a = *pa[k];
    const auto& b = *pb[k];
    for (size_t i = 0; i < a.size(); ++i)
      m = std::max(m, std::abs(b[i] - a[i]));
  }
  return m / dt;
}

// Fr = |u| / sqrt(g h); undefined for non-positive depth.
inline std::optional<double> froude(double h, double u, double g) {
  if (h <= 0.0) return std::nullopt;
  return std::abs(u) / std::sqrt(g * h);
}

// Exact block-average restriction of a fine-grid field to a coarse grid;
// preserves the global mean bit-for-bit up to summation round-off.
inline std::vector<double> block_restrict_1d(const std::vector<double>& fine,
                                             int factor) {
  const size_t n = fine.size() / static_cast<size_t>(factor);
  std::vector<double> coarse(n);
  for (size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < factor; ++k) acc += fine[i * factor + k];
    coarse[i] = acc / factor;
  }
  return coarse;
}

inline std::vector<double> block_restrict_2d(const std::vector<double>& fine,
                                             int nx_fine, int ny_fine,
                                             int factor) {
  const int nx = nx_fine / factor, ny = ny_fine / factor;
  std::vector<double> coarse(static_cast<size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      double acc = 0.0;
      for (int fj = 0; fj < factor; ++fj)
        for (int fi = 0; fi < factor; ++fi)
          acc += fine[static_cast<size_t>(j * factor + fj) * nx_fine +
                      (i * factor + fi)];
      coarse[static_cast<size_t>(j) * nx + i] = acc / (factor * factor);
    }
  }
  return coarse;
}

inline State1D restrict_state(const State1D& fine, int factor) {
  State1D s;
  s.H_bar = block_restrict_1d(fine.H_bar, factor);
  s.hu_bar = block_restrict_1d(fine.hu_bar, factor);
  return s;
}

inline State2D restrict_state(const State2D& fine, int factor) {
  State2D s;
  s.nx = fine.nx / factor;
  s.ny = fine.ny / factor;
  s.H_bar = block_restrict_2d(fine.H_bar, fine.nx, fine.ny, factor);
  s.hu_bar = block_restrict_2d(fine.hu_bar, fine.nx, fine.ny, factor);
  s.hv_bar = block_restrict_2d(fine.hv_bar, fine.nx, fine.ny, factor);
  return s;
}

}  // namespace swe
