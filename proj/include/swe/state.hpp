#pragma once

#include <array>
#include <vector>

namespace swe {

// Cell averages of the equilibrium variables at one time level.
// H = h + b is the surface level, hu the discharge.
struct State1D {
  std::vector<double> H_bar, hu_bar;

  int size() const { return static_cast<int>(H_bar.size()); }
  std::array<std::vector<double>*, 2> components() { return {&H_bar, &hu_bar}; }
  std::array<const std::vector<double>*, 2> components() const {
    return {&H_bar, &hu_bar};
  }
};

inline State1D make_state_1d(int n, double H0 = 0.0, double hu0 = 0.0) {
  State1D s;
  s.H_bar.assign(n, H0);
  s.hu_bar.assign(n, hu0);
  return s;
}

// Row-major interior-only storage: value(i,j) at [j*nx + i].
struct State2D {
  int nx = 0, ny = 0;
  std::vector<double> H_bar, hu_bar, hv_bar;

  long size() const { return static_cast<long>(nx) * ny; }
  std::array<std::vector<double>*, 3> components() {
    return {&H_bar, &hu_bar, &hv_bar};
  }
  std::array<const std::vector<double>*, 3> components() const {
    return {&H_bar, &hu_bar, &hv_bar};
  }
};

inline void copy_shape(State1D&, const State1D&) {}
inline void copy_shape(State2D& dst, const State2D& src) {
  dst.nx = src.nx;
  dst.ny = src.ny;
}

inline State2D make_state_2d(int nx, int ny, double H0 = 0.0) {
  State2D s;
  s.nx = nx;
  s.ny = ny;
  s.H_bar.assign(static_cast<size_t>(nx) * ny, H0);
  s.hu_bar.assign(static_cast<size_t>(nx) * ny, 0.0);
  s.hv_bar.assign(static_cast<size_t>(nx) * ny, 0.0);
  return s;
}

}  // namespace swe
