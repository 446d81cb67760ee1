#pragma once

#include <stdexcept>
#include <string>

namespace swe {

// Bad run configuration (degenerate domain, unknown case, unparsable override).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite value produced by the spatial operator.
struct BlowupError : std::runtime_error {
  BlowupError(const std::string& what, long cell, double t)
      : std::runtime_error(what), cell_index(cell), time(t) {}
  long cell_index = -1;
  int rk_stage = -1;  // filled in by the time stepper
  double time = 0.0;
};

// Time integration cannot make progress (zero wave speed before t_final,
// or the step budget ran out).
struct StallError : std::runtime_error {
  explicit StallError(const std::string& what) : std::runtime_error(what) {}
};

// A contract the scheme relies on was violated (negative cell average with
// the positivity limiter active, CFL contract of the first-order step, ...).
struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace swe
