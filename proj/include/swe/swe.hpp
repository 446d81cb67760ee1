#pragma once

// Well-balanced fifth-order finite volume solver for the shallow water
// equations: WENO-AO reconstruction, constant-subtraction flux/source form,
// hydrostatic reconstruction, scaling positivity limiter, SSP-RK3.

#include "swe/analysis.hpp"
#include "swe/bathymetry.hpp"
#include "swe/boundary.hpp"
#include "swe/cases.hpp"
#include "swe/errors.hpp"
#include "swe/grid.hpp"
#include "swe/io.hpp"
#include "swe/parallel.hpp"
#include "swe/quadrature.hpp"
#include "swe/run.hpp"
#include "swe/solver1d.hpp"
#include "swe/solver2d.hpp"
#include "swe/state.hpp"
#include "swe/stepper.hpp"
#include "swe/weno_ao.hpp"
