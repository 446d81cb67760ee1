#pragma once

#include <array>

namespace swe {

// Quadrature rules on the cell-normalized interval [-1/2, 1/2].
// All weights sum to 1, so a rule applied to cell data yields a cell average.
struct QuadratureTables {
  // 4-point Gauss-Lobatto, exact for polynomials of degree <= 5.
  // Nodes are the cell faces and the two interior points +- sqrt(5)/10.
  static constexpr std::array<double, 4> lobatto4_nodes = {
      -0.5, -0.22360679774997896, 0.22360679774997896, 0.5};
  static constexpr std::array<double, 4> lobatto4_weights = {
      1.0 / 12.0, 5.0 / 12.0, 5.0 / 12.0, 1.0 / 12.0};

  // 3-point Gauss-Legendre, exact for degree <= 5. Nodes +- sqrt(15)/10 and 0.
  static constexpr std::array<double, 3> gauss3_nodes = {
      -0.38729833462074169, 0.0, 0.38729833462074169};
  static constexpr std::array<double, 3> gauss3_weights = {
      5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

  // 5-point Gauss-Legendre, exact for degree <= 9. Used to turn analytic
  // initial data and bathymetry into cell averages without degrading the
  // fifth-order accuracy of the scheme.
  static constexpr std::array<double, 5> gauss5_nodes = {
      -0.45308992296933200, -0.26923465505284155, 0.0,
      0.26923465505284155, 0.45308992296933200};
  static constexpr std::array<double, 5> gauss5_weights = {
      0.11846344252809454, 0.23931433524968323, 0.28444444444444444,
      0.23931433524968323, 0.11846344252809454};
};

}  // namespace swe
