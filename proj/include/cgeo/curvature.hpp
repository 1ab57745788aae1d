#pragma once

#include "cgeo/metric.hpp"
#include "cgeo/tensor.hpp"

namespace cgeo {

/// Christoffel symbols Gamma^a_bc stored as gamma(a, b, c).
using Christoffel = Tensor3;

/// Curvature data of a metric at a single chart point.
///
/// Riemann convention: R^a_bcd = d_c G^a_db - d_d G^a_cb + G^a_ce G^e_db - G^a_de G^e_cb,
/// Ricci R_bd = R^a_bad. With this choice the unit sphere has R = n(n-1) and
/// Schouten P_ab = g_ab / 2.
struct CurvatureAtPoint {
  SymMatrix metric;
  SymMatrix metric_inverse;
  Christoffel gamma;
  SymMatrix ricci;
  double scalar = 0.0;
  /// P_ab = (R_ab - R g_ab / (2(n-1))) / (n-2).
  SymMatrix schouten;
  /// P_b^a as a matrix acting on vectors: (schouten_mixed * V)^a = P_b^a V^b.
  Matrix schouten_mixed;
};

Christoffel christoffel(const MetricField& field, const Point& x);

/// Full curvature at x. Requires n >= 3 (kUnsupportedDimension otherwise).
CurvatureAtPoint curvature_at(const MetricField& field, const Point& x);

/// Connection and Schouten data for driving the conformal geodesic equations.
/// Identical to curvature_at for n >= 3; in dimension two the Schouten tensor
/// has no intrinsic definition, so only flat fields are accepted and P = 0.
CurvatureAtPoint geodesic_data_at(const MetricField& field, const Point& x);

}  // namespace cgeo
