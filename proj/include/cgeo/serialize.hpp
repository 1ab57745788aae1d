#pragma once

#include <string>

#include "cgeo/curvature.hpp"
#include "cgeo/integrate.hpp"

namespace cgeo {

/// Shortest round-trip decimal representation; identical input gives
/// identical text on every run.
std::string format_number(double v);

/// Header `param,x_1..x_n,vel_1..vel_n,acc_1..acc_n`, one row per sample.
std::string trajectory_to_csv(const Trajectory& traj);

/// {"metric", "formulation", "dimension", "termination", "detail",
///  "accepted_steps", "rejected_steps", "samples": [{"param", "x", "vel", "acc"}]}
std::string trajectory_to_json(const Trajectory& traj);

/// {"metric_name", "dimension", "point", "metric", "metric_inverse",
///  "christoffel", "ricci", "scalar", "schouten", "schouten_mixed"}
std::string curvature_to_json(const CurvatureAtPoint& curv, const std::string& metric_name,
                              const Point& x);

}  // namespace cgeo
