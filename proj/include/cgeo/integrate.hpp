#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgeo/geodesic.hpp"
#include "cgeo/metric.hpp"

namespace cgeo {

struct StepControl {
  double rtol = 1e-10;
  double atol = 1e-10;
  double initial_step = 1e-3;
  double min_step = 1e-12;
  /// Upper bound on a single step; <= 0 means no bound beyond the interval length.
  double max_step = 0.0;
  double accel_blowup = 1e8;
  double position_blowup = 1e8;
  double param_blowup = 1e6;
  long max_steps = 2'000'000;

  void validate() const;
};

enum class Termination {
  kCompleted,
  kAccelerationBlowup,
  kParameterBlowup,
  kLeftDomain,
  kStepUnderflow,
};

std::string_view to_string(Termination t) noexcept;

/// One integration run. Sample params are strictly increasing.
///
/// Alongside each state the integrator records the chart second derivative of
/// the position (for Hermite interpolation) and the accumulated Euclidean chart
/// length and metric length of the curve.
struct Trajectory {
  std::vector<GeodesicState> samples;
  std::string metric_name;
  Termination termination = Termination::kCompleted;
  std::string detail;

  std::vector<Vector> chart_acc;
  std::vector<double> chart_length;
  std::vector<double> metric_length;

  /// C form: largest | |U|^2 - 1 | or |C.U| seen at an accepted step before
  /// the projection back onto the constraint set.
  double max_constraint_drift = 0.0;
  long accepted_steps = 0;
  long rejected_steps = 0;

  bool empty() const noexcept { return samples.empty(); }
  const GeodesicState& front() const { return samples.front(); }
  const GeodesicState& back() const { return samples.back(); }
  double param_begin() const { return samples.front().param; }
  double param_end() const { return samples.back().param; }
  double total_chart_length() const { return chart_length.back(); }
};

/// Adaptive Dormand-Prince 5(4) integration of the equation matching
/// init.form from init.param to param_end.
///
/// Blowups are reported through Trajectory::termination, never thrown. Throws
/// kArgument for a malformed request, kConstraintDrift for C-form initial data
/// off the constraint set, and propagates errors at the initial point.
Trajectory integrate(const MetricField& field, const GeodesicState& init, double param_end,
                     const StepControl& ctrl = {});

/// Position on the trajectory at an interior parameter by quintic Hermite
/// interpolation between the neighbouring samples.
Point position_at(const Trajectory& traj, double param);

/// Chart length from the start of the trajectory to param.
double chart_length_at(const Trajectory& traj, double param);

/// Parameter at which the accumulated chart length equals the given value.
double param_at_chart_length(const Trajectory& traj, double length);

/// Positions at the given chart lengths (each within [0, total length]).
std::vector<Point> resample_by_chart_length(const Trajectory& traj, std::span<const double> lengths);

/// Largest pointwise chart distance between the two curves after resampling
/// both at `count` equally spaced chart lengths over their common length.
/// Measures the agreement of the traced point sets independently of
/// parameterization; both curves must start at the same point and run in the
/// same direction.
double arclength_gap(const Trajectory& a, const Trajectory& b, int count = 400);

}  // namespace cgeo
