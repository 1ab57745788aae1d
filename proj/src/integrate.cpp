#include "cgeo/integrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>

#include "cgeo/curvature.hpp"

namespace cgeo {

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::kCompleted: return "completed";
    case Termination::kAccelerationBlowup: return "acceleration_blowup";
    case Termination::kParameterBlowup: return "parameter_blowup";
    case Termination::kLeftDomain: return "left_domain";
    case Termination::kStepUnderflow: return "step_underflow";
  }
  return "unknown";
}

void StepControl::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorCode::kArgument, std::string("step control '") + name + "' must be positive");
  };
  positive(rtol, "rtol");
  positive(atol, "atol");
  positive(initial_step, "initial_step");
  positive(min_step, "min_step");
  positive(accel_blowup, "accel_blowup");
  positive(position_blowup, "position_blowup");
  positive(param_blowup, "param_blowup");
  if (!std::isfinite(max_step)) throw Error(ErrorCode::kArgument, "max_step must be finite");
  if (max_steps <= 0) throw Error(ErrorCode::kArgument, "max_steps must be positive");
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr std::array<double, 7> kC = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// Fifth-order weights minus embedded fourth-order weights.
constexpr std::array<double, 7> kE = {71.0 / 57600,  0.0,         -71.0 / 16695, 71.0 / 1920,
                                      -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

using State = std::vector<double>;

// Packed layout: x[n], vel[n], acc[n], chart length, metric length.
class Packed {
 public:
  explicit Packed(int n) : n_(n) {}
  std::size_t size() const { return static_cast<std::size_t>(3 * n_ + 2); }

  State pack(const GeodesicState& s, double chart_len, double metric_len) const {
    State y(size());
    for (int i = 0; i < n_; ++i) {
      y[i] = s.x[i];
      y[n_ + i] = s.vel[i];
      y[2 * n_ + i] = s.acc[i];
    }
    y[3 * n_] = chart_len;
    y[3 * n_ + 1] = metric_len;
    return y;
  }

  GeodesicState unpack(const State& y, Formulation form, double param) const {
    GeodesicState s;
    s.form = form;
    s.param = param;
    s.x = Point(std::span<const double>(y.data(), n_));
    s.vel = Vector(std::span<const double>(y.data() + n_, n_));
    s.acc = Vector(std::span<const double>(y.data() + 2 * n_, n_));
    return s;
  }

  Vector dvel(const State& k) const { return Vector(std::span<const double>(k.data() + n_, n_)); }
  double chart_len(const State& y) const { return y[3 * n_]; }
  double metric_len(const State& y) const { return y[3 * n_ + 1]; }

 private:
  int n_;
};

struct StageFailure {
  Termination cause;
  std::string what;
};

Termination cause_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain:
    case ErrorCode::kArgument: return Termination::kLeftDomain;
    case ErrorCode::kDegenerateVelocity: return Termination::kParameterBlowup;
    default: return Termination::kStepUnderflow;
  }
}

bool all_finite(const State& y) {
  return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

// Hermite basis on [0, 1] for value, first and second derivative at both ends.
struct Quintic {
  double h0, h1, h2, h3, h4, h5;
};

Quintic quintic_basis(double s) {
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
  return {1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5,
          s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5,
          0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5,
          0.5 * s3 - s4 + 0.5 * s5,
          -4.0 * s3 + 7.0 * s4 - 3.0 * s5,
          10.0 * s3 - 15.0 * s4 + 6.0 * s5};
}

Quintic quintic_basis_derivative(double s) {
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  return {-30.0 * s2 + 60.0 * s3 - 30.0 * s4,
          1.0 - 18.0 * s2 + 32.0 * s3 - 15.0 * s4,
          s - 4.5 * s2 + 6.0 * s3 - 2.5 * s4,
          1.5 * s2 - 4.0 * s3 + 2.5 * s4,
          -12.0 * s2 + 28.0 * s3 - 15.0 * s4,
          30.0 * s2 - 60.0 * s3 + 30.0 * s4};
}

std::size_t interval_for(const Trajectory& traj, double param) {
  if (traj.samples.size() < 2) throw Error(ErrorCode::kArgument, "trajectory has fewer than two samples");
  const double lo = traj.param_begin(), hi = traj.param_end();
  if (!(param >= lo && param <= hi))
    throw Error(ErrorCode::kOutOfRange, "parameter outside the integrated range");
  auto it = std::upper_bound(traj.samples.begin(), traj.samples.end(), param,
                             [](double p, const GeodesicState& s) { return p < s.param; });
  std::size_t k = static_cast<std::size_t>(it - traj.samples.begin());
  if (k == 0) k = 1;
  if (k >= traj.samples.size()) k = traj.samples.size() - 1;
  return k - 1;
}

Point hermite_position(const Trajectory& traj, std::size_t k, double param) {
  const GeodesicState& s0 = traj.samples[k];
  const GeodesicState& s1 = traj.samples[k + 1];
  const double h = s1.param - s0.param;
  const Quintic q = quintic_basis((param - s0.param) / h);
  const int n = s0.x.dim();
  Point out(n);
  for (int i = 0; i < n; ++i)
    out[i] = q.h0 * s0.x[i] + q.h1 * h * s0.vel[i] + q.h2 * h * h * traj.chart_acc[k][i] +
             q.h3 * h * h * traj.chart_acc[k + 1][i] + q.h4 * h * s1.vel[i] + q.h5 * s1.x[i];
  return out;
}

double hermite_speed(const Trajectory& traj, std::size_t k, double param) {
  const GeodesicState& s0 = traj.samples[k];
  const GeodesicState& s1 = traj.samples[k + 1];
  const double h = s1.param - s0.param;
  const Quintic q = quintic_basis_derivative((param - s0.param) / h);
  double sum = 0.0;
  for (int i = 0; i < s0.x.dim(); ++i) {
    const double v = (q.h0 * s0.x[i] + q.h5 * s1.x[i]) / h + q.h1 * s0.vel[i] + q.h4 * s1.vel[i] +
                     h * (q.h2 * traj.chart_acc[k][i] + q.h3 * traj.chart_acc[k + 1][i]);
    sum += v * v;
  }
  return std::sqrt(sum);
}

// Five-point Gauss-Legendre on [a, b] of the interpolated chart speed.
double interval_length(const Trajectory& traj, std::size_t k, double a, double b) {
  static constexpr std::array<double, 5> kNodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                                   0.5384693101056831, 0.9061798459386640};
  static constexpr std::array<double, 5> kWeights = {0.2369268850561891, 0.4786286704993665,
                                                     0.5688888888888889, 0.4786286704993665,
                                                     0.2369268850561891};
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < kNodes.size(); ++i)
    s += kWeights[i] * hermite_speed(traj, k, mid + half * kNodes[i]);
  return s * half;
}

}  // namespace

Trajectory integrate(const MetricField& field, const GeodesicState& init, double param_end,
                     const StepControl& ctrl) {
  ctrl.validate();
  const int n = field.dimension();
  check_same_dimension(n, init.x.dim(), "initial position");
  check_same_dimension(n, init.vel.dim(), "initial velocity");
  check_same_dimension(n, init.acc.dim(), "initial acceleration");
  if (!std::isfinite(init.param) || !std::isfinite(param_end) || !(param_end > init.param))
    throw Error(ErrorCode::kArgument, "param_end must be finite and greater than the initial parameter");
  if (!init.x.finite() || !init.vel.finite() || !init.acc.finite())
    throw Error(ErrorCode::kArgument, "initial state must be finite");

  const Formulation form = init.form;
  const Packed layout(n);

  // Initial-point validation: errors here are the caller's, not terminations.
  {
    const CurvatureAtPoint curv = geodesic_data_at(field, init.x);
    rhs(init, curv, true);
  }

  auto f = [&](double t, const State& y) {
    const GeodesicState s = layout.unpack(y, form, t);
    const CurvatureAtPoint curv = geodesic_data_at(field, s.x);
    const StateDerivative d = rhs(s, curv, false);
    State k(layout.size());
    for (int i = 0; i < n; ++i) {
      k[i] = d.dx[i];
      k[n + i] = d.dvel[i];
      k[2 * n + i] = d.dacc[i];
    }
    k[3 * n] = s.vel.chart_norm();
    k[3 * n + 1] = std::sqrt(std::max(0.0, inner(curv.metric, s.vel, s.vel)));
    return k;
  };

  Trajectory traj;
  traj.metric_name = field.name();

  double t = init.param;
  State y = layout.pack(init, 0.0, 0.0);
  State k1 = f(t, y);

  auto record = [&](const State& state, const State& deriv, double param) {
    traj.samples.push_back(layout.unpack(state, form, param));
    traj.chart_acc.push_back(layout.dvel(deriv));
    traj.chart_length.push_back(layout.chart_len(state));
    traj.metric_length.push_back(layout.metric_len(state));
  };
  record(y, k1, t);

  auto finish = [&](Termination cause, std::string detail) {
    traj.termination = cause;
    traj.detail = std::move(detail);
    return traj;
  };

  const double span = param_end - t;
  const double h_cap = ctrl.max_step > 0.0 ? std::min(ctrl.max_step, span) : span;
  double h = std::min(ctrl.initial_step, h_cap);

  std::array<State, 7> k;
  State y_new(layout.size()), stage(layout.size());
  long steps = 0;

  while (t < param_end) {
    if (++steps > ctrl.max_steps)
      return finish(Termination::kStepUnderflow, "maximum number of steps exceeded");

    bool last = false;
    if (t + 1.0001 * h >= param_end) {
      h = param_end - t;
      last = true;
    }

    std::optional<StageFailure> failure;
    double err = 0.0;
    k[0] = k1;
    try {
      for (int s = 1; s < 7; ++s) {
        for (std::size_t i = 0; i < stage.size(); ++i) {
          double acc = y[i];
          for (int j = 0; j < s; ++j) acc += h * kA[s][j] * k[j][i];
          stage[i] = acc;
        }
        if (!all_finite(stage)) {
          failure = StageFailure{Termination::kAccelerationBlowup, "non-finite stage value"};
          break;
        }
        k[s] = f(t + kC[s] * h, stage);
        if (s == 6) y_new = stage;  // seventh stage is evaluated at the 5th-order solution
      }
      if (!failure) {
        double sum = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
          double e = 0.0;
          for (int s = 0; s < 7; ++s) e += kE[s] * k[s][i];
          e *= h;
          const double sc = ctrl.atol + ctrl.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
          sum += (e / sc) * (e / sc);
        }
        err = std::sqrt(sum / static_cast<double>(y.size()));
        if (!std::isfinite(err))
          failure = StageFailure{Termination::kAccelerationBlowup, "non-finite error estimate"};
      }
    } catch (const Error& e) {
      failure = StageFailure{cause_for(e.code()), e.what()};
    }

    if (failure) {
      ++traj.rejected_steps;
      h *= 0.25;
      if (h < ctrl.min_step) return finish(failure->cause, failure->what);
      continue;
    }

    if (err > 1.0) {
      ++traj.rejected_steps;
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      if (h < ctrl.min_step) {
        std::ostringstream msg;
        msg << "step size fell below " << ctrl.min_step << " at param " << t;
        return finish(Termination::kStepUnderflow, msg.str());
      }
      continue;
    }

    // Accepted.
    ++traj.accepted_steps;
    t = last ? param_end : t + h;
    y = y_new;
    if (form == Formulation::kC) {
      GeodesicState s = layout.unpack(y, form, t);
      try {
        const SymMatrix g = field.metric_at(s.x);
        const double uu = inner(g, s.vel, s.vel);
        const double cu = inner(g, s.acc, s.vel);
        traj.max_constraint_drift =
            std::max({traj.max_constraint_drift, std::abs(uu - 1.0), std::abs(cu)});
        s.vel *= 1.0 / std::sqrt(uu);
        s.acc -= inner(g, s.acc, s.vel) * s.vel;
        y = layout.pack(s, layout.chart_len(y), layout.metric_len(y));
        k1 = f(t, y);
      } catch (const Error& e) {
        return finish(cause_for(e.code()), e.what());
      }
    } else {
      k1 = k[6];
    }
    record(y, k1, t);

    const GeodesicState& cur = traj.samples.back();
    if (cur.x.chart_norm() > ctrl.position_blowup)
      return finish(Termination::kLeftDomain, "position exceeded the blowup bound");
    if (!field.in_domain(cur.x)) return finish(Termination::kLeftDomain, "left the chart domain");
    if (cur.acc.chart_norm() > ctrl.accel_blowup)
      return finish(Termination::kAccelerationBlowup, "acceleration exceeded the blowup bound");
    if (form != Formulation::kC && std::abs(t) > ctrl.param_blowup)
      return finish(Termination::kParameterBlowup, "parameter exceeded the blowup bound");

    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h = std::min(h * factor, h_cap);
    if (h < ctrl.min_step && t < param_end) {
      std::ostringstream msg;
      msg << "step size fell below " << ctrl.min_step << " at param " << t;
      return finish(Termination::kStepUnderflow, msg.str());
    }
  }
  return finish(Termination::kCompleted, {});
}

Point position_at(const Trajectory& traj, double param) {
  const std::size_t k = interval_for(traj, param);
  return hermite_position(traj, k, param);
}

double chart_length_at(const Trajectory& traj, double param) {
  const std::size_t k = interval_for(traj, param);
  return traj.chart_length[k] + interval_length(traj, k, traj.samples[k].param, param);
}

double param_at_chart_length(const Trajectory& traj, double length) {
  if (traj.samples.size() < 2) throw Error(ErrorCode::kArgument, "trajectory has fewer than two samples");
  const double total = traj.total_chart_length();
  if (!(length >= 0.0 && length <= total * (1.0 + 1e-12)))
    throw Error(ErrorCode::kOutOfRange, "chart length outside the trajectory");
  auto it = std::upper_bound(traj.chart_length.begin(), traj.chart_length.end(), length);
  std::size_t k = static_cast<std::size_t>(it - traj.chart_length.begin());
  k = std::clamp<std::size_t>(k, 1, traj.samples.size() - 1) - 1;

  double lo = traj.samples[k].param, hi = traj.samples[k + 1].param;
  const double base = traj.chart_length[k];
  const double target = length - base;
  // Newton iterations safeguarded by bisection.
  double p = lo + (hi - lo) * std::clamp(target / std::max(traj.chart_length[k + 1] - base, 1e-300), 0.0, 1.0);
  for (int iter = 0; iter < 60; ++iter) {
    const double r = interval_length(traj, k, traj.samples[k].param, p) - target;
    if (r > 0.0) hi = p; else lo = p;
    const double speed = hermite_speed(traj, k, p);
    double next = speed > 0.0 ? p - r / speed : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - p) <= 1e-15 * std::max(1.0, std::abs(p))) return next;
    p = next;
  }
  return p;
}

std::vector<Point> resample_by_chart_length(const Trajectory& traj, std::span<const double> lengths) {
  std::vector<Point> out;
  out.reserve(lengths.size());
  for (double s : lengths) {
    const double p = std::min(param_at_chart_length(traj, s), traj.param_end());
    out.push_back(position_at(traj, p));
  }
  return out;
}

double arclength_gap(const Trajectory& a, const Trajectory& b, int count) {
  if (count < 2) throw Error(ErrorCode::kArgument, "need at least two resampling points");
  const double total = std::min(a.total_chart_length(), b.total_chart_length());
  std::vector<double> lengths(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) lengths[i] = total * static_cast<double>(i) / (count - 1);
  const auto pa = resample_by_chart_length(a, lengths);
  const auto pb = resample_by_chart_length(b, lengths);
  double gap = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) gap = std::max(gap, chart_distance(pa[i], pb[i]));
  return gap;
}

}  // namespace cgeo
