#include "cgeo/cgeo.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "cgeo/app.hpp"
#include "cgeo/curvature.hpp"
#include "cgeo/euclid.hpp"
#include "cgeo/integrate.hpp"
#include "cgeo/serialize.hpp"
#include "cgeo/stereographic.hpp"

struct cgeo_metric {
  cgeo::MetricField field;
};

struct cgeo_trajectory {
  cgeo::Trajectory traj;
};

struct cgeo_output {
  cgeo::app::CommandOutput out;
};

namespace {

thread_local std::string last_error;

cgeo_status status_of(cgeo::ErrorCode code) {
  switch (code) {
    case cgeo::ErrorCode::kArgument: return CGEO_ERR_ARGUMENT;
    case cgeo::ErrorCode::kDomain: return CGEO_ERR_DOMAIN;
    case cgeo::ErrorCode::kUnsupportedDimension: return CGEO_ERR_UNSUPPORTED_DIMENSION;
    case cgeo::ErrorCode::kDegenerateVelocity: return CGEO_ERR_DEGENERATE_VELOCITY;
    case cgeo::ErrorCode::kConstraintDrift: return CGEO_ERR_CONSTRAINT_DRIFT;
    case cgeo::ErrorCode::kPole: return CGEO_ERR_POLE;
    case cgeo::ErrorCode::kOutOfRange: return CGEO_ERR_OUT_OF_RANGE;
    case cgeo::ErrorCode::kConfig: return CGEO_ERR_CONFIG;
  }
  return CGEO_ERR_INTERNAL;
}

cgeo_status fail(cgeo_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
cgeo_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return CGEO_OK;
  } catch (const cgeo::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CGEO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CGEO_ERR_INTERNAL, e.what());
  }
}

void require(bool cond, const char* msg) {
  if (!cond) throw cgeo::Error(cgeo::ErrorCode::kArgument, msg);
}

template <class T>
T components(const double* p, std::size_t n) {
  require(p != nullptr, "null array argument");
  return T(std::span<const double>(p, n));
}

void copy_out(std::span<const double> src, double* dst, std::size_t n) {
  require(dst != nullptr, "null output array");
  require(src.size() == n, "output array length does not match the dimension");
  std::memcpy(dst, src.data(), n * sizeof(double));
}

cgeo::StepControl to_control(const cgeo_step_control* c) {
  cgeo::StepControl s;
  if (!c) return s;
  s.rtol = c->rtol;
  s.atol = c->atol;
  s.initial_step = c->initial_step;
  s.min_step = c->min_step;
  s.max_step = c->max_step;
  s.accel_blowup = c->accel_blowup;
  s.position_blowup = c->position_blowup;
  s.param_blowup = c->param_blowup;
  s.max_steps = c->max_steps;
  return s;
}

cgeo::GeodesicState to_state(const cgeo_state& s) {
  require(s.form >= CGEO_FORM_A && s.form <= CGEO_FORM_C, "unknown formulation");
  const auto n = static_cast<std::size_t>(s.dim);
  require(s.dim >= 0 && s.dim <= CGEO_MAX_DIM, "state dimension out of range");
  cgeo::GeodesicState st;
  st.form = static_cast<cgeo::Formulation>(s.form);
  st.x = components<cgeo::Point>(s.x, n);
  st.vel = components<cgeo::Vector>(s.vel, n);
  st.acc = components<cgeo::Vector>(s.acc, n);
  st.param = s.param;
  return st;
}

cgeo_state from_state(const cgeo::GeodesicState& st) {
  cgeo_state s{};
  s.form = static_cast<cgeo_formulation>(st.form);
  s.dim = st.x.dim();
  for (int i = 0; i < s.dim; ++i) {
    s.x[i] = st.x[i];
    s.vel[i] = st.vel[i];
    s.acc[i] = st.acc[i];
  }
  s.param = st.param;
  return s;
}

char* duplicate(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int ambient_dim(std::size_t dim) {
  require(dim <= CGEO_MAX_DIM, "dimension out of range");
  return static_cast<int>(dim);
}

}  // namespace

extern "C" {

const char* cgeo_version(void) { return "1.0.0"; }

const char* cgeo_last_error(void) { return last_error.c_str(); }

const char* cgeo_status_name(cgeo_status status) {
  switch (status) {
    case CGEO_OK: return "ok";
    case CGEO_ERR_ARGUMENT: return "argument";
    case CGEO_ERR_DOMAIN: return "domain";
    case CGEO_ERR_UNSUPPORTED_DIMENSION: return "unsupported_dimension";
    case CGEO_ERR_DEGENERATE_VELOCITY: return "degenerate_velocity";
    case CGEO_ERR_CONSTRAINT_DRIFT: return "constraint_drift";
    case CGEO_ERR_POLE: return "pole";
    case CGEO_ERR_OUT_OF_RANGE: return "out_of_range";
    case CGEO_ERR_CONFIG: return "config";
    case CGEO_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void cgeo_string_free(char* s) { std::free(s); }

cgeo_status cgeo_metric_euclidean(int dim, cgeo_metric** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = new cgeo_metric{cgeo::MetricField::euclidean(dim)};
  });
}

cgeo_status cgeo_metric_round_sphere(int dim, cgeo_metric** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = new cgeo_metric{cgeo::MetricField::round_sphere(dim)};
  });
}

cgeo_status cgeo_metric_from_json(const char* json, cgeo_metric** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new cgeo_metric{cgeo::app::metric_from_json(json)};
  });
}

void cgeo_metric_destroy(cgeo_metric* m) { delete m; }

int cgeo_metric_dimension(const cgeo_metric* m) { return m ? m->field.dimension() : 0; }

cgeo_status cgeo_metric_at(const cgeo_metric* m, const double* x, size_t dim, double* g_out) {
  return guarded([&] {
    require(m != nullptr && g_out != nullptr, "null argument");
    const cgeo::SymMatrix g = m->field.metric_at(components<cgeo::Point>(x, dim));
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g_out[i * n + j] = g(i, j);
  });
}

cgeo_status cgeo_curvature_at(const cgeo_metric* m, const double* x, size_t dim, cgeo_curvature* out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    const cgeo::CurvatureAtPoint c = cgeo::curvature_at(m->field, components<cgeo::Point>(x, dim));
    cgeo_curvature r{};
    const int n = c.metric.dim();
    r.dim = n;
    r.scalar = c.scalar;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        r.metric[a][b] = c.metric(a, b);
        r.metric_inverse[a][b] = c.metric_inverse(a, b);
        r.ricci[a][b] = c.ricci(a, b);
        r.schouten[a][b] = c.schouten(a, b);
        r.schouten_mixed[a][b] = c.schouten_mixed(a, b);
        for (int k = 0; k < n; ++k) r.christoffel[a][b][k] = c.gamma(a, b, k);
      }
    *out = r;
  });
}

cgeo_step_control cgeo_step_control_default(void) {
  const cgeo::StepControl s;
  return {s.rtol,         s.atol,         s.initial_step, s.min_step, s.max_step,
          s.accel_blowup, s.position_blowup, s.param_blowup, s.max_steps};
}

cgeo_status cgeo_integrate(const cgeo_metric* m, const cgeo_state* init, double param_end,
                           const cgeo_step_control* ctrl, cgeo_trajectory** out) {
  return guarded([&] {
    require(m != nullptr && init != nullptr && out != nullptr, "null argument");
    cgeo::Trajectory traj = cgeo::integrate(m->field, to_state(*init), param_end, to_control(ctrl));
    *out = new cgeo_trajectory{std::move(traj)};
  });
}

void cgeo_trajectory_destroy(cgeo_trajectory* t) { delete t; }

size_t cgeo_trajectory_size(const cgeo_trajectory* t) { return t ? t->traj.samples.size() : 0; }

cgeo_status cgeo_trajectory_sample(const cgeo_trajectory* t, size_t i, cgeo_state* out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null argument");
    if (i >= t->traj.samples.size())
      throw cgeo::Error(cgeo::ErrorCode::kOutOfRange, "sample index out of range");
    *out = from_state(t->traj.samples[i]);
  });
}

cgeo_termination cgeo_trajectory_termination(const cgeo_trajectory* t) {
  return t ? static_cast<cgeo_termination>(t->traj.termination) : CGEO_COMPLETED;
}

const char* cgeo_termination_name(cgeo_termination t) {
  if (t < CGEO_COMPLETED || t > CGEO_STEP_UNDERFLOW) return "unknown";
  return cgeo::to_string(static_cast<cgeo::Termination>(t)).data();
}

cgeo_status cgeo_trajectory_position_at(const cgeo_trajectory* t, double param, double* x_out,
                                        size_t dim) {
  return guarded([&] {
    require(t != nullptr, "null argument");
    copy_out(cgeo::position_at(t->traj, param).values(), x_out, dim);
  });
}

cgeo_status cgeo_trajectory_write(const cgeo_trajectory* t, cgeo_format format, char** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null argument");
    const std::string text =
        format == CGEO_FORMAT_JSON ? cgeo::trajectory_to_json(t->traj) : cgeo::trajectory_to_csv(t->traj);
    *out = duplicate(text);
  });
}

cgeo_status cgeo_eval_circle(double alpha, double beta, double tau, double* x_out, size_t dim) {
  return guarded([&] {
    const cgeo::euclid::CircleParams p{alpha, beta, ambient_dim(dim)};
    copy_out(cgeo::euclid::eval_circle(p, tau).values(), x_out, dim);
  });
}

cgeo_status cgeo_circle_center_radius(double alpha, double beta, double* center_out, size_t dim,
                                      double* radius_out) {
  return guarded([&] {
    require(radius_out != nullptr, "null output");
    const cgeo::euclid::Circle c =
        cgeo::euclid::circle_center_radius({alpha, beta, ambient_dim(dim)});
    copy_out(c.center.values(), center_out, dim);
    *radius_out = c.radius;
  });
}

cgeo_status cgeo_line_param(double alpha, double tau, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = cgeo::euclid::line_param(alpha, tau);
  });
}

cgeo_status cgeo_limit_point(double alpha, double beta, double* x_out, size_t dim) {
  return guarded([&] {
    copy_out(cgeo::euclid::limit_point({alpha, beta, ambient_dim(dim)}).values(), x_out, dim);
  });
}

cgeo_status cgeo_endpoint_sigma(double alpha, double sigma, double* x_out, size_t dim) {
  return guarded([&] {
    copy_out(cgeo::euclid::endpoint_sigma(alpha, sigma, ambient_dim(dim)).values(), x_out, dim);
  });
}

cgeo_status cgeo_to_sphere(const double* x, size_t dim, double* p_out) {
  return guarded([&] {
    copy_out(cgeo::stereo::to_sphere(components<cgeo::Point>(x, dim)).coords(), p_out, dim + 1);
  });
}

cgeo_status cgeo_from_sphere(const double* p, size_t dim, double* x_out) {
  return guarded([&] {
    require(p != nullptr, "null array argument");
    const cgeo::stereo::SpherePoint sp(std::span<const double>(p, dim + 1));
    copy_out(cgeo::stereo::from_sphere(sp).values(), x_out, dim);
  });
}

cgeo_status cgeo_conformal_factor(const double* x, size_t dim, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = cgeo::stereo::conformal_factor(components<cgeo::Point>(x, dim));
  });
}

cgeo_status cgeo_run(const char* command, const char* config_json, const cgeo_run_options* options,
                     cgeo_output** out) {
  return guarded([&] {
    require(command != nullptr && config_json != nullptr && out != nullptr, "null argument");
    const cgeo::app::Command cmd = cgeo::app::command_from_string(command);
    cgeo::app::RunOptions opts;
    if (options) {
      if (options->format == CGEO_FORMAT_CSV) opts.format = cgeo::app::OutputFormat::kCsv;
      if (options->format == CGEO_FORMAT_JSON) opts.format = cgeo::app::OutputFormat::kJson;
      if (options->default_tolerance > 0.0) opts.default_tolerance = options->default_tolerance;
    }
    *out = new cgeo_output{cgeo::app::run_command(cmd, config_json, opts)};
  });
}

int cgeo_output_exit_code(const cgeo_output* o) { return o ? o->out.exit_code : cgeo::app::kExitFailure; }

const char* cgeo_output_text(const cgeo_output* o) { return o ? o->out.text.c_str() : ""; }

const char* cgeo_output_message(const cgeo_output* o) { return o ? o->out.message.c_str() : ""; }

const char* cgeo_output_path(const cgeo_output* o) { return o ? o->out.output_path.c_str() : ""; }

void cgeo_output_destroy(cgeo_output* o) { delete o; }

}  // extern "C"
