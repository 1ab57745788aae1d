#include "cgeo/app.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <initializer_list>
#include <set>

#include <json.hpp>

#include "cgeo/curvature.hpp"
#include "cgeo/euclid.hpp"
#include "cgeo/serialize.hpp"
#include "cgeo/stereographic.hpp"

namespace cgeo::app {

using nlohmann::json;

Command command_from_string(std::string_view name) {
  if (name == "curvature") return Command::kCurvature;
  if (name == "integrate") return Command::kIntegrate;
  if (name == "cone") return Command::kCone;
  if (name == "invariance") return Command::kInvariance;
  throw Error(ErrorCode::kConfig, "unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::kCurvature: return "curvature";
    case Command::kIntegrate: return "integrate";
    case Command::kCone: return "cone";
    case Command::kInvariance: return "invariance";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Configuration parsing

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::kConfig, msg); }

const json& require_object(const json& j, const std::string& where) {
  if (!j.is_object()) config_error(where + " must be a JSON object");
  return j;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!keys.count(key)) config_error("unknown key '" + key + "' in " + where);
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) config_error(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) config_error(where + " must be finite");
  return v;
}

double positive(const json& j, const std::string& where) {
  const double v = number(j, where);
  if (!(v > 0.0)) config_error(where + " must be positive");
  return v;
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) config_error(where + " must be a string");
  return j.get<std::string>();
}

std::vector<double> numbers(const json& j, const std::string& where) {
  if (!j.is_array()) config_error(where + " must be an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

template <class T>
T components(const json& j, int n, const std::string& where) {
  const auto v = numbers(j, where);
  if (static_cast<int>(v.size()) != n)
    config_error(where + " must have " + std::to_string(n) + " entries");
  return T(std::span<const double>(v));
}

ConformalFactor parse_omega(const json& j, const std::string& where) {
  require_object(j, where);
  if (!j.contains("kind")) config_error(where + ".kind is required");
  const std::string kind = text(j["kind"], where + ".kind");
  if (kind == "constant") {
    check_keys(j, {"kind", "value"}, where);
    if (!j.contains("value")) config_error(where + ".value is required");
    return ConformalFactor::constant(positive(j["value"], where + ".value"));
  }
  if (kind == "stereographic") {
    check_keys(j, {"kind"}, where);
    return ConformalFactor::stereographic();
  }
  if (kind == "product") {
    check_keys(j, {"kind", "factors"}, where);
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
      config_error(where + ".factors must be a non-empty array");
    std::optional<ConformalFactor> acc;
    for (std::size_t i = 0; i < j["factors"].size(); ++i) {
      ConformalFactor f = parse_omega(j["factors"][i], where + ".factors[" + std::to_string(i) + "]");
      acc = acc ? (*acc * f) : f;
    }
    return *acc;
  }
  config_error(where + ".kind must be constant, stereographic or product");
}

void parse_metric(const json& j, ExperimentConfig& cfg) {
  require_object(j, "metric");
  check_keys(j, {"metric", "dimension", "base", "omega", "derivatives", "fd_step"}, "metric");
  cfg.has_metric = true;
  if (!j.contains("metric")) config_error("metric.metric is required");
  cfg.metric_kind = text(j["metric"], "metric.metric");
  if (cfg.metric_kind != "euclidean" && cfg.metric_kind != "round_sphere" && cfg.metric_kind != "rescaled")
    config_error("metric.metric must be euclidean, round_sphere or rescaled");
  if (!j.contains("dimension")) config_error("metric.dimension is required");
  if (!j["dimension"].is_number_integer()) config_error("metric.dimension must be an integer");
  cfg.dimension = j["dimension"].get<int>();
  if (cfg.dimension < kMinDim || cfg.dimension > kMaxDim)
    config_error("metric.dimension must lie in [2, 8]");
  if (j.contains("base")) {
    if (cfg.metric_kind != "rescaled") config_error("metric.base is only meaningful for rescaled metrics");
    cfg.base_kind = text(j["base"], "metric.base");
    if (cfg.base_kind != "euclidean" && cfg.base_kind != "round_sphere")
      config_error("metric.base must be euclidean or round_sphere");
  }
  if (j.contains("omega")) cfg.omega = parse_omega(j["omega"], "metric.omega");
  if (cfg.metric_kind == "rescaled" && !cfg.omega) config_error("rescaled metric needs metric.omega");
  if (j.contains("derivatives")) {
    const std::string mode = text(j["derivatives"], "metric.derivatives");
    if (mode == "closed_form") cfg.deriv_mode = DerivMode::kClosedForm;
    else if (mode == "finite_difference") cfg.deriv_mode = DerivMode::kFiniteDifference;
    else config_error("metric.derivatives must be closed_form or finite_difference");
  }
  if (j.contains("fd_step")) cfg.fd_step = positive(j["fd_step"], "metric.fd_step");
}

void parse_initial(const json& j, ExperimentConfig& cfg) {
  require_object(j, "initial");
  check_keys(j, {"formulation", "x", "vel", "acc", "param", "mobius"}, "initial");
  const int n = cfg.dimension;
  if (j.contains("formulation")) {
    const std::string f = text(j["formulation"], "initial.formulation");
    if (f != "A" && f != "B" && f != "C") config_error("initial.formulation must be A, B or C");
    cfg.formulation = formulation_from_string(f);
  }
  if (j.contains("x")) cfg.x = components<Point>(j["x"], n, "initial.x");
  if (j.contains("vel")) cfg.vel = components<Vector>(j["vel"], n, "initial.vel");
  if (j.contains("acc")) cfg.acc = components<Vector>(j["acc"], n, "initial.acc");
  if (j.contains("param")) cfg.param = number(j["param"], "initial.param");
  if (j.contains("mobius")) {
    const auto m = numbers(j["mobius"], "initial.mobius");
    if (m.size() != 4) config_error("initial.mobius must be [a, b, c, d]");
    cfg.mobius = Mobius{m[0], m[1], m[2], m[3]};
    if (cfg.mobius->determinant() == 0.0) config_error("initial.mobius must have ad - bc != 0");
  }
}

void parse_range(const json& j, ExperimentConfig& cfg) {
  require_object(j, "range");
  check_keys(j, {"param_end", "sigma", "alpha", "samples"}, "range");
  if (j.contains("param_end")) cfg.param_end = number(j["param_end"], "range.param_end");
  if (j.contains("sigma")) cfg.sigmas = numbers(j["sigma"], "range.sigma");
  if (j.contains("alpha")) cfg.alphas = numbers(j["alpha"], "range.alpha");
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer() || j["samples"].get<int>() < 2)
      config_error("range.samples must be an integer >= 2");
    cfg.samples = j["samples"].get<int>();
  }
}

void parse_control(const json& j, ExperimentConfig& cfg) {
  require_object(j, "control");
  check_keys(j,
             {"rtol", "atol", "initial_step", "min_step", "max_step", "accel_blowup",
              "position_blowup", "param_blowup", "max_steps", "tolerance"},
             "control");
  StepControl& c = cfg.control;
  if (j.contains("rtol")) c.rtol = positive(j["rtol"], "control.rtol");
  if (j.contains("atol")) c.atol = positive(j["atol"], "control.atol");
  if (j.contains("initial_step")) c.initial_step = positive(j["initial_step"], "control.initial_step");
  if (j.contains("min_step")) c.min_step = positive(j["min_step"], "control.min_step");
  if (j.contains("max_step")) c.max_step = positive(j["max_step"], "control.max_step");
  if (j.contains("accel_blowup")) c.accel_blowup = positive(j["accel_blowup"], "control.accel_blowup");
  if (j.contains("position_blowup"))
    c.position_blowup = positive(j["position_blowup"], "control.position_blowup");
  if (j.contains("param_blowup")) c.param_blowup = positive(j["param_blowup"], "control.param_blowup");
  if (j.contains("max_steps")) {
    if (!j["max_steps"].is_number_integer() || j["max_steps"].get<long>() <= 0)
      config_error("control.max_steps must be a positive integer");
    c.max_steps = j["max_steps"].get<long>();
  }
  if (j.contains("tolerance")) cfg.tolerance = positive(j["tolerance"], "control.tolerance");
}

void parse_output(const json& j, ExperimentConfig& cfg) {
  require_object(j, "output");
  check_keys(j, {"format", "path"}, "output");
  if (j.contains("format")) {
    const std::string f = text(j["format"], "output.format");
    if (f == "csv") cfg.format = OutputFormat::kCsv;
    else if (f == "json") cfg.format = OutputFormat::kJson;
    else config_error("output.format must be csv or json");
    cfg.format_given = true;
  }
  if (j.contains("path")) cfg.output_path = text(j["path"], "output.path");
}

void require(bool cond, const std::string& msg) {
  if (!cond) config_error(msg);
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text, Command command, const RunOptions& options) {
  const json root = json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (root.is_discarded()) config_error("configuration is not valid JSON");
  require_object(root, "configuration");
  check_keys(root, {"metric", "initial", "range", "control", "output"}, "configuration");

  ExperimentConfig cfg;
  if (options.default_tolerance) {
    if (!(*options.default_tolerance > 0.0) || !std::isfinite(*options.default_tolerance))
      config_error("default tolerance must be a positive number");
    cfg.control.rtol = *options.default_tolerance;
    cfg.control.atol = *options.default_tolerance;
  }
  if (root.contains("metric")) parse_metric(root["metric"], cfg);
  if (root.contains("initial")) parse_initial(root["initial"], cfg);
  if (root.contains("range")) parse_range(root["range"], cfg);
  if (root.contains("control")) parse_control(root["control"], cfg);
  if (root.contains("output")) parse_output(root["output"], cfg);
  if (options.format) {
    cfg.format = *options.format;
    cfg.format_given = true;
  }

  switch (command) {
    case Command::kCurvature:
      require(cfg.has_metric, "curvature needs a metric section");
      require(cfg.x.has_value(), "curvature needs the query point initial.x");
      require(!cfg.format_given || cfg.format == OutputFormat::kJson, "curvature output is JSON only");
      cfg.format = OutputFormat::kJson;
      break;
    case Command::kIntegrate:
      require(cfg.has_metric, "integrate needs a metric section");
      require(cfg.x && cfg.vel && cfg.acc, "integrate needs initial.x, initial.vel and initial.acc");
      require(cfg.param_end.has_value(), "integrate needs range.param_end");
      require(*cfg.param_end > cfg.param, "range.param_end must exceed initial.param");
      require(!cfg.mobius, "initial.mobius is only used by the invariance command");
      break;
    case Command::kCone:
      require(!cfg.has_metric || cfg.metric_kind == "euclidean",
              "the cone experiment runs in the Euclidean chart");
      if (cfg.sigmas.empty()) cfg.sigmas = kDefaultConeSigmas;
      if (cfg.alphas.empty()) cfg.alphas = kDefaultConeAlphas;
      for (double s : cfg.sigmas) require(std::abs(s) <= 1.0, "cone sigma values must satisfy |sigma| <= 1");
      for (double a : cfg.alphas) require(a >= 0.0 && a < 2.0, "cone alpha values must lie in [0, 2)");
      break;
    case Command::kInvariance:
      require(cfg.has_metric, "invariance needs a metric section");
      require(cfg.metric_kind != "rescaled", "invariance takes the base metric in metric.metric");
      require(cfg.omega.has_value(), "invariance needs the conformal factor metric.omega");
      require(cfg.formulation == Formulation::kA, "invariance runs on A-form initial data");
      require(cfg.x && cfg.vel && cfg.acc, "invariance needs initial.x, initial.vel and initial.acc");
      if (!cfg.param_end) cfg.param_end = cfg.param + 1.0;
      require(*cfg.param_end > cfg.param, "range.param_end must exceed initial.param");
      if (!cfg.mobius) cfg.mobius = Mobius::reversal();
      require(!cfg.format_given || cfg.format == OutputFormat::kJson, "invariance output is JSON only");
      cfg.format = OutputFormat::kJson;
      break;
  }
  if (cfg.metric_kind != "rescaled" && command != Command::kInvariance && cfg.omega)
    config_error("metric.omega is only used by rescaled metrics and the invariance command");
  return cfg;
}

MetricField build_metric(const ExperimentConfig& cfg) {
  auto named = [&](const std::string& kind) {
    return kind == "round_sphere" ? MetricField::round_sphere(cfg.dimension)
                                  : MetricField::euclidean(cfg.dimension);
  };
  MetricField field = cfg.metric_kind == "rescaled" ? conformal_rescale(named(cfg.base_kind), *cfg.omega)
                                                    : named(cfg.metric_kind);
  if (cfg.deriv_mode == DerivMode::kFiniteDifference) field = field.with_finite_differences(cfg.fd_step);
  return field;
}

MetricField metric_from_json(std::string_view json_text) {
  const json j = json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (j.is_discarded()) config_error("metric description is not valid JSON");
  ExperimentConfig cfg;
  parse_metric(j, cfg);
  return build_metric(cfg);
}

// ---------------------------------------------------------------------------
// Cone experiment

bool ConeReport::monotone() const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const ConeRow& lo = rows[i];
      const ConeRow& hi = rows[j];
      if (lo.sigma != hi.sigma || !(lo.alpha < hi.alpha)) continue;
      if (!(hi.endpoint_norm > lo.endpoint_norm) || !(hi.pole_distance < lo.pole_distance)) return false;
    }
  return true;
}

ConeReport run_cone(const std::vector<double>& sigmas, const std::vector<double>& alphas, int dimension,
                    const StepControl& ctrl) {
  check_dimension(dimension);
  for (double s : sigmas)
    if (!(std::abs(s) <= 1.0)) throw Error(ErrorCode::kOutOfRange, "cone sigma values must satisfy |sigma| <= 1");
  for (double a : alphas)
    if (!(a >= 0.0 && a < 2.0)) throw Error(ErrorCode::kOutOfRange, "cone alpha values must lie in [0, 2)");

  const MetricField flat = MetricField::euclidean(dimension);
  auto cell = [&flat, &ctrl, dimension](double sigma, double alpha) {
    GeodesicState init;
    init.form = Formulation::kA;
    init.x = Point::zero(dimension);
    init.vel = Vector::unit(dimension, 0);
    init.acc = Vector::zero(dimension);
    init.acc[0] = alpha;
    init.acc[1] = sigma * (2.0 - alpha);
    const Trajectory traj = integrate(flat, init, 1.0, ctrl);
    if (traj.termination != Termination::kCompleted)
      throw Error(ErrorCode::kOutOfRange, "cone cell (sigma=" + format_number(sigma) + ", alpha=" +
                                              format_number(alpha) + ") terminated: " +
                                              std::string(to_string(traj.termination)));
    const Point predicted = euclid::endpoint_sigma(alpha, sigma, dimension);
    ConeRow row;
    row.sigma = sigma;
    row.alpha = alpha;
    row.endpoint = traj.back().x;
    row.endpoint_norm = row.endpoint.chart_norm();
    row.predicted_norm = predicted.chart_norm();
    row.pole_distance = stereo::distance_to_pole(row.endpoint);
    row.endpoint_error = chart_distance(row.endpoint, predicted);
    return row;
  };

  std::vector<std::future<ConeRow>> pending;
  for (double s : sigmas)
    for (double a : alphas) pending.push_back(std::async(std::launch::async, cell, s, a));

  ConeReport report;
  report.dimension = dimension;
  for (auto& f : pending) report.rows.push_back(f.get());
  return report;
}

std::string cone_to_csv(const ConeReport& report) {
  std::string out = "sigma,alpha";
  for (int i = 1; i <= report.dimension; ++i) out += ",ep_" + std::to_string(i);
  out += ",ep_norm,pred_norm,pole_dist,err\n";
  for (const auto& r : report.rows) {
    out += format_number(r.sigma) + ',' + format_number(r.alpha);
    for (double v : r.endpoint.values()) out += ',' + format_number(v);
    out += ',' + format_number(r.endpoint_norm) + ',' + format_number(r.predicted_norm) + ',' +
           format_number(r.pole_distance) + ',' + format_number(r.endpoint_error) + '\n';
  }
  return out;
}

std::string cone_to_json(const ConeReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json ep = json::array();
    for (double v : r.endpoint.values()) ep.push_back(v);
    rows.push_back({{"sigma", r.sigma},
                    {"alpha", r.alpha},
                    {"endpoint", ep},
                    {"endpoint_norm", r.endpoint_norm},
                    {"predicted_norm", r.predicted_norm},
                    {"pole_distance", r.pole_distance},
                    {"endpoint_error", r.endpoint_error}});
  }
  json j;
  j["dimension"] = report.dimension;
  j["monotone"] = report.monotone();
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Invariance

bool InvarianceReport::completed() const noexcept {
  return base_termination == Termination::kCompleted && rescaled_termination == Termination::kCompleted &&
         mobius_termination == Termination::kCompleted;
}

bool InvarianceReport::passed() const noexcept {
  return completed() && conformal_point_set <= tolerance && conformal_parameter <= tolerance &&
         mobius <= tolerance;
}

namespace {

// Largest distance between samples of `probe` and `reference` interpolated at
// map(probe param).
template <class Map>
double parameter_gap(const Trajectory& probe, const Trajectory& reference, Map map) {
  double gap = 0.0;
  const double lo = reference.param_begin(), hi = reference.param_end();
  for (const auto& s : probe.samples) {
    const double p = std::clamp(map(s.param), lo, hi);
    gap = std::max(gap, chart_distance(s.x, position_at(reference, p)));
  }
  return gap;
}

}  // namespace

InvarianceReport run_invariance(const MetricField& base, const ConformalFactor& omega,
                                const GeodesicState& init, double param_end, const Mobius& mobius,
                                const StepControl& ctrl, int samples, double tolerance) {
  if (init.form != Formulation::kA) throw Error(ErrorCode::kArgument, "invariance runs on A-form data");
  InvarianceReport rep;
  rep.map = mobius;
  rep.tolerance = tolerance;

  const MetricField rescaled = conformal_rescale(base, omega);
  const Trajectory original = integrate(base, init, param_end, ctrl);
  rep.base_termination = original.termination;

  const SymMatrix g0 = base.metric_at(init.x);
  const GeodesicState hatted = rescale_state(init, omega.omega(init.x), omega.upsilon(init.x), g0);
  const Trajectory other = integrate(rescaled, hatted, param_end, ctrl);
  rep.rescaled_termination = other.termination;
  if (!rep.completed()) return rep;

  rep.conformal_point_set = arclength_gap(original, other, samples);
  rep.conformal_parameter = std::max(parameter_gap(other, original, [](double t) { return t; }),
                                     parameter_gap(original, other, [](double t) { return t; }));

  // The reparameterized curve must not pass through the image of infinity.
  const double t0 = init.param, t1 = param_end;
  if (mobius.c != 0.0) {
    const double bad = mobius.a / mobius.c;
    if (bad >= t0 && bad <= t1)
      throw Error(ErrorCode::kPole, "Mobius map sends a point of the integrated range to infinity");
  }
  // An orientation-reversing map starts from the far end of the original run.
  const bool increasing = mobius.determinant() > 0.0;
  const GeodesicState& start = increasing ? original.front() : original.back();
  const GeodesicState reparam = mobius_reparam(start, mobius, base.metric_at(start.x));
  const double hat_end = mobius.inverse(increasing ? t1 : t0);
  const Trajectory moved = integrate(base, reparam, hat_end, ctrl);
  rep.mobius_termination = moved.termination;
  if (moved.termination == Termination::kCompleted)
    rep.mobius = parameter_gap(moved, original, [&mobius](double t) { return mobius(t); });
  return rep;
}

std::string invariance_to_json(const InvarianceReport& r) {
  json j;
  j["conformal"] = {{"point_set_deviation", r.conformal_point_set},
                    {"parameter_deviation", r.conformal_parameter},
                    {"base_termination", std::string(to_string(r.base_termination))},
                    {"rescaled_termination", std::string(to_string(r.rescaled_termination))}};
  j["mobius"] = {{"map", {r.map.a, r.map.b, r.map.c, r.map.d}},
                 {"deviation", r.mobius},
                 {"termination", std::string(to_string(r.mobius_termination))}};
  j["tolerance"] = r.tolerance;
  j["pass"] = r.passed();
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Command dispatch

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedDimension: return kExitUnsupportedDimension;
    default: return kExitInvalidConfig;
  }
}

GeodesicState initial_state(const ExperimentConfig& cfg) {
  GeodesicState s;
  s.form = cfg.formulation;
  s.x = *cfg.x;
  s.vel = *cfg.vel;
  s.acc = *cfg.acc;
  s.param = cfg.param;
  return s;
}

CommandOutput execute(Command command, const ExperimentConfig& cfg) {
  CommandOutput out;
  out.output_path = cfg.output_path;
  switch (command) {
    case Command::kCurvature: {
      const MetricField field = build_metric(cfg);
      out.text = curvature_to_json(curvature_at(field, *cfg.x), field.name(), *cfg.x);
      return out;
    }
    case Command::kIntegrate: {
      const MetricField field = build_metric(cfg);
      const Trajectory traj = integrate(field, initial_state(cfg), *cfg.param_end, cfg.control);
      out.text = cfg.format == OutputFormat::kJson ? trajectory_to_json(traj) : trajectory_to_csv(traj);
      out.message = "termination: " + std::string(to_string(traj.termination));
      if (!traj.detail.empty()) out.message += " (" + traj.detail + ")";
      if (traj.termination != Termination::kCompleted) out.exit_code = kExitBlowup;
      return out;
    }
    case Command::kCone: {
      const int n = cfg.has_metric ? cfg.dimension : 2;
      const ConeReport report = run_cone(cfg.sigmas, cfg.alphas, n, cfg.control);
      out.text = cfg.format == OutputFormat::kJson ? cone_to_json(report) : cone_to_csv(report);
      if (!report.monotone()) {
        out.exit_code = kExitFailure;
        out.message = "cone report violates the monotonicity invariants";
      }
      return out;
    }
    case Command::kInvariance: {
      const MetricField field = build_metric(cfg);
      const InvarianceReport rep = run_invariance(field, *cfg.omega, initial_state(cfg), *cfg.param_end,
                                                  *cfg.mobius, cfg.control, cfg.samples, cfg.tolerance);
      out.text = invariance_to_json(rep);
      if (!rep.completed()) {
        out.exit_code = kExitBlowup;
        out.message = "an invariance run terminated early";
      } else if (!rep.passed()) {
        out.exit_code = kExitToleranceExceeded;
        const double worst = std::max({rep.conformal_point_set, rep.conformal_parameter, rep.mobius});
        out.message = "deviation " + format_number(worst) + " exceeds tolerance " + format_number(rep.tolerance);
      }
      return out;
    }
  }
  throw Error(ErrorCode::kConfig, "unknown command");
}

}  // namespace

CommandOutput run_command(Command command, std::string_view config_json, const RunOptions& options) {
  try {
    const ExperimentConfig cfg = parse_config(config_json, command, options);
    return execute(command, cfg);
  } catch (const Error& e) {
    CommandOutput out;
    out.exit_code = exit_code_for(e.code());
    out.message = std::string(to_string(e.code())) + " error: " + e.what();
    return out;
  } catch (const std::exception& e) {
    CommandOutput out;
    out.exit_code = kExitFailure;
    out.message = std::string("error: ") + e.what();
    return out;
  }
}

}  // namespace cgeo::app
