#pragma once

// Experiment configuration and the command runners behind the `geo` CLI.
//
// Configuration is a JSON object with the sections "metric", "initial",
// "range", "control" and "output". Unknown keys anywhere are rejected. See
// README.md for the full schema.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgeo/geodesic.hpp"
#include "cgeo/integrate.hpp"
#include "cgeo/metric.hpp"

namespace cgeo::app {

enum class Command { kCurvature, kIntegrate, kCone, kInvariance };
enum class OutputFormat { kCsv, kJson };

Command command_from_string(std::string_view name);
std::string_view to_string(Command c) noexcept;

/// Process exit codes shared by the C API and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInvalidConfig = 2,
  kExitUnsupportedDimension = 3,
  kExitBlowup = 4,
  kExitToleranceExceeded = 5,
};

struct RunOptions {
  /// Overrides output.format from the configuration.
  std::optional<OutputFormat> format;
  /// Replaces the built-in rtol/atol defaults; explicit control keys still win.
  std::optional<double> default_tolerance;
};

inline const std::vector<double> kDefaultConeSigmas = {-1.0, -0.5, 0.0, 0.5, 1.0};
inline const std::vector<double> kDefaultConeAlphas = {0.0, 0.5, 1.0, 1.5, 1.9, 1.99};
inline constexpr double kDefaultInvarianceTolerance = 1e-5;

struct ExperimentConfig {
  // metric
  std::string metric_kind = "euclidean";
  int dimension = 2;
  std::string base_kind = "euclidean";
  std::optional<ConformalFactor> omega;
  DerivMode deriv_mode = DerivMode::kClosedForm;
  double fd_step = kDefaultFdStep;
  bool has_metric = false;

  // initial
  Formulation formulation = Formulation::kA;
  std::optional<Point> x;
  std::optional<Vector> vel;
  std::optional<Vector> acc;
  double param = 0.0;
  std::optional<Mobius> mobius;

  // range
  std::optional<double> param_end;
  std::vector<double> sigmas;
  std::vector<double> alphas;
  int samples = 400;

  // control
  StepControl control;
  double tolerance = kDefaultInvarianceTolerance;

  // output
  OutputFormat format = OutputFormat::kCsv;
  bool format_given = false;
  std::string output_path;
};

/// Parses and validates a configuration for one command. Throws Error with
/// kConfig for schema violations.
ExperimentConfig parse_config(std::string_view json_text, Command command,
                              const RunOptions& options = {});

/// The metric named by the configuration (rescaled when metric == "rescaled").
MetricField build_metric(const ExperimentConfig& cfg);

/// Metric from the "metric" section alone, e.g. {"metric": "round_sphere", "dimension": 3}.
MetricField metric_from_json(std::string_view json_text);

struct ConeRow {
  double sigma = 0.0;
  double alpha = 0.0;
  Point endpoint;
  double endpoint_norm = 0.0;
  double predicted_norm = 0.0;
  double pole_distance = 0.0;
  double endpoint_error = 0.0;
};

struct ConeReport {
  int dimension = 2;
  std::vector<ConeRow> rows;  // ordered by (sigma, alpha) as given

  /// Endpoint norm strictly increasing and pole distance strictly decreasing
  /// in alpha within each sigma.
  bool monotone() const;
};

/// For each (sigma, alpha): integrate the flat conformal circle from the origin
/// with V = e_1, A = (alpha, sigma (2 - alpha), 0, ...) over tau in [0, 1],
/// compare with the closed-form endpoint and map it to the sphere. Cells run
/// concurrently; row order is fixed by the input grids.
/// Throws kOutOfRange for |sigma| > 1 or alpha outside [0, 2).
ConeReport run_cone(const std::vector<double>& sigmas, const std::vector<double>& alphas,
                    int dimension, const StepControl& ctrl = {});

std::string cone_to_csv(const ConeReport& report);
std::string cone_to_json(const ConeReport& report);

struct InvarianceReport {
  /// Chart-length resampled gap between the runs under g and Omega^2 g.
  double conformal_point_set = 0.0;
  /// Largest |x_hat(tau) - x(tau)| at matching projective parameter.
  double conformal_parameter = 0.0;
  /// Largest |x_hat(tau_hat) - x(s(tau_hat))| for the reparameterized run.
  double mobius = 0.0;
  Mobius map;
  double tolerance = kDefaultInvarianceTolerance;
  Termination base_termination = Termination::kCompleted;
  Termination rescaled_termination = Termination::kCompleted;
  Termination mobius_termination = Termination::kCompleted;

  bool completed() const noexcept;
  bool passed() const noexcept;
};

/// Conformal and projective invariance checks for one A-form initial
/// condition under base and conformal_rescale(base, omega).
InvarianceReport run_invariance(const MetricField& base, const ConformalFactor& omega,
                                const GeodesicState& init, double param_end, const Mobius& mobius,
                                const StepControl& ctrl = {}, int samples = 400,
                                double tolerance = kDefaultInvarianceTolerance);

std::string invariance_to_json(const InvarianceReport& report);

struct CommandOutput {
  int exit_code = kExitOk;
  /// Primary output (trajectory, report, curvature JSON).
  std::string text;
  /// Diagnostics for stderr: termination cause, error message.
  std::string message;
  /// output.path from the configuration, empty when not given.
  std::string output_path;
};

/// Parses the configuration and runs the command. Never throws; failures are
/// reported through exit_code and message.
CommandOutput run_command(Command command, std::string_view config_json,
                          const RunOptions& options = {});

}  // namespace cgeo::app
