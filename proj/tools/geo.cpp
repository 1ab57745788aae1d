// geo: command-line front end over the C API.
//
//   geo curvature|integrate|cone|invariance --config <file.json> [--out <path>] [--format csv|json]
//   geo oracle --op <name> [--alpha a] [--beta b] [--tau t] [--sigma s] [--dim n]

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgeo/cgeo.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitUnsupportedDimension = 3;

int exit_code_for(cgeo_status s) {
  switch (s) {
    case CGEO_OK: return 0;
    case CGEO_ERR_UNSUPPORTED_DIMENSION: return kExitUnsupportedDimension;
    case CGEO_ERR_ARGUMENT:
    case CGEO_ERR_DOMAIN:
    case CGEO_ERR_POLE:
    case CGEO_ERR_OUT_OF_RANGE:
    case CGEO_ERR_CONFIG: return kExitInvalidConfig;
    default: return kExitFailure;
  }
}

int report(cgeo_status s) {
  std::cerr << "geo: " << cgeo_status_name(s) << " error: " << cgeo_last_error() << '\n';
  return exit_code_for(s);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

// GEO_TOL as a strictly positive decimal; 0 when unset.
bool env_tolerance(double& tol) {
  tol = 0.0;
  const char* raw = std::getenv("GEO_TOL");
  if (!raw || !*raw) return true;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(raw, &end);
  if (errno != 0 || *end != '\0' || !(v > 0.0)) return false;
  tol = v;
  return true;
}

struct RunArgs {
  std::string config;
  std::string out;
  std::string format;
};

int run_experiment(const std::string& command, const RunArgs& args) {
  std::string text;
  if (!read_file(args.config, text)) {
    std::cerr << "geo: cannot read configuration '" << args.config << "'\n";
    return kExitInvalidConfig;
  }
  cgeo_run_options opts{CGEO_FORMAT_DEFAULT, 0.0};
  if (args.format == "csv") opts.format = CGEO_FORMAT_CSV;
  if (args.format == "json") opts.format = CGEO_FORMAT_JSON;
  if (!env_tolerance(opts.default_tolerance)) {
    std::cerr << "geo: GEO_TOL must be a positive decimal number\n";
    return kExitInvalidConfig;
  }

  cgeo_output* raw = nullptr;
  if (const cgeo_status s = cgeo_run(command.c_str(), text.c_str(), &opts, &raw); s != CGEO_OK)
    return report(s);
  std::unique_ptr<cgeo_output, decltype(&cgeo_output_destroy)> output(raw, cgeo_output_destroy);

  const std::string body = cgeo_output_text(output.get());
  const std::string path = args.out.empty() ? cgeo_output_path(output.get()) : args.out;
  if (!body.empty()) {
    if (path.empty()) {
      std::cout << body;
    } else if (!write_file(path, body)) {
      std::cerr << "geo: cannot write '" << path << "'\n";
      return kExitFailure;
    }
  }
  const std::string message = cgeo_output_message(output.get());
  if (!message.empty()) std::cerr << message << '\n';
  return cgeo_output_exit_code(output.get());
}

struct OracleArgs {
  std::string op;
  double alpha = 0.0;
  double beta = 0.0;
  double tau = 0.0;
  double sigma = 0.0;
  int dim = 2;
};

int run_oracle(const OracleArgs& a) {
  using nlohmann::json;
  const auto n = static_cast<std::size_t>(a.dim);
  std::vector<double> x(n);
  json j = {{"op", a.op}};
  cgeo_status s = CGEO_OK;
  if (a.op == "eval_circle") {
    s = cgeo_eval_circle(a.alpha, a.beta, a.tau, x.data(), n);
    j.update({{"alpha", a.alpha}, {"beta", a.beta}, {"tau", a.tau}, {"point", x}});
  } else if (a.op == "circle_center_radius") {
    double r = 0.0;
    s = cgeo_circle_center_radius(a.alpha, a.beta, x.data(), n, &r);
    j.update({{"alpha", a.alpha}, {"beta", a.beta}, {"center", x}, {"radius", r}});
  } else if (a.op == "line_param") {
    double v = 0.0;
    s = cgeo_line_param(a.alpha, a.tau, &v);
    j.update({{"alpha", a.alpha}, {"tau", a.tau}, {"value", v}});
  } else if (a.op == "limit_point") {
    s = cgeo_limit_point(a.alpha, a.beta, x.data(), n);
    j.update({{"alpha", a.alpha}, {"beta", a.beta}, {"point", x}});
  } else if (a.op == "endpoint_sigma") {
    s = cgeo_endpoint_sigma(a.alpha, a.sigma, x.data(), n);
    j.update({{"alpha", a.alpha}, {"sigma", a.sigma}, {"point", x}});
  } else {
    std::cerr << "geo: unknown oracle operation '" << a.op << "'\n";
    return kExitInvalidConfig;
  }
  if (s != CGEO_OK) return report(s);
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal geodesics: curvature, integration and compactification experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cgeo_version()));

  RunArgs run_args;
  const std::vector<std::string> experiments = {"curvature", "integrate", "cone", "invariance"};
  const std::vector<std::string> descriptions = {
      "Curvature tensors of a metric at a chart point (JSON)",
      "Integrate one conformal geodesic and write the trajectory",
      "Endpoint sweep over (sigma, alpha) toward the point at infinity",
      "Conformal and Mobius invariance checks on one initial condition",
  };
  for (std::size_t i = 0; i < experiments.size(); ++i) {
    CLI::App* sub = app.add_subcommand(experiments[i], descriptions[i]);
    sub->add_option("--config", run_args.config, "JSON configuration file")->required();
    sub->add_option("--out", run_args.out, "Output path (default: output.path or stdout)");
    sub->add_option("--format", run_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "Evaluate a Euclidean closed-form expression (JSON)");
  oracle->add_option("--op", oracle_args.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"eval_circle", "circle_center_radius", "line_param", "limit_point",
                             "endpoint_sigma"}));
  oracle->add_option("--alpha", oracle_args.alpha, "Tangential acceleration component");
  oracle->add_option("--beta", oracle_args.beta, "Normal acceleration component");
  oracle->add_option("--tau", oracle_args.tau, "Projective parameter");
  oracle->add_option("--sigma", oracle_args.sigma, "Cone slope");
  oracle->add_option("--dim", oracle_args.dim, "Ambient dimension")->check(CLI::Range(2, CGEO_MAX_DIM));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  if (oracle->parsed()) return run_oracle(oracle_args);
  for (const auto& name : experiments)
    if (app.got_subcommand(name)) return run_experiment(name, run_args);
  return kExitInvalidConfig;
}
