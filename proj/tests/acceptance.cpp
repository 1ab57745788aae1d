// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
// Reference values are computed here from closed forms written out
// independently of the library (complex arithmetic for the Euclidean circles,
// explicit chordal-distance and endpoint formulas, finite-difference Jacobians).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cgeo/app.hpp"
#include "cgeo/curvature.hpp"
#include "cgeo/integrate.hpp"
#include "cgeo/stereographic.hpp"

using namespace cgeo;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// C-form runs collected by the other criteria, checked by criterion 9.
struct CRun {
  MetricField field;
  Trajectory traj;
};
std::vector<CRun> c_runs;

GeodesicState a_state(Point x, Vector v, Vector a) {
  return {Formulation::kA, std::move(x), std::move(v), std::move(a), 0.0};
}

Point circle_reference(double alpha, double beta, double tau, int n) {
  const std::complex<double> gamma(alpha, beta);
  const std::complex<double> z = 2.0 * tau / (2.0 - gamma * tau);
  Point p(n);
  p[0] = z.real();
  p[1] = z.imag();
  return p;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const MetricField flat = MetricField::euclidean(2);
  double worst = 0.0;
  bool all_completed = true;
  for (double alpha : {0.0, 0.5, 1.0, 1.5})
    for (double beta : {0.25, 0.5, 1.0, 2.0}) {
      const Trajectory t = integrate(flat, a_state(Point{0, 0}, {1, 0}, {alpha, beta}), 1.0);
      all_completed = all_completed && t.termination == Termination::kCompleted;
      for (const auto& s : t.samples)
        worst = std::max(worst, chart_distance(s.x, circle_reference(alpha, beta, s.param, 2)));
      for (int k = 0; k <= 200; ++k) {
        const double tau = k / 200.0;
        worst = std::max(worst, chart_distance(position_at(t, tau), circle_reference(alpha, beta, tau, 2)));
      }
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {all_completed && worst <= 1e-6 && secs < 5.0,
          "max deviation " + fmt("%.3g", worst) + ", " + fmt("%.3f", secs) + " s"};
}

Outcome circle_geometry() {
  double worst = 0.0;
  for (double beta : {0.5, 1.0, 2.0})
    for (double alpha : {0.0, 0.75, 1.5}) {
      const Trajectory t = integrate(MetricField::euclidean(2), a_state(Point{0, 0}, {1, 0}, {alpha, beta}), 1.0);
      const Point centre{0, 1 / beta};
      for (const auto& s : t.samples) worst = std::max(worst, std::abs(chart_distance(s.x, centre) - 1 / std::abs(beta)));
    }
  return {worst <= 1e-6, "max |dist - radius| " + fmt("%.3g", worst)};
}

app::ConeReport default_cone() {
  static const app::ConeReport report = app::run_cone(app::kDefaultConeSigmas, app::kDefaultConeAlphas, 2);
  return report;
}

Outcome endpoint_law() {
  const app::ConeReport r = default_cone();
  double worst_err = 0.0, worst_pred = 0.0;
  bool increasing = true;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    const double s = row.sigma, a = row.alpha;
    const double k = 2.0 / (2.0 - a) / (1.0 + s * s);
    const Point predicted{k, k * s};
    if (a <= 1.95) worst_err = std::max(worst_err, chart_distance(row.endpoint, predicted));
    worst_pred = std::max(worst_pred, std::abs(row.predicted_norm - 2.0 / ((2.0 - a) * std::sqrt(1.0 + s * s))));
    if (i > 0 && r.rows[i - 1].sigma == s && !(row.endpoint_norm > r.rows[i - 1].endpoint_norm)) increasing = false;
  }
  return {worst_err <= 1e-5 && worst_pred <= 1e-8 && increasing && r.monotone(),
          "max endpoint error " + fmt("%.3g", worst_err) + " (alpha <= 1.95), oracle column " +
              fmt("%.3g", worst_pred) + (increasing ? ", norms increasing" : ", norms NOT increasing")};
}

Outcome compactification() {
  const app::ConeReport r = default_cone();
  double worst = 0.0, at_1_19 = -1, at_0_199 = -1;
  for (const auto& row : r.rows) {
    const double expected = 2.0 / std::sqrt(1.0 + row.endpoint_norm * row.endpoint_norm);
    worst = std::max(worst, std::abs(row.pole_distance - expected));
    if (row.sigma == 1.0 && row.alpha == 1.9) at_1_19 = row.pole_distance;
    if (row.sigma == 0.0 && row.alpha == 1.99) at_0_199 = row.pole_distance;
  }
  return {worst <= 1e-8 && at_1_19 >= 0 && at_1_19 < 0.15 && at_0_199 >= 0 && at_0_199 < 0.02,
          "formula gap " + fmt("%.3g", worst) + ", d(1,1.9)=" + fmt("%.4f", at_1_19) + ", d(0,1.99)=" +
              fmt("%.4f", at_0_199)};
}

std::vector<GeodesicState> initial_conditions() {
  return {
      a_state(Point{0, 0, 0}, {1, 0, 0}, {0, 1, 0}),
      a_state(Point{0.5, 0, 0}, {0, 1, 0}, {0.3, 0, 0.2}),
      a_state(Point{-0.3, 0.4, 0.1}, {1, 1, 0}, {0, 0, 1}),
      a_state(Point{1, 1, 1}, {0.5, -0.2, 0.3}, {1, 0.5, -0.5}),
      a_state(Point{0.2, -0.7, 0.4}, {-1, 0.3, 0.6}, {0.4, 0.4, 0.4}),
  };
}

Outcome conformal_invariance() {
  double worst_set = 0.0, worst_param = 0.0;
  bool ok = true;
  for (const auto& init : initial_conditions()) {
    const app::InvarianceReport r = app::run_invariance(MetricField::euclidean(3), ConformalFactor::stereographic(),
                                                        init, 1.0, Mobius::identity());
    ok = ok && r.completed();
    worst_set = std::max(worst_set, r.conformal_point_set);
    worst_param = std::max(worst_param, r.conformal_parameter);
  }
  return {ok && worst_set <= 1e-5 && worst_param <= 1e-5,
          "point set " + fmt("%.3g", worst_set) + ", parameter " + fmt("%.3g", worst_param)};
}

Outcome mobius_invariance() {
  double worst = 0.0;
  bool ok = true;
  const std::vector<Mobius> maps = {Mobius::reversal(), Mobius{2, 0, 0, 1}, Mobius{1, 0, -0.5, 1},
                                    Mobius{1, 0, 0.5, 1}, Mobius{-1, 2, 1, 3}};
  for (const MetricField& field : {MetricField::euclidean(3), MetricField::round_sphere(3)})
    for (const auto& init : initial_conditions())
      for (const Mobius& m : maps) {
        const app::InvarianceReport r =
            app::run_invariance(field, ConformalFactor::constant(1.0), init, 1.0, m);
        ok = ok && r.completed();
        worst = std::max(worst, r.mobius);
      }

  bool exact = true;
  const SymMatrix g = MetricField::round_sphere(3).metric_at(Point{0.1, 0.2, 0.3});
  for (double tau0 : {0.0, 0.5}) {
    GeodesicState s = a_state(Point{0.1, 0.2, 0.3}, {0.7, -0.4, 1.3}, {0.25, 1.5, -2});
    s.param = tau0;
    const GeodesicState twice = mobius_reparam(mobius_reparam(s, Mobius::reversal(), g), Mobius::reversal(), g);
    exact = exact && twice.x == s.x && twice.vel == s.vel && twice.acc == s.acc && twice.param == s.param;
  }
  return {ok && worst <= 1e-5 && exact,
          "max deviation " + fmt("%.3g", worst) + " over 50 runs, double reversal " + (exact ? "exact" : "NOT exact")};
}

Outcome formulation_equivalence() {
  double worst = 0.0;
  bool ok = true;
  for (const MetricField& field : {MetricField::euclidean(3), MetricField::round_sphere(3)})
    for (const auto& a : initial_conditions()) {
      const SymMatrix g = field.metric_at(a.x);
      const Trajectory ta = integrate(field, a, 1.0);
      const Trajectory tb = integrate(field, convert(a, Formulation::kB, g), 1.0);
      const Trajectory tc = integrate(field, convert(a, Formulation::kC, g), ta.metric_length.back());
      ok = ok && ta.termination == Termination::kCompleted && tb.termination == Termination::kCompleted &&
           tc.termination == Termination::kCompleted;
      worst = std::max({worst, arclength_gap(ta, tb), arclength_gap(ta, tc)});
      c_runs.push_back({field, tc});
    }
  // Unit-speed great circle from the sphere chart origin to the unit chart circle.
  const MetricField sphere = MetricField::round_sphere(3);
  const Trajectory gc = integrate(sphere, {Formulation::kC, Point::zero(3), {0.5, 0, 0}, {0, 0, 0}, 0.0}, std::acos(0.0));
  ok = ok && gc.termination == Termination::kCompleted && std::abs(gc.back().x.chart_norm() - 1.0) <= 1e-5;
  c_runs.push_back({sphere, gc});
  return {ok && worst <= 1e-5, "max resampled gap " + fmt("%.3g", worst) + " over 10 initial conditions"};
}

Outcome curvature_oracles() {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto random_point = [&](double max_norm) {
    Point x(3);
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      x[i] = normal(rng);
      s += x[i] * x[i];
    }
    const double r = max_norm * std::cbrt(uni(rng)) / std::sqrt(s);
    return r * x;
  };
  double flat = 0.0, scalar = 0.0, schouten = 0.0;
  const MetricField e = MetricField::euclidean(3);
  const MetricField closed = MetricField::round_sphere(3);
  const MetricField fd = closed.with_finite_differences();
  for (int i = 0; i < 50; ++i) {
    const Point x = random_point(3.0);
    const CurvatureAtPoint c = curvature_at(e, x);
    flat = std::max(flat, std::abs(c.scalar));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        flat = std::max({flat, std::abs(c.ricci(a, b)), std::abs(c.schouten(a, b))});
        for (int k = 0; k < 3; ++k) flat = std::max(flat, std::abs(c.gamma(a, b, k)));
      }
    for (const MetricField& f : {closed, fd}) {
      const CurvatureAtPoint s = curvature_at(f, x);
      const SymMatrix g = f.metric_at(x);
      scalar = std::max(scalar, std::abs(s.scalar - 6.0));
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) schouten = std::max(schouten, std::abs(s.schouten(a, b) - 0.5 * g(a, b)));
    }
  }
  return {flat <= 1e-9 && scalar <= 1e-4 && schouten <= 1e-4,
          "flat " + fmt("%.3g", flat) + ", |R - 6| " + fmt("%.3g", scalar) + ", |P - g/2| " + fmt("%.3g", schouten)};
}

Outcome c_form_constraints() {
  double worst = 0.0, drift = 0.0;
  std::size_t steps = 0;
  for (const CRun& run : c_runs) {
    drift = std::max(drift, run.traj.max_constraint_drift);
    for (const auto& s : run.traj.samples) {
      const SymMatrix g = run.field.metric_at(s.x);
      worst = std::max({worst, std::abs(std::sqrt(inner(g, s.vel, s.vel)) - 1.0), std::abs(inner(g, s.acc, s.vel))});
      ++steps;
    }
  }
  return {!c_runs.empty() && worst <= 1e-8,
          "max violation " + fmt("%.3g", worst) + " over " + std::to_string(steps) + " samples in " +
              std::to_string(c_runs.size()) + " runs (pre-projection drift " + fmt("%.3g", drift) + ")"};
}

Outcome stereographic() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> logr(-3.0, 4.0);
  double round_trip = 0.0, conformal = 0.0;
  for (int i = 0; i < 100; ++i) {
    Point x(3);
    for (int k = 0; k < 3; ++k) x[k] = normal(rng);
    x *= std::pow(10.0, logr(rng)) / x.chart_norm();
    const Point back = stereo::from_sphere(stereo::to_sphere(x));
    round_trip = std::max(round_trip, chart_distance(back, x) / std::max(1.0, x.chart_norm()));
  }
  const double h = 1e-6;
  for (int i = 0; i < 50; ++i) {
    Point x(3);
    for (int k = 0; k < 3; ++k) x[k] = normal(rng);
    Eigen::Matrix<double, 4, 3> jac;
    for (int c = 0; c < 3; ++c) {
      Point p = x, m = x;
      p[c] += h;
      m[c] -= h;
      const stereo::SpherePoint sp = stereo::to_sphere(p), sm = stereo::to_sphere(m);
      for (int r = 0; r < 4; ++r) jac(r, c) = (sp[r] - sm[r]) / (2 * h);
    }
    const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    const double om = 2.0 / (1.0 + r2);
    conformal = std::max(conformal, (jac.transpose() * jac - om * om * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
  }
  return {round_trip <= 1e-12 && conformal <= 1e-6,
          "round trip " + fmt("%.3g", round_trip) + " (relative), conformality " + fmt("%.3g", conformal)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  // Criterion 9 inspects the C-form runs produced by criterion 7.
  const std::vector<Criterion> criteria = {
      {"closed-form oracle equivalence", oracle_equivalence},
      {"circle geometry", circle_geometry},
      {"endpoint law", endpoint_law},
      {"compactification limit", compactification},
      {"conformal invariance", conformal_invariance},
      {"Mobius/reversal invariance", mobius_invariance},
      {"formulation equivalence", formulation_equivalence},
      {"curvature oracles", curvature_oracles},
      {"C-form constraints", c_form_constraints},
      {"stereographic chart", stereographic},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %-32s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
