#include "cgeo/euclid.hpp"

#include <cmath>
#include <complex>

namespace cgeo::euclid {

namespace {

Point planar(double x, double y, int n) {
  Point p(n);
  p[0] = x;
  p[1] = y;
  return p;
}

// In the plane z = x + i y the curve is z = 2 tau / (2 - gamma tau), gamma = alpha + i beta.
std::complex<double> denominator(const CircleParams& p, double tau) {
  return 2.0 - std::complex<double>(p.alpha, p.beta) * tau;
}

void check_finite(const CircleParams& p) {
  check_dimension(p.ambient_dim);
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta))
    throw Error(ErrorCode::kArgument, "circle parameters must be finite");
}

}  // namespace

Point eval_circle(const CircleParams& p, double tau) {
  check_finite(p);
  const double u = 2.0 - p.alpha * tau;
  const double den = u * u + p.beta * p.beta * tau * tau;
  if (den == 0.0) throw Error(ErrorCode::kPole, "projective parameter reaches the pole tau = 2/alpha");
  const double k = 2.0 / den;
  return planar(k * u * tau, k * p.beta * tau * tau, p.ambient_dim);
}

Vector eval_circle_velocity(const CircleParams& p, double tau) {
  check_finite(p);
  const std::complex<double> w = denominator(p, tau);
  if (w == 0.0) throw Error(ErrorCode::kPole, "projective parameter reaches the pole tau = 2/alpha");
  const std::complex<double> v = 4.0 / (w * w);
  Vector out(p.ambient_dim);
  out[0] = v.real();
  out[1] = v.imag();
  return out;
}

Vector eval_circle_acceleration(const CircleParams& p, double tau) {
  check_finite(p);
  const std::complex<double> w = denominator(p, tau);
  if (w == 0.0) throw Error(ErrorCode::kPole, "projective parameter reaches the pole tau = 2/alpha");
  const std::complex<double> a = 8.0 * std::complex<double>(p.alpha, p.beta) / (w * w * w);
  Vector out(p.ambient_dim);
  out[0] = a.real();
  out[1] = a.imag();
  return out;
}

Circle circle_center_radius(const CircleParams& p) {
  check_finite(p);
  if (p.degenerate())
    throw Error(ErrorCode::kArgument, "beta = 0: the trajectory is the x-axis, not a circle");
  return {planar(0.0, 1.0 / p.beta, p.ambient_dim), 1.0 / std::abs(p.beta)};
}

double line_param(double alpha, double tau) {
  const double den = 2.0 - alpha * tau;
  if (den == 0.0) throw Error(ErrorCode::kPole, "projective parameter reaches the pole tau = 2/alpha");
  return 2.0 * tau / den;
}

Point limit_point(const CircleParams& p) {
  check_finite(p);
  if (p.degenerate()) throw Error(ErrorCode::kPole, "beta = 0: the curve has no finite limit");
  const double k = 2.0 / (p.alpha * p.alpha + p.beta * p.beta);
  return planar(-k * p.alpha, k * p.beta, p.ambient_dim);
}

Point endpoint_sigma(double alpha, double sigma, int ambient_dim) {
  check_dimension(ambient_dim);
  if (!std::isfinite(alpha) || !std::isfinite(sigma))
    throw Error(ErrorCode::kArgument, "alpha and sigma must be finite");
  if (!(alpha < 2.0)) throw Error(ErrorCode::kOutOfRange, "endpoint law needs alpha < 2");
  const double k = 2.0 / (2.0 - alpha) / (1.0 + sigma * sigma);
  return planar(k, k * sigma, ambient_dim);
}

}  // namespace cgeo::euclid
