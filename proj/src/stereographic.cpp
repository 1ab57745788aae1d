#include "cgeo/stereographic.hpp"

#include <cmath>

namespace cgeo::stereo {

SpherePoint::SpherePoint(std::span<const double> coords) : coords_(coords.begin(), coords.end()) {
  check_dimension(static_cast<int>(coords_.size()) - 1);
  double s = 0.0;
  for (double v : coords_) s += v * v;
  if (!(std::abs(std::sqrt(s) - 1.0) <= 1e-12))
    throw Error(ErrorCode::kArgument, "sphere point must have unit norm");
}

SpherePoint SpherePoint::north_pole(int n) {
  check_dimension(n);
  std::vector<double> c(static_cast<std::size_t>(n + 1), 0.0);
  c.back() = 1.0;
  return SpherePoint(std::move(c), Unchecked{});
}

SpherePoint SpherePoint::south_pole(int n) {
  check_dimension(n);
  std::vector<double> c(static_cast<std::size_t>(n + 1), 0.0);
  c.back() = -1.0;
  return SpherePoint(std::move(c), Unchecked{});
}

SpherePoint to_sphere(const Point& x) {
  if (!x.finite()) throw Error(ErrorCode::kArgument, "to_sphere needs a finite point");
  const int n = x.dim();
  double r2 = 0.0;
  for (double v : x.values()) r2 += v * v;
  const double q = 1.0 + r2;
  std::vector<double> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) c[i] = 2.0 * x[i] / q;
  c[n] = (r2 - 1.0) / q;
  return SpherePoint(std::move(c), SpherePoint::Unchecked{});
}

Point from_sphere(const SpherePoint& p) {
  const int n = p.chart_dim();
  const double h = p.height();
  if (!(h < 1.0 - kPoleEpsilon)) throw Error(ErrorCode::kPole, "point is at the north pole (infinity)");
  Point x(n);
  if (h <= 0.0) {
    for (int i = 0; i < n; ++i) x[i] = p[i] / (1.0 - h);
  } else {
    // 1 - h = |p'|^2 / (1 + h) avoids cancellation near the north pole.
    double planar2 = 0.0;
    for (int i = 0; i < n; ++i) planar2 += p[i] * p[i];
    const double k = (1.0 + h) / planar2;
    for (int i = 0; i < n; ++i) x[i] = p[i] * k;
  }
  return x;
}

double conformal_factor(const Point& x) {
  if (!x.finite()) throw Error(ErrorCode::kArgument, "conformal_factor needs a finite point");
  double r2 = 0.0;
  for (double v : x.values()) r2 += v * v;
  return 2.0 / (1.0 + r2);
}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  check_same_dimension(a.chart_dim(), b.chart_dim(), "chordal_distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const double d = a.coords()[i] - b.coords()[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double distance_to_pole(const Point& x) {
  return chordal_distance(to_sphere(x), SpherePoint::north_pole(x.dim()));
}

}  // namespace cgeo::stereo
