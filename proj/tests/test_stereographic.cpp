#include <doctest.h>

#include <random>

#include "cgeo/stereographic.hpp"
#include "support.hpp"

using namespace cgeo;
using namespace cgeo::stereo;

TEST_CASE("to_sphere examples") {
  const SpherePoint s = to_sphere(Point::zero(3));
  CHECK(s.coords().size() == 4);
  CHECK(s.height() == -1.0);
  CHECK(chordal_distance(s, SpherePoint::south_pole(3)) == 0.0);

  const SpherePoint eq = to_sphere(Point{1, 0, 0});
  CHECK(eq[0] == 1.0);
  CHECK(eq.height() == 0.0);

  const SpherePoint p = to_sphere(Point{3, 0});
  CHECK(p[0] == doctest::Approx(0.6));
  CHECK(p[1] == 0.0);
  CHECK(p[2] == doctest::Approx(0.8));
  CHECK_THROWS_AS((void)to_sphere(Point{std::nan(""), 0}), Error);
}

TEST_CASE("from_sphere examples") {
  CHECK(from_sphere(SpherePoint::south_pole(2)) == Point{0, 0});
  const std::vector<double> c = {0.6, 0, 0.8};
  const Point x = from_sphere(SpherePoint(c));
  CHECK(x[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(x[1] == 0.0);
  try {
    (void)from_sphere(SpherePoint::north_pole(2));
    FAIL("expected a pole error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPole);
  }
  const std::vector<double> off = {0.6, 0, 0.81};
  CHECK_THROWS_AS(SpherePoint{off}, Error);
}

TEST_CASE("conformal factor examples") {
  CHECK(conformal_factor(Point::zero(3)) == 2.0);
  CHECK(conformal_factor(Point{0, 1, 0}) == 1.0);
  CHECK(conformal_factor(Point{1e3, 0}) == doctest::Approx(2e-6).epsilon(1e-5));
}

TEST_CASE("round trip at random points up to |x| = 1e4") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> logr(-3.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 3;
    Point x = testsupport::random_point(rng, n, 1.0);
    const double scale = std::pow(10.0, logr(rng)) / std::max(x.chart_norm(), 1e-300);
    x *= scale;
    const Point back = from_sphere(to_sphere(x));
    CHECK(chart_distance(back, x) <= 1e-12 * std::max(1.0, x.chart_norm()));
  }
}

TEST_CASE("Jacobian of to_sphere is conformal with factor Omega") {
  std::mt19937_64 rng(47);
  const double h = 1e-6;
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 3;
    const Point x = testsupport::random_point(rng, n, 3.0);
    Eigen::MatrixXd jac(n + 1, n);
    for (int c = 0; c < n; ++c) {
      Point p = x, m = x;
      p[c] += h;
      m[c] -= h;
      const SpherePoint sp = to_sphere(p), sm = to_sphere(m);
      for (int r = 0; r <= n; ++r) jac(r, c) = (sp[r] - sm[r]) / (2 * h);
    }
    const double om = conformal_factor(x);
    const Eigen::MatrixXd diff = jac.transpose() * jac - om * om * Eigen::MatrixXd::Identity(n, n);
    CHECK(diff.cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("chordal distance to the pole") {
  double prev = 3.0;
  for (double r = 0.0; r < 1e5; r = r * 1.7 + 0.1) {
    const Point x{r / std::sqrt(2.0), -r / std::sqrt(2.0)};
    const double d = distance_to_pole(x);
    CHECK(d == doctest::Approx(2.0 / std::sqrt(1.0 + r * r)).epsilon(1e-12));
    CHECK(d < prev);
    if (r >= 1.0) CHECK(d <= 2.0 / r);
    prev = d;
  }
}
