#include <doctest.h>

#include <random>

#include "cgeo/metric.hpp"
#include "support.hpp"

using namespace cgeo;

namespace {

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace

TEST_CASE("metric_at examples") {
  const MetricField e = MetricField::euclidean(3);
  CHECK(max_abs_diff(e.metric_at(Point{1, 2, 3}), SymMatrix::identity(3)) == 0.0);

  const MetricField s = MetricField::round_sphere(3);
  CHECK(max_abs_diff(s.metric_at(Point::zero(3)), SymMatrix::scaled_identity(3, 4.0)) == 0.0);
  CHECK(max_abs_diff(s.metric_at(Point{1, 0, 0}), SymMatrix::identity(3)) <= 1e-15);
  CHECK(max_abs_diff(s.metric_at(Point{0, 0.6, 0.8}), SymMatrix::identity(3)) <= 1e-15);
}

TEST_CASE("metric_derivs examples") {
  const MetricDerivs e = MetricField::euclidean(3).metric_derivs(Point{0.3, -1, 2});
  for (double v : e.first.flat()) CHECK(v == 0.0);
  for (double v : e.second.flat()) CHECK(v == 0.0);

  const MetricDerivs s = MetricField::round_sphere(3).metric_derivs(Point::zero(3));
  for (double v : s.first.flat()) CHECK(std::abs(v) <= 1e-15);
}

TEST_CASE("closed form and finite differences agree on the sphere") {
  const MetricField closed = MetricField::round_sphere(3);
  const MetricField fd = closed.with_finite_differences(1e-4);
  CHECK(fd.deriv_mode() == DerivMode::kFiniteDifference);

  std::mt19937_64 rng(3);
  std::vector<Point> points = {Point{0.3, 0, 0}};
  for (int i = 0; i < 30; ++i) points.push_back(testsupport::random_point(rng, 3, 3.0));
  for (const Point& x : points) {
    const MetricDerivs a = closed.metric_derivs(x);
    const MetricDerivs b = fd.metric_derivs(x);
    for (std::size_t i = 0; i < a.first.flat().size(); ++i)
      CHECK(std::abs(a.first.flat()[i] - b.first.flat()[i]) <= 1e-6);
    for (std::size_t i = 0; i < a.second.flat().size(); ++i)
      CHECK(std::abs(a.second.flat()[i] - b.second.flat()[i]) <= 1e-4);
  }
}

TEST_CASE("derivative arrays have the required symmetries") {
  const MetricDerivs d = MetricField::round_sphere(4).metric_derivs(Point{0.2, -0.4, 0.1, 0.7});
  const int n = 4;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(d.first(c, a, b) == d.first(c, b, a));
        for (int e = 0; e < n; ++e) {
          CHECK(d.second(e, c, a, b) == doctest::Approx(d.second(c, e, a, b)).epsilon(1e-14));
          CHECK(d.second(e, c, a, b) == d.second(e, c, b, a));
        }
      }
}

TEST_CASE("built-in fields are positive definite at random points") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Point x = testsupport::random_point(rng, 3, 10.0);
    CHECK(positive_definite(MetricField::round_sphere(3).metric_at(x)));
    CHECK(positive_definite(MetricField::euclidean(3).metric_at(x)));
    CHECK(positive_definite(
        conformal_rescale(MetricField::round_sphere(3), ConformalFactor::constant(0.5)).metric_at(x)));
  }
}

TEST_CASE("conformal rescaling examples") {
  std::mt19937_64 rng(9);
  const MetricField e = MetricField::euclidean(3);

  const MetricField same = conformal_rescale(e, ConformalFactor::constant(1.0));
  CHECK(same.is_flat());
  const MetricField tripled = conformal_rescale(e, ConformalFactor::constant(3.0));
  const MetricField sphere = conformal_rescale(e, ConformalFactor::stereographic());
  CHECK_FALSE(sphere.is_flat());
  const MetricField builtin = MetricField::round_sphere(3);

  for (int i = 0; i < 20; ++i) {
    const Point x = testsupport::random_point(rng, 3, 4.0);
    CHECK(max_abs_diff(same.metric_at(x), e.metric_at(x)) == 0.0);
    CHECK(max_abs_diff(tripled.metric_at(x), SymMatrix::scaled_identity(3, 9.0)) <= 1e-15);
    CHECK(max_abs_diff(sphere.metric_at(x), builtin.metric_at(x)) <= 1e-12);
    const Covector ups = ConformalFactor::constant(3.0).upsilon(x);
    for (double v : ups.values()) CHECK(v == 0.0);

    const MetricDerivs a = sphere.metric_derivs(x);
    const MetricDerivs b = builtin.metric_derivs(x);
    for (std::size_t k = 0; k < a.first.flat().size(); ++k)
      CHECK(a.first.flat()[k] == doctest::Approx(b.first.flat()[k]).epsilon(1e-12).scale(1.0));
    for (std::size_t k = 0; k < a.second.flat().size(); ++k)
      CHECK(a.second.flat()[k] == doctest::Approx(b.second.flat()[k]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("rescaling composes and log-gradients add") {
  std::mt19937_64 rng(13);
  const ConformalFactor o1 = ConformalFactor::stereographic();
  const ConformalFactor o2 = ConformalFactor::custom("shifted", [](const Point& x) {
    return 1.0 + 0.25 * std::exp(-x[0] * x[0]) + 0.1 * x[1] * x[1];
  });
  const MetricField base = MetricField::round_sphere(3);
  const MetricField twice = conformal_rescale(conformal_rescale(base, o1), o2);
  const MetricField once = conformal_rescale(base, o1 * o2);
  for (int i = 0; i < 20; ++i) {
    const Point x = testsupport::random_point(rng, 3, 2.0);
    CHECK(max_abs_diff(twice.metric_at(x), once.metric_at(x)) <= 1e-12 * once.metric_at(x)(0, 0) + 1e-15);
    const Covector sum = o1.upsilon(x) + o2.upsilon(x);
    const Covector prod = (o1 * o2).upsilon(x);
    for (int k = 0; k < 3; ++k) CHECK(prod[k] == doctest::Approx(sum[k]).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("closed-form factor derivatives match finite differences of log Omega") {
  std::mt19937_64 rng(17);
  const ConformalFactor cf = ConformalFactor::stereographic();
  CHECK(cf.has_closed_form());
  for (int i = 0; i < 50; ++i) {
    const Point x = testsupport::random_point(rng, 3, 3.0);
    const Covector ups = cf.upsilon(x);
    const SymMatrix hess = cf.hessian(x);
    const double h = 1e-5;
    for (int a = 0; a < 3; ++a) {
      Point p = x, m = x;
      p[a] += h;
      m[a] -= h;
      const double fd = (std::log(cf.omega(p)) - std::log(cf.omega(m))) / (2 * h);
      CHECK(ups[a] == doctest::Approx(fd).epsilon(1e-8).scale(1.0));
      const Covector gp = cf.gradient(p), gm = cf.gradient(m);
      for (int b = 0; b < 3; ++b)
        CHECK(hess(a, b) == doctest::Approx((gp[b] - gm[b]) / (2 * h)).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("non-positive conformal factor is an argument error") {
  const MetricField bad = conformal_rescale(
      MetricField::euclidean(2), ConformalFactor::custom("sign", [](const Point& x) { return x[0]; }));
  try {
    (void)bad.metric_at(Point{-1, 0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kArgument);
  }
  CHECK_THROWS_AS(ConformalFactor::constant(0.0), Error);
}

TEST_CASE("custom fields: domain guard and finite-difference stencil") {
  const MetricField half = MetricField::custom(
      2, "half_plane",
      [](const Point& x) {
        SymMatrix g(2);
        g(0, 0) = g(1, 1) = 1.0 / (x[1] * x[1]);
        return g;
      },
      [](const Point& x) { return x[1] > 0.0; });
  CHECK(half.deriv_mode() == DerivMode::kFiniteDifference);
  CHECK(half.in_domain(Point{0, 1}));
  CHECK_FALSE(half.in_domain(Point{0, -1}));
  CHECK_FALSE(half.in_domain(Point{0, std::nan("")}));
  try {
    (void)half.metric_at(Point{0, -1});
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
  try {
    (void)half.metric_derivs(Point{0, 1e-5});
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
  // d_y g_00 = -2 / y^3
  const MetricDerivs d = half.metric_derivs(Point{0.0, 2.0});
  CHECK(d.first(1, 0, 0) == doctest::Approx(-0.25).epsilon(1e-7));
  CHECK(d.second(1, 1, 0, 0) == doctest::Approx(6.0 / 16.0).epsilon(1e-5));
}
