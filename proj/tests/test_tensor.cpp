#include <doctest.h>

#include <random>

#include "cgeo/tensor.hpp"
#include "support.hpp"

using namespace cgeo;

TEST_CASE("inner product examples") {
  const SymMatrix id2 = SymMatrix::identity(2);
  CHECK(inner(id2, Vector{1, 0}, Vector{0, 1}) == 0.0);
  CHECK(inner(id2, Vector{3, 4}, Vector{3, 4}) == 25.0);
  CHECK(inner(SymMatrix::scaled_identity(3, 4.0), Vector{1, 0, 0}, Vector{1, 0, 0}) == 4.0);
}

TEST_CASE("raise examples") {
  CHECK(raise(SymMatrix::identity(2), Covector{1, 2}) == Vector{1, 2});
  const SymMatrix g = SymMatrix::scaled_identity(3, 4.0);
  CHECK(raise(inverse(g), Covector{4, 0, 0}) == Vector{1, 0, 0});
}

TEST_CASE("dimension mismatch is an argument error") {
  const SymMatrix g = SymMatrix::identity(2);
  try {
    (void)inner(g, Vector{1, 0, 0}, Vector{1, 0, 0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kArgument);
  }
  CHECK_THROWS_AS((void)raise(g, Covector{1, 2, 3}), Error);
  CHECK_THROWS_AS((void)(Vector{1, 2} + Vector{1, 2, 3}), Error);
}

TEST_CASE("dimension bounds") {
  CHECK_THROWS_AS(Vector(1), Error);
  CHECK_THROWS_AS(Vector(9), Error);
  try {
    check_dimension(9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnsupportedDimension);
  }
  CHECK_NOTHROW(Vector(8));
}

TEST_CASE("symmetric storage aliases both triangles") {
  SymMatrix m(3);
  m(2, 0) = 5.0;
  CHECK(m(0, 2) == 5.0);
  m(0, 1) = -1.0;
  CHECK(m(1, 0) == -1.0);
}

TEST_CASE("inner is exactly symmetric and raise/lower are inverse") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const SymMatrix g = testsupport::random_spd(rng, n);
    const SymMatrix gi = inverse(g);
    const Vector x = testsupport::random_vector(rng, n, 3.0);
    const Vector y = testsupport::random_vector(rng, n, 3.0);
    CHECK(inner(g, x, y) == inner(g, y, x));

    const Vector back = raise(gi, lower(g, x));
    for (int i = 0; i < n; ++i) CHECK(back[i] == doctest::Approx(x[i]).epsilon(1e-12).scale(x.chart_norm()));

    Covector w(n);
    for (int i = 0; i < n; ++i) w[i] = y[i];
    const double lhs = inner(g, raise(gi, w), x);
    const double rhs = pair(w, x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)) * 10);
  }
}

TEST_CASE("Cholesky inverse matches a dense reference and rejects indefinite input") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 8; ++n) {
    const SymMatrix g = testsupport::random_spd(rng, n);
    const Eigen::MatrixXd ref = testsupport::to_eigen(g).inverse();
    const SymMatrix gi = inverse(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(gi(i, j) == doctest::Approx(ref(i, j)).epsilon(1e-12));
    CHECK(positive_definite(g));
  }
  SymMatrix bad = SymMatrix::identity(3);
  bad(1, 1) = -1.0;
  CHECK_FALSE(positive_definite(bad));
  CHECK_THROWS_AS((void)inverse(bad), Error);
}

TEST_CASE("mix applies g^ac P_cb") {
  const SymMatrix g = SymMatrix::scaled_identity(3, 4.0);
  const SymMatrix p = SymMatrix::scaled_identity(3, 2.0);
  const Matrix m = mix(inverse(g), p);
  const Vector v = m.apply(Vector{1, 2, 3});
  CHECK(v[0] == doctest::Approx(0.5));
  CHECK(v[1] == doctest::Approx(1.0));
  CHECK(v[2] == doctest::Approx(1.5));
}

TEST_CASE("point helpers") {
  const Point a{1, 2};
  const Point b = displaced(a, Vector{1, -1}, 2.0);
  CHECK(b == Point{3, 0});
  CHECK(chart_difference(b, a) == Vector{2, -2});
  CHECK(chart_distance(a, b) == doctest::Approx(std::sqrt(8.0)));
}
