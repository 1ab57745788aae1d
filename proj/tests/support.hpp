#pragma once

// Independent reference computations shared by the test binaries. Nothing here
// calls into the library's derivative or curvature code.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cgeo/tensor.hpp"

namespace testsupport {

inline cgeo::Point random_point(std::mt19937_64& rng, int n, double max_norm) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  cgeo::Point x(n);
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    x[i] = normal(rng);
    s += x[i] * x[i];
  }
  const double r = max_norm * std::pow(uni(rng), 1.0 / n) / std::sqrt(s);
  for (int i = 0; i < n; ++i) x[i] *= r;
  return x;
}

inline cgeo::Vector random_vector(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::uniform_real_distribution<double> uni(-scale, scale);
  cgeo::Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = uni(rng);
  return v;
}

inline cgeo::SymMatrix random_spd(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uni(rng);
  const Eigen::MatrixXd spd = m * m.transpose() + n * Eigen::MatrixXd::Identity(n, n);
  cgeo::SymMatrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) g(i, j) = spd(i, j);
  return g;
}

inline Eigen::MatrixXd to_eigen(const cgeo::SymMatrix& g) {
  Eigen::MatrixXd m(g.dim(), g.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) m(i, j) = g(i, j);
  return m;
}

using MetricFn = std::function<cgeo::SymMatrix(const cgeo::Point&)>;

/// dg[c][a][b] = d_c g_ab by fourth-order central differences of the metric values.
inline std::vector<Eigen::MatrixXd> metric_gradient(const MetricFn& g, const cgeo::Point& x, double h) {
  const int n = x.dim();
  std::vector<Eigen::MatrixXd> dg;
  for (int c = 0; c < n; ++c) {
    auto at = [&](double s) {
      cgeo::Point y = x;
      y[c] += s;
      return to_eigen(g(y));
    };
    dg.push_back((-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12.0 * h));
  }
  return dg;
}

/// Christoffel symbols solved from the metric-compatibility conditions
///   d_c g_ab = g_ad G^d_cb + g_bd G^d_ca
/// with G symmetric in its lower pair, as a dense least-squares problem. This
/// never forms the Koszul formula, so it checks the library independently.
/// Returned as gamma[a][b][c] = G^a_bc.
inline std::vector<std::vector<std::vector<double>>> christoffel_from_compatibility(
    const MetricFn& g, const cgeo::Point& x, double h = 1e-3) {
  const int n = x.dim();
  const Eigen::MatrixXd g0 = to_eigen(g(x));
  const auto dg = metric_gradient(g, x, h);

  // Unknowns G^d_{cb} with c <= b.
  auto pair_index = [n](int c, int b) {
    if (c > b) std::swap(c, b);
    return c * n - c * (c - 1) / 2 + (b - c);
  };
  const int pairs = n * (n + 1) / 2;
  const int unknowns = n * pairs;
  auto unknown = [&](int d, int c, int b) { return d * pairs + pair_index(c, b); };

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n * n * n, unknowns);
  Eigen::VectorXd rhs(n * n * n);
  int row = 0;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b, ++row) {
        for (int d = 0; d < n; ++d) {
          m(row, unknown(d, c, b)) += g0(a, d);
          m(row, unknown(d, c, a)) += g0(b, d);
        }
        rhs(row) = dg[c](a, b);
      }
  const Eigen::VectorXd sol = m.colPivHouseholderQr().solve(rhs);

  std::vector<std::vector<std::vector<double>>> gamma(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) gamma[a][b][c] = sol(unknown(a, b, c));
  return gamma;
}

}  // namespace testsupport
