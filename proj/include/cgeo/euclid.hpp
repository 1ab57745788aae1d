#pragma once

// Closed-form conformal circles of Euclidean space.
//
// From the origin with unit velocity e_1 and acceleration (alpha, beta, 0, ...)
// the projectively parameterized solution is
//
//   tau -> 2 / ((2 - alpha tau)^2 + beta^2 tau^2) * ((2 - alpha tau) tau, beta tau^2, 0, ...)
//
// a round circle through the origin centred at (0, 1/beta) when beta != 0, and
// the x-axis with x = 2 tau / (2 - alpha tau) when beta == 0.

#include "cgeo/tensor.hpp"

namespace cgeo::euclid {

struct CircleParams {
  double alpha = 0.0;
  double beta = 0.0;
  int ambient_dim = 2;

  bool degenerate() const noexcept { return beta == 0.0; }
};

/// Throws kPole when beta == 0 and tau == 2 / alpha.
Point eval_circle(const CircleParams& p, double tau);

/// First and second tau-derivatives of eval_circle, for initial-data checks.
Vector eval_circle_velocity(const CircleParams& p, double tau);
Vector eval_circle_acceleration(const CircleParams& p, double tau);

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Centre (0, 1/beta) and radius 1/|beta|; kArgument for the straight-line case.
Circle circle_center_radius(const CircleParams& p);

/// x = 2 tau / (2 - alpha tau); kPole at tau = 2 / alpha.
double line_param(double alpha, double tau);

/// Limit of the curve as tau -> +-infinity: 2 / (alpha^2 + beta^2) * (-alpha, beta).
/// kPole when beta == 0 (no finite limit).
Point limit_point(const CircleParams& p);

/// Point reached at tau = 1 when beta = sigma (2 - alpha):
/// 2 / (2 - alpha) * 1 / (1 + sigma^2) * (1, sigma). kOutOfRange for alpha >= 2.
Point endpoint_sigma(double alpha, double sigma, int ambient_dim = 2);

}  // namespace cgeo::euclid
