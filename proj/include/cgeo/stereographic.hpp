#pragma once

// Stereographic chart of the unit sphere S^n in R^{n+1}, projecting from the
// north pole (0, ..., 0, 1). The chart origin is the south pole; the north pole
// is the point at infinity of R^n.

#include <array>
#include <span>
#include <vector>

#include "cgeo/tensor.hpp"

namespace cgeo::stereo {

inline constexpr double kPoleEpsilon = 1e-12;

/// Point of S^n as n+1 ambient coordinates.
class SpherePoint {
 public:
  /// Throws kArgument unless the coordinates have unit norm to 1e-12.
  explicit SpherePoint(std::span<const double> coords);

  int chart_dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](int i) const noexcept { return coords_[static_cast<std::size_t>(i)]; }
  /// Last ambient coordinate; +1 at the north pole.
  double height() const noexcept { return coords_.back(); }

  static SpherePoint north_pole(int n);
  static SpherePoint south_pole(int n);

 private:
  struct Unchecked {};
  SpherePoint(std::vector<double> coords, Unchecked) : coords_(std::move(coords)) {}
  friend SpherePoint to_sphere(const Point& x);

  std::vector<double> coords_;
};

/// (2x / (1+|x|^2), (|x|^2 - 1) / (|x|^2 + 1)).
SpherePoint to_sphere(const Point& x);

/// Inverse of to_sphere; kPole when the point is within kPoleEpsilon of the
/// north pole in height.
Point from_sphere(const SpherePoint& p);

/// Omega(x) = 2 / (1 + |x|^2): to_sphere pulls the round metric back to Omega^2 delta.
double conformal_factor(const Point& x);

/// Straight-line distance in R^{n+1}.
double chordal_distance(const SpherePoint& a, const SpherePoint& b);

/// Chordal distance from to_sphere(x) to the north pole.
double distance_to_pole(const Point& x);

}  // namespace cgeo::stereo
