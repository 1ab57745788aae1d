#pragma once

#include <functional>
#include <memory>
#include <string>

#include "cgeo/tensor.hpp"

namespace cgeo {

/// First and second chart derivatives of the metric.
///   first(c, a, b)     = d_c g_ab
///   second(d, c, a, b) = d_d d_c g_ab
struct MetricDerivs {
  Tensor3 first;
  Tensor4 second;
};

enum class DerivMode { kClosedForm, kFiniteDifference };

inline constexpr double kDefaultFdStep = 1e-4;

/// Positive function Omega on a chart together with Upsilon_a = d_a log Omega.
///
/// Built-in factors carry closed-form gradient and Hessian of Omega; custom
/// factors only supply Omega and their derivatives are finite-differenced.
class ConformalFactor {
 public:
  using ScalarFn = std::function<double(const Point&)>;
  using GradientFn = std::function<Covector(const Point&)>;
  using HessianFn = std::function<SymMatrix(const Point&)>;

  /// Omega = c everywhere; c must be positive.
  static ConformalFactor constant(double c);
  /// Omega = 2 / (1 + |x|^2), the stereographic factor of the unit sphere.
  static ConformalFactor stereographic();
  /// Omega given only as a function; derivatives by central differences.
  static ConformalFactor custom(std::string name, ScalarFn omega, double fd_step = kDefaultFdStep);

  /// Pointwise product; closed-form derivatives survive when both factors have them.
  friend ConformalFactor operator*(const ConformalFactor& a, const ConformalFactor& b);

  const std::string& name() const noexcept { return name_; }
  bool has_closed_form() const noexcept { return static_cast<bool>(gradient_) && static_cast<bool>(hessian_); }
  bool is_constant() const noexcept { return constant_; }

  double omega(const Point& x) const;
  /// d_a Omega.
  Covector gradient(const Point& x) const;
  /// d_a d_b Omega.
  SymMatrix hessian(const Point& x) const;
  /// Upsilon_a = d_a log Omega.
  Covector upsilon(const Point& x) const;

 private:
  ConformalFactor(std::string name, ScalarFn omega, GradientFn gradient, HessianFn hessian,
                  double fd_step);

  std::string name_;
  ScalarFn omega_;
  GradientFn gradient_;
  HessianFn hessian_;
  double fd_step_ = kDefaultFdStep;
  bool constant_ = false;
};

/// A Riemannian metric on a chart region, evaluable pointwise with first and
/// second coordinate derivatives.
///
/// Values are immutable and cheap to copy (the model is shared); evaluation is
/// a pure function of the point, so one field can be used from many threads.
class MetricField {
 public:
  using Evaluator = std::function<SymMatrix(const Point&)>;
  using Guard = std::function<bool(const Point&)>;

  /// Flat metric delta_ab on all of R^n.
  static MetricField euclidean(int n);
  /// Unit round sphere in the stereographic chart: 4 / (1+|x|^2)^2 delta_ab.
  static MetricField round_sphere(int n);
  /// Arbitrary metric; derivatives always by finite differences.
  static MetricField custom(int n, std::string name, Evaluator evaluator, Guard guard = {});

  /// Same field with derivatives forced to central finite differences.
  MetricField with_finite_differences(double h = kDefaultFdStep) const;

  int dimension() const noexcept;
  const std::string& name() const noexcept;
  DerivMode deriv_mode() const noexcept;
  double fd_step() const noexcept { return fd_step_; }
  /// True only for fields known to have vanishing curvature everywhere.
  bool is_flat() const noexcept;

  /// Chart validity; also false for points with non-finite coordinates.
  bool in_domain(const Point& x) const;

  /// g_ab at x. Throws kDomain outside the chart, kArgument for a wrong
  /// dimension or a non-positive conformal factor.
  SymMatrix metric_at(const Point& x) const;

  /// Closed-form derivatives when the model has them, otherwise central
  /// differences with step h = fd_step * max(1, |x|). Throws kDomain when the
  /// stencil leaves the chart.
  MetricDerivs metric_derivs(const Point& x) const;

  struct Model;

 private:
  explicit MetricField(std::shared_ptr<const Model> model);

  friend MetricField conformal_rescale(const MetricField& field, const ConformalFactor& cf);

  MetricDerivs finite_difference_derivs(const Point& x) const;

  std::shared_ptr<const Model> model_;
  bool force_fd_ = false;
  double fd_step_ = kDefaultFdStep;
};

/// Omega^2 g for the given factor.
MetricField conformal_rescale(const MetricField& field, const ConformalFactor& cf);

}  // namespace cgeo
