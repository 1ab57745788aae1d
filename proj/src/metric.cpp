#include "cgeo/metric.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace cgeo {

// ---------------------------------------------------------------------------
// ConformalFactor

ConformalFactor::ConformalFactor(std::string name, ScalarFn omega, GradientFn gradient,
                                 HessianFn hessian, double fd_step)
    : name_(std::move(name)),
      omega_(std::move(omega)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)),
      fd_step_(fd_step) {}

ConformalFactor ConformalFactor::constant(double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw Error(ErrorCode::kArgument, "constant conformal factor must be positive and finite");
  ConformalFactor f(
      "constant", [c](const Point&) { return c; },
      [](const Point& x) { return Covector::zero(x.dim()); },
      [](const Point& x) { return SymMatrix::zero(x.dim()); }, kDefaultFdStep);
  f.constant_ = true;
  return f;
}

ConformalFactor ConformalFactor::stereographic() {
  // Omega = 2/(1+r^2); d_c Omega = -Omega^2 x_c;
  // d_c d_d Omega = 2 Omega^3 x_c x_d - Omega^2 delta_cd.
  auto omega = [](const Point& x) {
    double r2 = 0.0;
    for (double v : x.values()) r2 += v * v;
    return 2.0 / (1.0 + r2);
  };
  auto gradient = [omega](const Point& x) {
    const double w = omega(x);
    Covector g(x.dim());
    for (int c = 0; c < x.dim(); ++c) g[c] = -w * w * x[c];
    return g;
  };
  auto hessian = [omega](const Point& x) {
    const double w = omega(x);
    SymMatrix h(x.dim());
    for (int c = 0; c < x.dim(); ++c)
      for (int d = 0; d <= c; ++d) h(c, d) = 2.0 * w * w * w * x[c] * x[d] - (c == d ? w * w : 0.0);
    return h;
  };
  return ConformalFactor("stereographic", omega, gradient, hessian, kDefaultFdStep);
}

ConformalFactor ConformalFactor::custom(std::string name, ScalarFn omega, double fd_step) {
  if (!omega) throw Error(ErrorCode::kArgument, "custom conformal factor needs a function");
  if (!(fd_step > 0.0)) throw Error(ErrorCode::kArgument, "finite-difference step must be positive");
  return ConformalFactor(std::move(name), std::move(omega), {}, {}, fd_step);
}

ConformalFactor operator*(const ConformalFactor& a, const ConformalFactor& b) {
  auto omega = [a, b](const Point& x) { return a.omega(x) * b.omega(x); };
  ConformalFactor::GradientFn gradient;
  ConformalFactor::HessianFn hessian;
  if (a.has_closed_form() && b.has_closed_form()) {
    gradient = [a, b](const Point& x) {
      return a.omega(x) * b.gradient(x) + b.omega(x) * a.gradient(x);
    };
    hessian = [a, b](const Point& x) {
      const double wa = a.omega(x), wb = b.omega(x);
      const Covector ga = a.gradient(x), gb = b.gradient(x);
      SymMatrix h = wb * a.hessian(x) + wa * b.hessian(x);
      for (int c = 0; c < x.dim(); ++c)
        for (int d = 0; d <= c; ++d) h(c, d) += ga[c] * gb[d] + ga[d] * gb[c];
      return h;
    };
  }
  ConformalFactor f(a.name() + "*" + b.name(), omega, gradient, hessian,
                    std::min(a.fd_step_, b.fd_step_));
  f.constant_ = a.constant_ && b.constant_;
  return f;
}

double ConformalFactor::omega(const Point& x) const { return omega_(x); }

namespace {

double fd_scale(const Point& x, double step) { return step * std::max(1.0, x.chart_norm()); }

}  // namespace

Covector ConformalFactor::gradient(const Point& x) const {
  if (gradient_) return gradient_(x);
  const double h = fd_scale(x, fd_step_);
  Covector g(x.dim());
  for (int c = 0; c < x.dim(); ++c) {
    Point p = x, m = x;
    p[c] += h;
    m[c] -= h;
    g[c] = (omega_(p) - omega_(m)) / (2.0 * h);
  }
  return g;
}

SymMatrix ConformalFactor::hessian(const Point& x) const {
  if (hessian_) return hessian_(x);
  const double h = fd_scale(x, fd_step_);
  const double w0 = omega_(x);
  SymMatrix out(x.dim());
  for (int c = 0; c < x.dim(); ++c) {
    Point p = x, m = x;
    p[c] += h;
    m[c] -= h;
    out(c, c) = (omega_(p) - 2.0 * w0 + omega_(m)) / (h * h);
    for (int d = 0; d < c; ++d) {
      Point pp = x, pm = x, mp = x, mm = x;
      pp[c] += h, pp[d] += h;
      pm[c] += h, pm[d] -= h;
      mp[c] -= h, mp[d] += h;
      mm[c] -= h, mm[d] -= h;
      out(c, d) = (omega_(pp) - omega_(pm) - omega_(mp) + omega_(mm)) / (4.0 * h * h);
    }
  }
  return out;
}

Covector ConformalFactor::upsilon(const Point& x) const {
  if (gradient_) {
    const double w = omega_(x);
    return (1.0 / w) * gradient_(x);
  }
  const double h = fd_scale(x, fd_step_);
  Covector u(x.dim());
  for (int c = 0; c < x.dim(); ++c) {
    Point p = x, m = x;
    p[c] += h;
    m[c] -= h;
    u[c] = (std::log(omega_(p)) - std::log(omega_(m))) / (2.0 * h);
  }
  return u;
}

// ---------------------------------------------------------------------------
// MetricField models

struct MetricField::Model {
  Model(int dim, std::string nm, bool is_flat) : n(dim), name(std::move(nm)), flat(is_flat) {}
  virtual ~Model() = default;

  virtual bool guard(const Point&) const { return true; }
  virtual SymMatrix value(const Point& x) const = 0;
  virtual bool has_closed_form() const { return false; }
  virtual MetricDerivs closed_derivs(const Point&) const {
    throw Error(ErrorCode::kArgument, "no closed-form derivatives for metric '" + name + "'");
  }

  int n;
  std::string name;
  bool flat;
};

namespace {

MetricDerivs zero_derivs(int n) { return {Tensor3(n), Tensor4(n)}; }

struct EuclideanModel final : MetricField::Model {
  explicit EuclideanModel(int dim) : Model(dim, "euclidean", true) {}
  SymMatrix value(const Point&) const override { return SymMatrix::identity(n); }
  bool has_closed_form() const override { return true; }
  MetricDerivs closed_derivs(const Point&) const override { return zero_derivs(n); }
};

struct RoundSphereModel final : MetricField::Model {
  explicit RoundSphereModel(int dim) : Model(dim, "round_sphere", false) {}

  static double q(const Point& x) {
    double r2 = 0.0;
    for (double v : x.values()) r2 += v * v;
    return 1.0 + r2;
  }

  SymMatrix value(const Point& x) const override {
    const double s = q(x);
    return SymMatrix::scaled_identity(n, 4.0 / (s * s));
  }
  bool has_closed_form() const override { return true; }

  // g = 4 q^-2 delta, q = 1 + |x|^2:
  //   d_c g     = -16 x_c q^-3 delta
  //   d_d d_c g = (-16 delta_cd q^-3 + 96 x_c x_d q^-4) delta
  MetricDerivs closed_derivs(const Point& x) const override {
    const double s = q(x);
    const double s3 = s * s * s;
    const double s4 = s3 * s;
    MetricDerivs d = zero_derivs(n);
    for (int c = 0; c < n; ++c) {
      const double dc = -16.0 * x[c] / s3;
      for (int a = 0; a < n; ++a) d.first(c, a, a) = dc;
    }
    for (int e = 0; e < n; ++e)
      for (int c = 0; c < n; ++c) {
        const double v = (e == c ? -16.0 / s3 : 0.0) + 96.0 * x[e] * x[c] / s4;
        for (int a = 0; a < n; ++a) d.second(e, c, a, a) = v;
      }
    return d;
  }
};

struct CustomModel final : MetricField::Model {
  CustomModel(int dim, std::string nm, MetricField::Evaluator ev, MetricField::Guard gd)
      : Model(dim, std::move(nm), false), evaluator(std::move(ev)), guard_fn(std::move(gd)) {}

  bool guard(const Point& x) const override { return !guard_fn || guard_fn(x); }
  SymMatrix value(const Point& x) const override { return evaluator(x); }

  MetricField::Evaluator evaluator;
  MetricField::Guard guard_fn;
};

struct RescaledModel final : MetricField::Model {
  RescaledModel(MetricField b, ConformalFactor f, bool is_flat)
      : Model(b.dimension(), "rescaled(" + b.name() + "," + f.name() + ")", is_flat),
        base(std::move(b)),
        cf(std::move(f)) {}

  bool guard(const Point& x) const override { return base.in_domain(x); }

  double checked_omega(const Point& x) const {
    const double w = cf.omega(x);
    if (!(w > 0.0) || !std::isfinite(w))
      throw Error(ErrorCode::kArgument, "conformal factor is not positive at the sample point");
    return w;
  }

  SymMatrix value(const Point& x) const override {
    const double w = checked_omega(x);
    return (w * w) * base.metric_at(x);
  }

  bool has_closed_form() const override {
    return base.deriv_mode() == DerivMode::kClosedForm && cf.has_closed_form();
  }

  // d_c (W^2 g) = 2 W W_c g + W^2 g_c
  // d_d d_c (W^2 g) = 2 (W_d W_c + W W_dc) g + 2 W W_c g_d + 2 W W_d g_c + W^2 g_dc
  MetricDerivs closed_derivs(const Point& x) const override {
    const double w = checked_omega(x);
    const Covector dw = cf.gradient(x);
    const SymMatrix hw = cf.hessian(x);
    const SymMatrix g = base.metric_at(x);
    const MetricDerivs bd = base.metric_derivs(x);
    MetricDerivs d = zero_derivs(n);
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          d.first(c, a, b) = 2.0 * w * dw[c] * g(a, b) + w * w * bd.first(c, a, b);
    for (int e = 0; e < n; ++e)
      for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            d.second(e, c, a, b) = 2.0 * (dw[e] * dw[c] + w * hw(e, c)) * g(a, b) +
                                   2.0 * w * dw[c] * bd.first(e, a, b) +
                                   2.0 * w * dw[e] * bd.first(c, a, b) +
                                   w * w * bd.second(e, c, a, b);
    return d;
  }

  MetricField base;
  ConformalFactor cf;
};

}  // namespace

// ---------------------------------------------------------------------------
// MetricField

MetricField::MetricField(std::shared_ptr<const Model> model) : model_(std::move(model)) {}

MetricField MetricField::euclidean(int n) {
  check_dimension(n);
  return MetricField(std::make_shared<EuclideanModel>(n));
}

MetricField MetricField::round_sphere(int n) {
  check_dimension(n);
  return MetricField(std::make_shared<RoundSphereModel>(n));
}

MetricField MetricField::custom(int n, std::string name, Evaluator evaluator, Guard guard) {
  check_dimension(n);
  if (!evaluator) throw Error(ErrorCode::kArgument, "custom metric needs an evaluator");
  MetricField f(std::make_shared<CustomModel>(n, std::move(name), std::move(evaluator),
                                              std::move(guard)));
  f.force_fd_ = true;
  return f;
}

MetricField MetricField::with_finite_differences(double h) const {
  if (!(h > 0.0) || !std::isfinite(h))
    throw Error(ErrorCode::kArgument, "finite-difference step must be positive");
  MetricField f = *this;
  f.force_fd_ = true;
  f.fd_step_ = h;
  return f;
}

int MetricField::dimension() const noexcept { return model_->n; }
const std::string& MetricField::name() const noexcept { return model_->name; }
bool MetricField::is_flat() const noexcept { return model_->flat; }

DerivMode MetricField::deriv_mode() const noexcept {
  return (!force_fd_ && model_->has_closed_form()) ? DerivMode::kClosedForm
                                                   : DerivMode::kFiniteDifference;
}

bool MetricField::in_domain(const Point& x) const {
  if (x.dim() != model_->n || !x.finite()) return false;
  return model_->guard(x);
}

SymMatrix MetricField::metric_at(const Point& x) const {
  check_same_dimension(model_->n, x.dim(), "metric_at");
  if (!in_domain(x)) throw Error(ErrorCode::kDomain, "point outside the chart domain of " + name());
  SymMatrix g = model_->value(x);
  check_same_dimension(model_->n, g.dim(), "metric evaluator result");
  return g;
}

MetricDerivs MetricField::metric_derivs(const Point& x) const {
  check_same_dimension(model_->n, x.dim(), "metric_derivs");
  if (!in_domain(x)) throw Error(ErrorCode::kDomain, "point outside the chart domain of " + name());
  if (deriv_mode() == DerivMode::kClosedForm) return model_->closed_derivs(x);
  return finite_difference_derivs(x);
}

MetricDerivs MetricField::finite_difference_derivs(const Point& x) const {
  const int n = model_->n;
  const double h = fd_scale(x, fd_step_);
  auto eval = [&](const Point& p) {
    if (!in_domain(p))
      throw Error(ErrorCode::kDomain, "finite-difference stencil leaves the chart domain of " + name());
    return model_->value(p);
  };

  MetricDerivs d = zero_derivs(n);
  const SymMatrix g0 = eval(x);
  std::vector<SymMatrix> plus(n), minus(n);
  for (int c = 0; c < n; ++c) {
    Point p = x, m = x;
    p[c] += h;
    m[c] -= h;
    plus[c] = eval(p);
    minus[c] = eval(m);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        d.first(c, a, b) = (plus[c](a, b) - minus[c](a, b)) / (2.0 * h);
        d.second(c, c, a, b) = (plus[c](a, b) - 2.0 * g0(a, b) + minus[c](a, b)) / (h * h);
      }
  }
  for (int c = 0; c < n; ++c)
    for (int e = 0; e < c; ++e) {
      Point pp = x, pm = x, mp = x, mm = x;
      pp[c] += h, pp[e] += h;
      pm[c] += h, pm[e] -= h;
      mp[c] -= h, mp[e] += h;
      mm[c] -= h, mm[e] -= h;
      const SymMatrix gpp = eval(pp), gpm = eval(pm), gmp = eval(mp), gmm = eval(mm);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const double v = (gpp(a, b) - gpm(a, b) - gmp(a, b) + gmm(a, b)) / (4.0 * h * h);
          d.second(c, e, a, b) = v;
          d.second(e, c, a, b) = v;
        }
    }
  return d;
}

MetricField conformal_rescale(const MetricField& field, const ConformalFactor& cf) {
  // A constant factor keeps a flat metric flat.
  const bool flat = field.is_flat() && cf.is_constant();
  MetricField out(std::make_shared<RescaledModel>(field, cf, flat));
  out.fd_step_ = field.fd_step_;
  return out;
}

}  // namespace cgeo
