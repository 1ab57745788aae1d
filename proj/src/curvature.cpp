#include "cgeo/curvature.hpp"

#include <string>

namespace cgeo {

namespace {

// Gamma_{d,bc} = (d_b g_dc + d_c g_bd - d_d g_bc) / 2.
Tensor3 lowered_christoffel(const Tensor3& dg) {
  const int n = dg.dim();
  Tensor3 out(n);
  for (int d = 0; d < n; ++d)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c <= b; ++c) {
        const double v = 0.5 * (dg(b, d, c) + dg(c, b, d) - dg(d, b, c));
        out(d, b, c) = v;
        out(d, c, b) = v;
      }
  return out;
}

Christoffel raise_first(const SymMatrix& g_inv, const Tensor3& lowered) {
  const int n = lowered.dim();
  Christoffel gamma(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c <= b; ++c) {
        double s = 0.0;
        for (int d = 0; d < n; ++d) s += g_inv(a, d) * lowered(d, b, c);
        gamma(a, b, c) = s;
        gamma(a, c, b) = s;
      }
  return gamma;
}

bool all_zero(const Tensor3& t) {
  for (double v : t.flat())
    if (v != 0.0) return false;
  return true;
}

CurvatureAtPoint flat_data(const SymMatrix& g, const SymMatrix& g_inv) {
  const int n = g.dim();
  CurvatureAtPoint out;
  out.metric = g;
  out.metric_inverse = g_inv;
  out.gamma = Christoffel(n);
  out.ricci = SymMatrix::zero(n);
  out.scalar = 0.0;
  out.schouten = SymMatrix::zero(n);
  out.schouten_mixed = Matrix(n);
  return out;
}

CurvatureAtPoint compute(const MetricField& field, const Point& x) {
  const int n = field.dimension();
  const SymMatrix g = field.metric_at(x);
  const SymMatrix g_inv = inverse(g);
  const MetricDerivs derivs = field.metric_derivs(x);

  const Tensor3 low = lowered_christoffel(derivs.first);
  const Christoffel gamma = raise_first(g_inv, low);

  // d_e g^ad = -g^af d_e g_fh g^hd
  Tensor3 dginv(n);  // (e, a, d)
  if (!all_zero(derivs.first)) {
    for (int e = 0; e < n; ++e)
      for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d) {
          double s = 0.0;
          for (int f = 0; f < n; ++f)
            for (int h = 0; h < n; ++h) s += g_inv(a, f) * derivs.first(e, f, h) * g_inv(h, d);
          dginv(e, a, d) = -s;
        }
  }

  // d_e Gamma^a_bc, stored dgamma(e, a, b, c).
  Tensor4 dgamma(n);
  for (int e = 0; e < n; ++e)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c <= b; ++c) {
          double s = 0.0;
          for (int d = 0; d < n; ++d) {
            const double dlow = 0.5 * (derivs.second(e, b, d, c) + derivs.second(e, c, b, d) -
                                       derivs.second(e, d, b, c));
            s += dginv(e, a, d) * low(d, b, c) + g_inv(a, d) * dlow;
          }
          dgamma(e, a, b, c) = s;
          dgamma(e, a, c, b) = s;
        }

  // Ricci R_bd = R^a_bad = d_a G^a_db - d_d G^a_ab + G^a_ae G^e_db - G^a_de G^e_ab.
  SymMatrix ricci(n);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d <= b; ++d) {
      auto component = [&](int bb, int dd) {
        double s = 0.0;
        for (int a = 0; a < n; ++a) {
          s += dgamma(a, a, dd, bb) - dgamma(dd, a, a, bb);
          for (int e = 0; e < n; ++e)
            s += gamma(a, a, e) * gamma(e, dd, bb) - gamma(a, dd, e) * gamma(e, a, bb);
        }
        return s;
      };
      ricci(b, d) = 0.5 * (component(b, d) + component(d, b));
    }

  double scalar = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) scalar += g_inv(a, b) * ricci(a, b);

  const double k = 1.0 / static_cast<double>(n - 2);
  const double trace_part = scalar / (2.0 * static_cast<double>(n - 1));
  SymMatrix schouten(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b) schouten(a, b) = k * (ricci(a, b) - trace_part * g(a, b));

  CurvatureAtPoint out;
  out.metric = g;
  out.metric_inverse = g_inv;
  out.gamma = gamma;
  out.ricci = ricci;
  out.scalar = scalar;
  out.schouten = schouten;
  out.schouten_mixed = mix(g_inv, schouten);
  return out;
}

}  // namespace

Christoffel christoffel(const MetricField& field, const Point& x) {
  check_same_dimension(field.dimension(), x.dim(), "christoffel");
  const SymMatrix g_inv = inverse(field.metric_at(x));
  const MetricDerivs derivs = field.metric_derivs(x);
  return raise_first(g_inv, lowered_christoffel(derivs.first));
}

CurvatureAtPoint curvature_at(const MetricField& field, const Point& x) {
  if (field.dimension() < 3)
    throw Error(ErrorCode::kUnsupportedDimension,
                "Schouten tensor needs dimension >= 3, got " + std::to_string(field.dimension()));
  check_same_dimension(field.dimension(), x.dim(), "curvature_at");
  return compute(field, x);
}

CurvatureAtPoint geodesic_data_at(const MetricField& field, const Point& x) {
  check_same_dimension(field.dimension(), x.dim(), "geodesic_data_at");
  if (field.is_flat() && field.deriv_mode() == DerivMode::kClosedForm) {
    const SymMatrix g = field.metric_at(x);
    const SymMatrix g_inv = inverse(g);
    CurvatureAtPoint out = flat_data(g, g_inv);
    out.gamma = raise_first(g_inv, lowered_christoffel(field.metric_derivs(x).first));
    return out;
  }
  if (field.dimension() < 3) {
    if (!field.is_flat())
      throw Error(ErrorCode::kUnsupportedDimension,
                  "conformal geodesics in dimension 2 are only supported on flat fields");
    const SymMatrix g = field.metric_at(x);
    const SymMatrix g_inv = inverse(g);
    CurvatureAtPoint out = flat_data(g, g_inv);
    out.gamma = christoffel(field, x);
    return out;
  }
  return compute(field, x);
}

}  // namespace cgeo
