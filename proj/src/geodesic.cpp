#include "cgeo/geodesic.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace cgeo {

std::string_view to_string(Formulation f) noexcept {
  switch (f) {
    case Formulation::kA: return "A";
    case Formulation::kB: return "B";
    case Formulation::kC: return "C";
  }
  return "?";
}

Formulation formulation_from_string(std::string_view s) {
  if (s == "A" || s == "a") return Formulation::kA;
  if (s == "B" || s == "b") return Formulation::kB;
  if (s == "C" || s == "c") return Formulation::kC;
  throw Error(ErrorCode::kArgument, "unknown formulation '" + std::string(s) + "'");
}

namespace {

void check_state(const GeodesicState& s, const CurvatureAtPoint& curv) {
  const int n = curv.metric.dim();
  check_same_dimension(n, s.x.dim(), "state position");
  check_same_dimension(n, s.vel.dim(), "state velocity");
  check_same_dimension(n, s.acc.dim(), "state acceleration");
}

double checked_speed2(const SymMatrix& g, const Vector& v) {
  const double vv = inner(g, v, v);
  if (!(vv > kDegenerateVelocity)) {
    std::ostringstream msg;
    msg << "degenerate velocity: V.V = " << vv;
    throw Error(ErrorCode::kDegenerateVelocity, msg.str());
  }
  return vv;
}

// Gamma^a_bc X^b Y^c
Vector christoffel_contract(const Christoffel& gamma, const Vector& x, const Vector& y) {
  const int n = x.dim();
  Vector out(n);
  for (int a = 0; a < n; ++a) {
    double s = 0.0;
    for (int b = 0; b < n; ++b) {
      if (x[b] == 0.0) continue;
      for (int c = 0; c < n; ++c) s += gamma(a, b, c) * x[b] * y[c];
    }
    out[a] = s;
  }
  return out;
}

double schouten_quadratic(const CurvatureAtPoint& curv, const Vector& v) {
  double s = 0.0;
  const int n = v.dim();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) s += curv.schouten(b, c) * v[b] * v[c];
  return s;
}

StateDerivative rhs_c_unchecked(const GeodesicState& st, const CurvatureAtPoint& curv) {
  const SymMatrix& g = curv.metric;
  const Vector& u = st.vel;
  const Vector& c = st.acc;
  const double cc = inner(g, c, c);
  const double puu = schouten_quadratic(curv, u);
  Vector dc = curv.schouten_mixed.apply(u) - (cc + puu) * u;
  return {Vector(u.values()), c - christoffel_contract(curv.gamma, u, u),
          dc - christoffel_contract(curv.gamma, u, c)};
}

}  // namespace

StateDerivative rhs_a(const GeodesicState& st, const CurvatureAtPoint& curv) {
  check_state(st, curv);
  const SymMatrix& g = curv.metric;
  const Vector& v = st.vel;
  const Vector& a = st.acc;
  const double vv = checked_speed2(g, v);
  const double va = inner(g, v, a);
  const double aa = inner(g, a, a);
  const double pvv = schouten_quadratic(curv, v);

  Vector da = (3.0 * va / vv) * a - (1.5 * aa / vv) * v + vv * curv.schouten_mixed.apply(v) -
              (2.0 * pvv) * v;
  return {Vector(v.values()), a - christoffel_contract(curv.gamma, v, v),
          da - christoffel_contract(curv.gamma, v, a)};
}

StateDerivative rhs_b(const GeodesicState& st, const CurvatureAtPoint& curv) {
  check_state(st, curv);
  const SymMatrix& g = curv.metric;
  const Vector& v = st.vel;
  const Vector& b = st.acc;
  const double vv = checked_speed2(g, v);
  const double vb = inner(g, v, b);
  const double bb = inner(g, b, b);

  const Vector a = vv * b - (2.0 * vb) * v;
  Vector db = vb * b - (0.5 * bb) * v + curv.schouten_mixed.apply(v);
  return {Vector(v.values()), a - christoffel_contract(curv.gamma, v, v),
          db - christoffel_contract(curv.gamma, v, b)};
}

StateDerivative rhs_c(const GeodesicState& st, const CurvatureAtPoint& curv) {
  check_state(st, curv);
  const SymMatrix& g = curv.metric;
  const double uu = inner(g, st.vel, st.vel);
  const double cu = inner(g, st.acc, st.vel);
  if (!(std::abs(uu - 1.0) <= kConstraintTolerance) || !(std::abs(cu) <= kConstraintTolerance)) {
    std::ostringstream msg;
    msg << "arc-length constraints violated: |U|^2 - 1 = " << (uu - 1.0) << ", C.U = " << cu;
    throw Error(ErrorCode::kConstraintDrift, msg.str());
  }
  return rhs_c_unchecked(st, curv);
}

StateDerivative rhs(const GeodesicState& state, const CurvatureAtPoint& curv,
                    bool check_constraints) {
  switch (state.form) {
    case Formulation::kA: return rhs_a(state, curv);
    case Formulation::kB: return rhs_b(state, curv);
    case Formulation::kC:
      if (check_constraints) return rhs_c(state, curv);
      check_state(state, curv);
      return rhs_c_unchecked(state, curv);
  }
  throw Error(ErrorCode::kArgument, "unknown formulation");
}

Vector a_to_b(const Vector& vel, const Vector& acc, const SymMatrix& g) {
  const double vv = checked_speed2(g, vel);
  const double va = inner(g, vel, acc);
  return (1.0 / vv) * acc - (2.0 * va / (vv * vv)) * vel;
}

Vector b_to_a(const Vector& vel, const Vector& b, const SymMatrix& g) {
  const double vv = checked_speed2(g, vel);
  const double vb = inner(g, vel, b);
  return vv * b - (2.0 * vb) * vel;
}

UnitData a_to_c(const Vector& vel, const Vector& acc, const SymMatrix& g) {
  const double vv = checked_speed2(g, vel);
  const double speed = std::sqrt(vv);
  const Vector u = (1.0 / speed) * vel;
  const Vector c = (1.0 / vv) * (acc - inner(g, u, acc) * u);
  return {u, c};
}

GeodesicState convert(const GeodesicState& state, Formulation target, const SymMatrix& g) {
  if (state.form == target) return state;
  GeodesicState out = state;
  out.form = target;
  switch (state.form) {
    case Formulation::kA:
      if (target == Formulation::kB) {
        out.acc = a_to_b(state.vel, state.acc, g);
      } else {
        const UnitData ud = a_to_c(state.vel, state.acc, g);
        out.vel = ud.unit_vel;
        out.acc = ud.acc;
        out.param = 0.0;
      }
      return out;
    case Formulation::kB: {
      GeodesicState as_a = state;
      as_a.form = Formulation::kA;
      as_a.acc = b_to_a(state.vel, state.acc, g);
      return convert(as_a, target, g);
    }
    case Formulation::kC: break;
  }
  throw Error(ErrorCode::kArgument, "cannot convert arc-length data to a projective formulation");
}

Vector rescale_acc(Formulation kind, const Vector& vel, const Vector& acc, const Covector& upsilon,
                   const SymMatrix& g) {
  check_same_dimension(g.dim(), vel.dim(), "rescale_acc velocity");
  check_same_dimension(g.dim(), acc.dim(), "rescale_acc acceleration");
  check_same_dimension(g.dim(), upsilon.dim(), "rescale_acc upsilon");
  const Vector ups = raise(inverse(g), upsilon);
  switch (kind) {
    case Formulation::kA: {
      const double vv = inner(g, vel, vel);
      return acc - vv * ups + (2.0 * pair(upsilon, vel)) * vel;
    }
    case Formulation::kB: return acc - ups;
    case Formulation::kC: return acc - ups + pair(upsilon, vel) * vel;
  }
  throw Error(ErrorCode::kArgument, "unknown formulation");
}

GeodesicState rescale_state(const GeodesicState& state, double omega, const Covector& upsilon,
                            const SymMatrix& g) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw Error(ErrorCode::kArgument, "conformal factor must be positive");
  GeodesicState out = state;
  out.acc = rescale_acc(state.form, state.vel, state.acc, upsilon, g);
  switch (state.form) {
    case Formulation::kA: break;
    case Formulation::kB: out.acc *= 1.0 / (omega * omega); break;
    case Formulation::kC:
      out.vel *= 1.0 / omega;
      out.acc *= 1.0 / (omega * omega);
      break;
  }
  return out;
}

double Mobius::operator()(double t) const {
  const double den = c * t + d;
  if (den == 0.0) throw Error(ErrorCode::kPole, "Mobius map has a pole at this parameter");
  return (a * t + b) / den;
}

double Mobius::derivative(double t) const {
  const double den = c * t + d;
  if (den == 0.0) throw Error(ErrorCode::kPole, "Mobius map has a pole at this parameter");
  return determinant() / (den * den);
}

double Mobius::second_derivative(double t) const {
  const double den = c * t + d;
  if (den == 0.0) throw Error(ErrorCode::kPole, "Mobius map has a pole at this parameter");
  return -2.0 * c * determinant() / (den * den * den);
}

double Mobius::inverse(double tau) const {
  const double den = a - c * tau;
  if (den == 0.0)
    throw Error(ErrorCode::kPole, "parameter is the image of infinity under the Mobius map");
  return (d * tau - b) / den;
}

GeodesicState mobius_reparam(const GeodesicState& init, const Mobius& m, const SymMatrix& g) {
  if (init.form != Formulation::kA)
    throw Error(ErrorCode::kArgument, "Mobius reparameterization acts on A-form data");
  if (!(std::abs(m.determinant()) > 0.0) || !std::isfinite(m.determinant()))
    throw Error(ErrorCode::kArgument, "Mobius map must have ad - bc != 0");
  const double t_hat = m.inverse(init.param);
  const double s1 = m.derivative(t_hat);
  const double s2 = m.second_derivative(t_hat);

  GeodesicState out = init;
  out.param = t_hat;
  out.vel = s1 * init.vel;
  out.acc = (s1 * s1) * init.acc + s2 * init.vel;
  checked_speed2(g, out.vel);
  return out;
}

}  // namespace cgeo
