#pragma once

// Conformal geodesic equations in three equivalent formulations, expanded into
// chart coordinates.
//
//   A form: state (x, V, A), parameter tau (projective),
//           d_tau A = 3 (V.A / V.V) A - (3 A.A / 2 V.V) V + (V.V) P(V) - 2 P(V,V) V
//   B form: state (x, V, B), parameter tau, B = A / V.V - 2 (V.A / (V.V)^2) V,
//           d_tau B = (V.B) B - (B.B / 2) V + P(V)
//   C form: state (x, U, C), parameter t (arc length), U.U = 1, C.U = 0,
//           d_t C = P(U) - (C.C + P(U,U)) U
//
// Here d_tau is the covariant derivative along the curve, P(V)^a = P_b^a V^b and
// dots are metric inner products. The right-hand sides below return plain chart
// derivatives, i.e. the covariant derivative minus the Christoffel terms.

#include <string_view>

#include "cgeo/curvature.hpp"
#include "cgeo/tensor.hpp"

namespace cgeo {

enum class Formulation { kA, kB, kC };

std::string_view to_string(Formulation f) noexcept;
Formulation formulation_from_string(std::string_view s);

/// vel is V (A/B forms) or U (C form); acc is A, B or C respectively.
/// param is tau for A/B forms and arc length t for the C form.
struct GeodesicState {
  Formulation form = Formulation::kA;
  Point x;
  Vector vel;
  Vector acc;
  double param = 0.0;
};

/// Chart derivatives of the state with respect to its parameter.
struct StateDerivative {
  Vector dx;
  Vector dvel;
  Vector dacc;
};

inline constexpr double kDegenerateVelocity = 1e-10;
inline constexpr double kConstraintTolerance = 1e-6;

StateDerivative rhs_a(const GeodesicState& state, const CurvatureAtPoint& curv);
StateDerivative rhs_b(const GeodesicState& state, const CurvatureAtPoint& curv);
/// Checks |U.U - 1| and |C.U| against kConstraintTolerance before evaluating.
StateDerivative rhs_c(const GeodesicState& state, const CurvatureAtPoint& curv);

/// Dispatch on state.form. With check_constraints false the C-form constraint
/// test is skipped, as needed for Runge-Kutta stage points.
StateDerivative rhs(const GeodesicState& state, const CurvatureAtPoint& curv,
                    bool check_constraints = true);

/// B = A / V.V - 2 (V.A / (V.V)^2) V.
Vector a_to_b(const Vector& vel, const Vector& acc, const SymMatrix& g);
/// Inverse of a_to_b for fixed V: A = (V.V) B - 2 (V.B) V.
Vector b_to_a(const Vector& vel, const Vector& b, const SymMatrix& g);

struct UnitData {
  Vector unit_vel;  // U
  Vector acc;       // C
};

/// Arc-length data from projective data at one point:
/// U = V / |V|, C = (A - (U.A) U) / V.V.
UnitData a_to_c(const Vector& vel, const Vector& acc, const SymMatrix& g);

/// Initial data in another formulation describing the same curve through x.
/// Conversions out of the C form are not offered: the arc-length data do not
/// determine a projective parameter.
GeodesicState convert(const GeodesicState& state, Formulation target, const SymMatrix& g);

/// Change of acceleration under g -> Omega^2 g at one point:
///   A:  A^a - (V.V) Upsilon^a + 2 (V.Upsilon) V^a
///   B:  B_a - Upsilon_a
///   C:  C_a - Upsilon_a + (U.Upsilon) U_a
/// Every index is moved with the unrescaled g, so for B and C the result is the
/// hatted covector raised with g; divide by Omega^2 for the vector of Omega^2 g.
/// For the C form, vel must be unit with respect to g.
Vector rescale_acc(Formulation kind, const Vector& vel, const Vector& acc, const Covector& upsilon,
                   const SymMatrix& g);

/// Full state for the metric Omega^2 g at the same point: the A/B parameter is
/// unchanged, the C-form velocity becomes U / Omega.
GeodesicState rescale_state(const GeodesicState& state, double omega, const Covector& upsilon,
                            const SymMatrix& g);

/// Projective reparameterization tau = s(hat_tau) = (a hat_tau + b) / (c hat_tau + d).
struct Mobius {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  static Mobius identity() { return {}; }
  /// hat_tau = 1 - tau.
  static Mobius reversal() { return {-1.0, 1.0, 0.0, 1.0}; }

  double determinant() const noexcept { return a * d - b * c; }
  double operator()(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;
  /// hat_tau with s(hat_tau) = tau.
  double inverse(double tau) const;
};

/// Initial data for the reparameterized curve hat_tau -> x(s(hat_tau)) at the
/// same point: param becomes s^-1(tau0), V' = s' V, A' = s'^2 A + s'' V.
/// Requires an A-form state; throws kPole when tau0 is not attained by s.
GeodesicState mobius_reparam(const GeodesicState& init, const Mobius& m, const SymMatrix& g);

}  // namespace cgeo
