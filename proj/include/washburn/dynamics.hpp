#pragma once

#include <string_view>

namespace washburn {

/// Phase-space point of the u-equation: u = H^2/2 and v = du/ds.
struct State {
  double u = 0.0;
  double v = 0.0;
};

/// Equilibrium of the u-system.
inline constexpr State kEquilibrium{0.5, 0.0};

/// Right-hand side (u', v') of the (optionally regularized) u-system:
///   u' = v,  v' = 1 - (beta/sqrt(omega)) v - sqrt(2 max(u,0) + epsilon).
/// Total on R^2 thanks to the positive-part clamp.
State rhs_u(State x, double omega, double beta, double epsilon = 0.0);

/// H'' of the dimensionless Washburn equation in (H, T) coordinates,
///   H'' = [1 - H - beta H H' - omega H'^2] / (omega H).
/// Throws Errc::singularity for H <= 1e-12; callers starting at H = 0 use rhs_u.
double rhs_H(double H, double Hdot, double omega, double beta);

inline constexpr double kSingularH = 1e-12;

/// The four reduced flow regimes.
enum class RegimeCase {
  negligible_gravity = 1,
  negligible_inertia = 2,
  negligible_gravity_inertia = 3,
  negligible_viscosity = 4,
};

std::string_view to_string(RegimeCase c);
RegimeCase regime_from_string(std::string_view name);

/// Power-law exponents t_hat = omega^a, h_hat = omega^b of a regime.
/// Case 3 is a one-parameter family a = 2b with a in (0,1); `family` is set
/// and (a, b) hold a representative member (b = 1/4).
struct RegimeExponents {
  double a = 0.0;
  double b = 0.0;
  bool family = false;
  double a_lo = 0.0, a_hi = 0.0;  // open bounds, only meaningful for the family
  double b_lo = 0.0, b_hi = 0.0;
};

RegimeExponents regime_exponents(RegimeCase c);

struct RegimeSpec {
  RegimeCase case_id = RegimeCase::negligible_gravity;
  double a = 1.0;
  double b = 0.5;

  /// Spec with the canonical exponents of `c`; for Case 3 pass b in (0, 1/2).
  static RegimeSpec make(RegimeCase c, double case3_b = 0.25);
};

/// Derivative of the reduced model in u~ = (h*)^2/2 coordinates. For the
/// first-order cases (2 and 3) only `du` is meaningful and `first_order` is set.
struct RegimeDerivative {
  double du = 0.0;
  double dv = 0.0;
  bool first_order = false;
};

/// Throws Errc::domain when u~ < 0 in Cases 2 and 4.
RegimeDerivative rhs_regime(const RegimeSpec& spec, State x, double beta);

/// Same as rhs_regime but clamps u~ at zero; used inside the integrator where
/// stage values may dip below zero by rounding.
RegimeDerivative rhs_regime_clamped(const RegimeSpec& spec, State x, double beta);

}  // namespace washburn
