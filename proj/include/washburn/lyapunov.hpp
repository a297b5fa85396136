#pragma once

namespace washburn {

struct EnergyValues {
  double E = 0.0;  // 1/2 v^2 - u + (2 sqrt2 / 3) u^{3/2}
  double V = 0.0;  // E + 1/6, zero only at (1/2, 0)
};

/// Energy and Lyapunov function of the u-system. Throws Errc::domain for u < 0.
/// V switches to the factored form when |u - 1/2| < 1e-3.
EnergyValues lyapunov(double u, double v);

/// Direct evaluation E + 1/6 (no cancellation guard).
double lyapunov_direct(double u, double v);

/// 1/2 v^2 + (2 sqrt2 / 3)(sqrt u - 1/sqrt2)^2 (sqrt u + 1/(2 sqrt2)).
double lyapunov_factored(double u, double v);

/// -u + (2 sqrt2 / 3) u^{3/2} + 1/6, the restriction of V to v = 0.
double lyapunov_level(double u);

inline constexpr double kFactoredBand = 1e-3;

}  // namespace washburn
