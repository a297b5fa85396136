#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "washburn/integrate.hpp"
#include "washburn/lyapunov.hpp"

namespace washburn {

enum class CriticalPointKind { stable_node, stable_spiral, stable_inflected_node };

std::string_view to_string(CriticalPointKind k);

struct StabilityReport {
  std::complex<double> lambda1;  // -(gamma/2)(1 + sqrt(disc))
  std::complex<double> lambda2;  // -(gamma/2)(1 - sqrt(disc))
  CriticalPointKind kind = CriticalPointKind::stable_node;
  double omega_star = 0.0;
  double discriminant = 0.0;  // 1 - 4 omega / beta^2
  // Eigenvector (1, lambda) of the real eigenvalue(s); unset for spirals.
  bool has_real_eigenvector = false;
  double eigenvector_slow[2] = {0.0, 0.0};
};

inline constexpr double kInflectedBand = 1e-12;

/// Eigenvalues and type of the equilibrium (1/2, 0) of the linearized u-system.
StabilityReport linearize(double omega, double beta);

struct BasinSpec {
  double alpha = 0.0;
  double C = 0.0;
  double u_min = 0.0;
  double u_max = 0.0;
};

/// Level constant C(alpha) and the two intersections of {V = C} with v = 0.
BasinSpec basin(double alpha);

/// |lyapunov_level(u) - C| at the given bound.
double basin_residual(const BasinSpec& b, double u);

enum class Approach { monotone, oscillatory, at_equilibrium };

std::string_view to_string(Approach a);

struct ApproachReport {
  Approach kind = Approach::monotone;
  std::vector<Crossing> crossings;
  double final_distance = 0.0;  // |(u, v)(S) - (1/2, 0)|
};

inline constexpr double kSettledDistance = 1e-4;
inline constexpr double kMonotoneTol = 1e-9;

/// Monotone / oscillatory / at-equilibrium from a computed trajectory.
/// Throws Errc::inconclusive when the horizon is too short, when exactly one
/// crossing occurs, or when u is non-monotone without crossings.
ApproachReport classify_approach(const Trajectory& traj);

struct AuditReport {
  double max_V_minus_C = 0.0;        // must stay <= 1e-8
  double max_V_increase = 0.0;       // largest V_{i+1} - V_i over samples
  double final_distance = 0.0;
  double initial_V_minus_C = 0.0;
  bool forward_invariant = false;
};

inline constexpr double kInvarianceTol = 1e-8;

/// Checks that V stays in the sublevel set {V <= C} along the trajectory.
/// Throws Errc::domain when the initial point is outside the set.
AuditReport audit_trajectory(const Trajectory& traj, const BasinSpec& b);

}  // namespace washburn
