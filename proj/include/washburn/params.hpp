#pragma once

#include <optional>
#include <string>
#include <vector>

namespace washburn {

/// Dimensional description of the fluid and the capillary (SI units).
struct PhysicalParams {
  double rho = 0.0;    // density [kg/m^3]
  double mu = 0.0;     // dynamic viscosity [Pa s]
  double gamma = 0.0;  // surface tension [N/m]
  double theta = 0.0;  // contact angle [rad], in [0, pi/2)
  double g = 9.81;     // gravitational acceleration [m/s^2]
  double R = 0.0;      // pipe radius [m]
  double L = 0.0;      // slip length [m]
  double h0 = 0.0;     // initial column height [m]
};

/// Dimensional scales, only present when the model was built from PhysicalParams.
struct Scales {
  double h_e = 0.0;  // Jurin height [m]
  double tau = 0.0;  // time scale [s]
  double Oh = 0.0;   // Ohnesorge number
  double Bo = 0.0;   // Bond number
};

/// The dimensionless triple (omega, beta, alpha) driving every solver.
class ModelParams {
 public:
  /// Validates omega > 0, beta in (0, 1], alpha in [0, 3/2].
  static ModelParams dimensionless(double omega, double beta, double alpha);

  double omega() const noexcept { return omega_; }
  double beta() const noexcept { return beta_; }
  double alpha() const noexcept { return alpha_; }
  const std::optional<Scales>& scales() const noexcept { return scales_; }

  /// beta / sqrt(omega), the damping coefficient of the u-equation.
  double damping() const noexcept;
  double omega_star() const;

  ModelParams with_alpha(double alpha) const;

 private:
  friend ModelParams nondimensionalize(const PhysicalParams& p);
  ModelParams(double omega, double beta, double alpha) : omega_(omega), beta_(beta), alpha_(alpha) {}

  double omega_;
  double beta_;
  double alpha_;
  std::optional<Scales> scales_;
};

void validate(const PhysicalParams& p);

ModelParams nondimensionalize(const PhysicalParams& p);

/// Non-fatal remarks about a model, e.g. alpha outside the small-initial-height regime.
std::vector<std::string> advisories(const ModelParams& m);

/// Threshold above which alpha no longer reads as h0 << h_e.
inline constexpr double kSmallAlpha = 0.1;

/// omega* = beta^2 / 4, separating monotone from oscillatory approach.
double critical_omega(double beta);

double u_from_H(double H);
double H_from_u(double u);

/// Upper bound on u for every admissible alpha.
inline constexpr double kUpperBound = 9.0 / 8.0;
inline constexpr double kMaxAlpha = 1.5;

}  // namespace washburn
