#pragma once

#include <span>
#include <vector>

#include "washburn/dynamics.hpp"
#include "washburn/ode.hpp"
#include "washburn/params.hpp"

namespace washburn {

using ode::Tolerances;

/// One row of a trajectory. H, T, E, V are derived from (s, u, v), never integrated.
struct Sample {
  double s = 0.0;
  double u = 0.0;
  double v = 0.0;
  double H = 0.0;
  double T = 0.0;
  double E = 0.0;
  double V = 0.0;
};

/// A crossing of u through the level, with the sign of v at the crossing.
struct Crossing {
  double s = 0.0;
  int direction = 0;
};

struct IntegrateOptions {
  double epsilon = 0.0;
  double horizon = 0.0;  // 0 selects default_horizon()
  Tolerances tolerances{};
  double sample_step = 0.01;
};

inline constexpr double kMaxHorizon = 1e6;

class Trajectory {
 public:
  const ModelParams& params() const noexcept { return params_; }
  double epsilon() const noexcept { return epsilon_; }
  const Tolerances& tolerances() const noexcept { return tol_; }
  double sample_step() const noexcept { return sample_step_; }
  const std::vector<Sample>& samples() const noexcept { return samples_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const ode::DenseSolution<2>& dense() const noexcept { return dense_; }
  State initial() const noexcept { return initial_; }

  /// Dense-output state at s in [0, S].
  State at(double s) const;
  double horizon() const noexcept { return dense_.end(); }

 private:
  friend Trajectory integrate_from(const ModelParams&, State, const IntegrateOptions&);
  ModelParams params_ = ModelParams::dimensionless(1.0, 1.0, 0.0);
  double epsilon_ = 0.0;
  Tolerances tol_{};
  double sample_step_ = 0.0;
  State initial_{};
  std::vector<Sample> samples_;
  std::vector<Crossing> crossings_;
  ode::DenseSolution<2> dense_;
};

/// Builds a sample record from a state, filling the derived columns.
Sample make_sample(double s, State x, double omega);

/// 30 / (beta / sqrt(omega)), capped at kMaxHorizon.
double default_horizon(const ModelParams& m);

/// 30 / |Re(lambda_slow)|: long enough for the slow mode of a node to settle.
double settling_horizon(double omega, double beta);

/// Integrates the u-system from u(0) = alpha^2/2, v(0) = 0.
Trajectory integrate(const ModelParams& m, const IntegrateOptions& opt = {});

/// Same, from an arbitrary initial state (omega and beta taken from m).
Trajectory integrate_from(const ModelParams& m, State initial, const IntegrateOptions& opt = {});

inline constexpr double kCrossingBand = 1e-9;
inline constexpr double kCrossingTol = 1e-10;

/// Times where u - level changes sign, with a hysteresis band of kCrossingBand,
/// refined by bisection on the dense output to kCrossingTol.
std::vector<Crossing> detect_crossings(const Trajectory& traj, double level = 0.5);

/// max_i |a.u_i - b.u_i| over the shared sample grid.
double sup_distance(const Trajectory& a, const Trajectory& b);

struct DependenceRow {
  double alpha = 0.0;
  double delta_alpha = 0.0;
  double distance = 0.0;
};

/// Sup-norm distance of u_alpha from u_alpha0 over [0, horizon] for each alpha.
std::vector<DependenceRow> continuous_dependence(const ModelParams& m, double alpha0,
                                                 std::span<const double> alphas,
                                                 const IntegrateOptions& opt);

struct RegularizationRow {
  double epsilon = 0.0;
  double next_epsilon = 0.0;
  double distance = 0.0;  // ||u_eps - u_next||_inf
};

/// Distances between consecutive regularized runs along `epsilons`.
std::vector<RegularizationRow> regularization_convergence(const ModelParams& m,
                                                          std::span<const double> epsilons,
                                                          const IntegrateOptions& opt);

// ---- reduced regimes -------------------------------------------------------

struct RegimeOptions {
  double alpha = 0.0;     // h*(0) = alpha, u~(0) = alpha^2/2, u~'(0) = 0
  double horizon = 10.0;  // t* range
  double sample_step = 0.01;
  double case3_b = 0.25;
  Tolerances tolerances{1e-13, 1e-12};
};

struct RegimeSample {
  double t = 0.0;
  double u = 0.0;  // u~ = (h*)^2 / 2
  double v = 0.0;  // u~' (zero for first-order cases)
  double h = 0.0;  // h* = sqrt(2 u~)
  // Case 1: closed-form u~, Case 2: elapsed time from the implicit relation,
  // Case 3: closed-form h*, Case 4: energy.
  double oracle = 0.0;
  // Case 1: u - oracle, Case 2: oracle - t, Case 3: h - oracle, Case 4: E - E(0).
  double residual = 0.0;
};

struct RegimeRun {
  RegimeSpec spec;
  double beta = 1.0;
  RegimeOptions options;
  std::vector<RegimeSample> samples;
  double max_abs_residual = 0.0;
  const char* residual_kind = "";
};

/// Integrates a reduced model and evaluates its oracle residual at every sample.
RegimeRun integrate_regime(RegimeCase c, double beta, const RegimeOptions& opt);

/// Closed form of Case 1 (u~'' + beta u~' = 1, u~'(0) = 0).
double case1_closed_form(double t, double beta, double u0);
/// Closed form of Case 3, h* = sqrt(2 t / beta + h0^2).
double case3_closed_form(double t, double beta, double h0);
/// beta[-h - ln(1-h)] - beta[-h0 - ln(1-h0)], equal to t along Case 2 solutions.
double case2_elapsed_time(double h, double h0, double beta);
/// 1/2 v^2 - u + (2 sqrt2/3) u^{3/2}, conserved in Case 4.
double case4_energy(double u, double v);

}  // namespace washburn
