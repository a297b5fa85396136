#pragma once

#include <cstddef>
#include <vector>

namespace washburn {

/// Node values of u on the uniform grid s_i = i * step, i = 0..N.
struct GridFunction {
  double step = 0.0;
  std::vector<double> values;

  std::size_t intervals() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  double node(std::size_t i) const noexcept { return static_cast<double>(i) * step; }
  double horizon() const noexcept { return node(intervals()); }
};

/// Grid function sampled from f on N intervals of width step.
template <class F>
GridFunction sample_grid(double step, std::size_t intervals, F&& f) {
  GridFunction g{step, std::vector<double>(intervals + 1)};
  for (std::size_t i = 0; i <= intervals; ++i) g.values[i] = f(g.node(i));
  return g;
}

/// Volterra operator
///   [T f](s) = alpha^2/2 + int_0^s (sqrt(omega)/beta)[1 - e^{-beta(s-t)/sqrt(omega)}](1 - sqrt(2[f(t)]_+)) dt
/// by the composite trapezoid rule with the kernel evaluated exactly at the nodes.
GridFunction apply_T(const GridFunction& f, double omega, double beta, double alpha);

struct PicardOptions {
  double horizon = 10.0;
  double step = 0.0;  // 0 selects horizon / 4096
  double tol = 1e-10;
  int max_iter = 10000;
};

struct PicardResult {
  GridFunction solution;
  std::vector<double> diffs;  // sup-norm of f_{k+1} - f_k per iteration
  int iterations = 0;
  double final_diff = 0.0;
};

inline constexpr std::size_t kMaxIntervals = std::size_t{1} << 14;

/// Iterates f_{k+1} = T(f_k) from f_0 = alpha^2/2 until the sup-norm update is below tol.
/// Throws Errc::non_convergence after max_iter iterations.
PicardResult picard_solve(double omega, double beta, double alpha, const PicardOptions& opt = {});

/// s* = min(1/2, sqrt(omega)/beta): the interval carrying the order-interval argument.
double order_interval_end(double omega, double beta);

/// u0(s) = s^2/6 and v0(s) = s^2/2 on `intervals` intervals covering [0, s*].
GridFunction lower_barrier(double omega, double beta, std::size_t intervals);
GridFunction upper_barrier(double omega, double beta, std::size_t intervals);

struct OrderIntervalReport {
  double lower_slack = 0.0;  // min_i T(v0)_i - u0_i
  double upper_slack = 0.0;  // min_i v0_i - T(u0)_i
  bool holds = false;
};

/// Checks T(v0) >= u0 and T(u0) <= v0 nodewise on [0, s*] (alpha = 0).
OrderIntervalReport check_order_interval(double omega, double beta, std::size_t intervals);

struct ScalingReport {
  double lambda = 0.0;
  double max_violation = 0.0;  // max_i T(lambda f)_i - lambda^{-1/2} T(f)_i
  std::size_t worst_node = 0;
  bool holds = false;
};

inline constexpr double kScalingSlack = 1e-12;

/// Checks T(lambda f) <= lambda^{-1/2} T(f) + 1e-12 nodewise (alpha = 0). `f` must
/// live on a grid inside [0, s*] and lie between u0 and v0; violations are reported.
ScalingReport check_scaling_inequality(const GridFunction& f, double lambda, double omega,
                                       double beta);

}  // namespace washburn
