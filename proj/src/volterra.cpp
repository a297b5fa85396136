#include "washburn/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "washburn/errors.hpp"

namespace washburn {

namespace {

void check_grid(const GridFunction& f) {
  if (f.values.size() < 3) throw_domain("grid", "needs N >= 2 intervals");
  if (!(f.step > 0.0)) throw_domain("grid", "step must be > 0");
  for (double x : f.values)
    if (!std::isfinite(x)) throw_domain("grid", "values must be finite");
}

void check_model(double omega, double beta) {
  if (!(omega > 0.0)) throw_domain("omega", "must be > 0");
  if (!(beta > 0.0)) throw_domain("beta", "must be > 0");
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Convolution form: kernel depends on s_i - t_j = (i - j) h only.
class VolterraOperator {
 public:
  VolterraOperator(double omega, double beta, double alpha, double step, std::size_t n)
      : offset_(0.5 * alpha * alpha), scale_(std::sqrt(omega) / beta), step_(step), kernel_(n + 1) {
    const double rate = beta / std::sqrt(omega);
    for (std::size_t k = 0; k <= n; ++k)
      kernel_[k] = -std::expm1(-rate * step * static_cast<double>(k));
  }

  void apply(const std::vector<double>& f, std::vector<double>& out) {
    const std::size_t n = f.size() - 1;
    source_.resize(f.size());
    for (std::size_t j = 0; j <= n; ++j) source_[j] = 1.0 - std::sqrt(2.0 * std::max(f[j], 0.0));
    out.resize(f.size());
    out[0] = offset_;
    for (std::size_t i = 1; i <= n; ++i) {
      // trapezoid: half weights at t_0 and t_i; kernel_[0] = 0 kills the t_i term
      double acc = 0.5 * kernel_[i] * source_[0];
      for (std::size_t j = 1; j < i; ++j) acc += kernel_[i - j] * source_[j];
      out[i] = offset_ + scale_ * step_ * acc;
    }
  }

 private:
  double offset_;
  double scale_;
  double step_;
  std::vector<double> kernel_;
  std::vector<double> source_;
};

}  // namespace

GridFunction apply_T(const GridFunction& f, double omega, double beta, double alpha) {
  check_grid(f);
  check_model(omega, beta);
  VolterraOperator op(omega, beta, alpha, f.step, f.intervals());
  GridFunction out{f.step, {}};
  op.apply(f.values, out.values);
  return out;
}

PicardResult picard_solve(double omega, double beta, double alpha, const PicardOptions& opt) {
  check_model(omega, beta);
  if (!(alpha >= 0.0 && alpha <= 1.5)) throw_domain("alpha", "must lie in [0, 3/2]");
  if (!(opt.horizon > 0.0)) throw_domain("horizon", "must be > 0");
  if (!(opt.tol > 0.0)) throw_domain("tol", "must be > 0");
  if (opt.max_iter < 1) throw_domain("max_iter", "must be >= 1");
  const double step = opt.step > 0.0 ? opt.step : opt.horizon / 4096.0;
  const auto n = static_cast<std::size_t>(std::llround(opt.horizon / step));
  if (n < 2 || n > kMaxIntervals) throw_domain("step", "grid must have between 2 and 2^14 intervals");
  if (std::abs(static_cast<double>(n) * step - opt.horizon) > 1e-9 * opt.horizon)
    throw_domain("step", "must divide the horizon");

  VolterraOperator op(omega, beta, alpha, step, n);
  PicardResult res;
  std::vector<double> cur(n + 1, 0.5 * alpha * alpha), next;
  for (int k = 1; k <= opt.max_iter; ++k) {
    op.apply(cur, next);
    const double d = sup_diff(cur, next);
    res.diffs.push_back(d);
    cur.swap(next);
    if (d < opt.tol) {
      res.iterations = k;
      res.final_diff = d;
      res.solution = GridFunction{step, std::move(cur)};
      return res;
    }
  }
  std::ostringstream os;
  os.precision(6);
  os << "Picard iteration did not converge in " << opt.max_iter
     << " iterations (last difference " << res.diffs.back() << ")";
  throw Error(Errc::non_convergence, os.str());
}

double order_interval_end(double omega, double beta) {
  check_model(omega, beta);
  return std::min(0.5, std::sqrt(omega) / beta);
}

GridFunction lower_barrier(double omega, double beta, std::size_t intervals) {
  const double h = order_interval_end(omega, beta) / static_cast<double>(intervals);
  return sample_grid(h, intervals, [](double s) { return s * s / 6.0; });
}

GridFunction upper_barrier(double omega, double beta, std::size_t intervals) {
  const double h = order_interval_end(omega, beta) / static_cast<double>(intervals);
  return sample_grid(h, intervals, [](double s) { return s * s / 2.0; });
}

OrderIntervalReport check_order_interval(double omega, double beta, std::size_t intervals) {
  if (intervals < 2) throw_domain("intervals", "must be >= 2");
  const GridFunction u0 = lower_barrier(omega, beta, intervals);
  const GridFunction v0 = upper_barrier(omega, beta, intervals);
  const GridFunction tv0 = apply_T(v0, omega, beta, 0.0);
  const GridFunction tu0 = apply_T(u0, omega, beta, 0.0);
  OrderIntervalReport r;
  r.lower_slack = r.upper_slack = INFINITY;
  for (std::size_t i = 0; i <= intervals; ++i) {
    r.lower_slack = std::min(r.lower_slack, tv0.values[i] - u0.values[i]);
    r.upper_slack = std::min(r.upper_slack, v0.values[i] - tu0.values[i]);
  }
  r.holds = r.lower_slack >= 0.0 && r.upper_slack >= 0.0;
  return r;
}

ScalingReport check_scaling_inequality(const GridFunction& f, double lambda, double omega,
                                       double beta) {
  check_grid(f);
  if (!(lambda > 0.0 && lambda < 1.0)) throw_domain("lambda", "must lie in (0, 1)");
  const double s_star = order_interval_end(omega, beta);
  if (f.horizon() > s_star * (1.0 + 1e-12)) throw_domain("grid", "must lie inside [0, s*]");
  for (std::size_t i = 0; i <= f.intervals(); ++i) {
    const double s = f.node(i);
    if (f.values[i] < s * s / 6.0 - 1e-15 || f.values[i] > s * s / 2.0 + 1e-15)
      throw_domain("f", "must lie between u0 = s^2/6 and v0 = s^2/2");
  }

  GridFunction scaled = f;
  for (double& x : scaled.values) x *= lambda;
  const GridFunction t_scaled = apply_T(scaled, omega, beta, 0.0);
  const GridFunction t_f = apply_T(f, omega, beta, 0.0);
  const double chi = 1.0 / std::sqrt(lambda);

  ScalingReport r;
  r.lambda = lambda;
  r.max_violation = -INFINITY;
  for (std::size_t i = 0; i <= f.intervals(); ++i) {
    const double gap = t_scaled.values[i] - chi * t_f.values[i];
    if (gap > r.max_violation) {
      r.max_violation = gap;
      r.worst_node = i;
    }
  }
  r.holds = r.max_violation <= kScalingSlack;
  return r;
}

}  // namespace washburn
