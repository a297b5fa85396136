#include "washburn/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "washburn/errors.hpp"
#include "washburn/lyapunov.hpp"

namespace washburn {

namespace {

using Vec2 = ode::Vec<2>;

void check_options(const IntegrateOptions& opt, double horizon) {
  if (!(opt.epsilon >= 0.0)) throw_domain("epsilon", "must be >= 0");
  if (!(opt.sample_step > 0.0)) throw_domain("sample_step", "must be > 0");
  if (!(opt.tolerances.abs > 0.0) || !(opt.tolerances.rel >= 0.0))
    throw_domain("tolerances", "abs must be > 0 and rel >= 0");
  if (!(horizon > 0.0)) throw_domain("horizon", "must be > 0");
  if (horizon > kMaxHorizon) {
    std::ostringstream os;
    os << "horizon " << horizon << " exceeds the cap " << kMaxHorizon;
    throw Error(Errc::horizon, os.str());
  }
}

// Sample times k * step for k = 0..n, plus the horizon itself when it is not a multiple.
std::vector<double> sample_times(double horizon, double step) {
  const auto n = static_cast<std::size_t>(std::floor(horizon / step * (1.0 + 1e-12)));
  std::vector<double> s;
  s.reserve(n + 2);
  for (std::size_t k = 0; k <= n; ++k) s.push_back(std::min(static_cast<double>(k) * step, horizon));
  if (horizon - s.back() > 1e-12 * horizon) s.push_back(horizon);
  return s;
}

}  // namespace

State Trajectory::at(double s) const {
  const Vec2 y = dense_(s);
  return {y[0], y[1]};
}

Sample make_sample(double s, State x, double omega) {
  const EnergyValues ev = lyapunov(std::max(x.u, 0.0), x.v);
  return {s, x.u, x.v, std::sqrt(2.0 * std::max(x.u, 0.0)), s * std::sqrt(omega), ev.E, ev.V};
}

double default_horizon(const ModelParams& m) {
  return std::min(kMaxHorizon, 30.0 / m.damping());
}

double settling_horizon(double omega, double beta) {
  if (!(omega > 0.0) || !(beta > 0.0)) throw_domain("omega/beta", "must be > 0");
  const double gamma = beta / std::sqrt(omega);
  const double q = 4.0 * omega / (beta * beta);
  const double disc = 1.0 - q;
  // slow rate (gamma/2)(1 - sqrt(disc)), written without cancellation
  const double rate = disc > 0.0 ? 0.5 * gamma * q / (1.0 + std::sqrt(disc)) : 0.5 * gamma;
  return std::min(kMaxHorizon, 30.0 / rate);
}

Trajectory integrate(const ModelParams& m, const IntegrateOptions& opt) {
  return integrate_from(m, State{0.5 * m.alpha() * m.alpha(), 0.0}, opt);
}

Trajectory integrate_from(const ModelParams& m, State initial, const IntegrateOptions& opt) {
  const double horizon = opt.horizon != 0.0 ? opt.horizon : default_horizon(m);
  check_options(opt, horizon);
  if (!std::isfinite(initial.u) || !std::isfinite(initial.v) || initial.u < 0.0)
    throw_domain("initial", "needs finite state with u >= 0");

  const double omega = m.omega();
  const double beta = m.beta();
  const double eps = opt.epsilon;
  auto f = [omega, beta, eps](double, const Vec2& y) {
    const State d = rhs_u({y[0], y[1]}, omega, beta, eps);
    return Vec2{d.u, d.v};
  };

  ode::StepOptions step;
  if (initial.u == 0.0 && initial.v == 0.0) {
    // u ~ s^2/2 - (1 + gamma) s^3 / 6 near the origin: start where the cubic
    // term is at the absolute tolerance.
    const double gamma = m.damping();
    step.initial_step = std::min(opt.sample_step,
                                 std::cbrt(6.0 * opt.tolerances.abs / (1.0 + gamma)));
  }

  Trajectory traj;
  traj.params_ = m;
  traj.epsilon_ = eps;
  traj.tol_ = opt.tolerances;
  traj.sample_step_ = opt.sample_step;
  traj.initial_ = initial;
  traj.dense_ = ode::dopri5<2>(f, 0.0, Vec2{initial.u, initial.v}, horizon, opt.tolerances, step);

  const std::vector<double> times = sample_times(horizon, opt.sample_step);
  traj.samples_.reserve(times.size());
  traj.samples_.push_back(make_sample(0.0, initial, omega));
  for (std::size_t k = 1; k < times.size(); ++k)
    traj.samples_.push_back(make_sample(times[k], traj.at(times[k]), omega));
  traj.crossings_ = detect_crossings(traj);
  return traj;
}

std::vector<Crossing> detect_crossings(const Trajectory& traj, double level) {
  // Scan points: every step boundary plus interior points of each step.
  constexpr int kInterior = 4;
  std::vector<double> pts{traj.dense().begin()};
  for (const auto& seg : traj.dense().segments()) {
    for (int j = 1; j <= kInterior; ++j) pts.push_back(seg.s0 + seg.h * j / (kInterior + 1));
    pts.push_back(seg.s0 + seg.h);
  }

  std::vector<Crossing> out;
  int side = 0;
  double s_side = pts.front();
  for (double s : pts) {
    const double d = traj.at(s).u - level;
    if (std::abs(d) <= kCrossingBand) continue;
    const int now = d > 0.0 ? 1 : -1;
    if (side != 0 && now != side) {
      double lo = s_side, hi = s;
      while (hi - lo > kCrossingTol) {
        const double mid = 0.5 * (lo + hi);
        const double dm = traj.at(mid).u - level;
        if ((dm > 0.0 ? 1 : -1) == side) lo = mid;
        else hi = mid;
      }
      const double sc = 0.5 * (lo + hi);
      const double v = traj.at(sc).v;
      out.push_back({sc, v > 0.0 ? 1 : (v < 0.0 ? -1 : 0)});
    }
    side = now;
    s_side = s;
  }
  return out;
}

double sup_distance(const Trajectory& a, const Trajectory& b) {
  const auto& sa = a.samples();
  const auto& sb = b.samples();
  if (sa.size() != sb.size()) throw_domain("trajectories", "sample grids differ");
  double d = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].s != sb[i].s) throw_domain("trajectories", "sample grids differ");
    d = std::max(d, std::abs(sa[i].u - sb[i].u));
  }
  return d;
}

std::vector<DependenceRow> continuous_dependence(const ModelParams& m, double alpha0,
                                                 std::span<const double> alphas,
                                                 const IntegrateOptions& opt) {
  const Trajectory base = integrate(m.with_alpha(alpha0), opt);
  std::vector<DependenceRow> rows;
  rows.reserve(alphas.size());
  for (double a : alphas) {
    const Trajectory t = integrate(m.with_alpha(a), opt);
    rows.push_back({a, std::abs(a - alpha0), sup_distance(t, base)});
  }
  return rows;
}

std::vector<RegularizationRow> regularization_convergence(const ModelParams& m,
                                                          std::span<const double> epsilons,
                                                          const IntegrateOptions& opt) {
  std::vector<RegularizationRow> rows;
  if (epsilons.size() < 2) return rows;
  IntegrateOptions o = opt;
  o.epsilon = epsilons[0];
  Trajectory prev = integrate(m, o);
  for (std::size_t i = 1; i < epsilons.size(); ++i) {
    o.epsilon = epsilons[i];
    Trajectory next = integrate(m, o);
    rows.push_back({epsilons[i - 1], epsilons[i], sup_distance(prev, next)});
    prev = std::move(next);
  }
  return rows;
}

// ---- reduced regimes -------------------------------------------------------

double case1_closed_form(double t, double beta, double u0) {
  return u0 + t / beta + std::expm1(-beta * t) / (beta * beta);
}

double case3_closed_form(double t, double beta, double h0) {
  return std::sqrt(2.0 * t / beta + h0 * h0);
}

double case2_elapsed_time(double h, double h0, double beta) {
  return beta * ((h0 - h) - std::log1p(-h) + std::log1p(-h0));
}

double case4_energy(double u, double v) {
  return 0.5 * v * v - u + (2.0 * std::sqrt(2.0) / 3.0) * u * std::sqrt(std::max(u, 0.0));
}

RegimeRun integrate_regime(RegimeCase c, double beta, const RegimeOptions& opt) {
  if (!(beta > 0.0)) throw_domain("beta", "must be > 0");
  if (!(opt.alpha >= 0.0 && opt.alpha <= kMaxAlpha)) throw_domain("alpha", "must lie in [0, 3/2]");
  if (c == RegimeCase::negligible_inertia && !(opt.alpha < 1.0))
    throw_domain("alpha", "Case 2 needs h*(0) < 1 for the implicit relation");
  if (!(opt.horizon > 0.0) || opt.horizon > kMaxHorizon) throw_domain("horizon", "must lie in (0, 1e6]");
  if (!(opt.sample_step > 0.0)) throw_domain("sample_step", "must be > 0");

  RegimeRun run;
  run.spec = RegimeSpec::make(c, opt.case3_b);
  run.beta = beta;
  run.options = opt;

  const RegimeSpec spec = run.spec;
  auto f = [spec, beta](double, const Vec2& y) {
    const RegimeDerivative d = rhs_regime_clamped(spec, {y[0], y[1]}, beta);
    return Vec2{d.du, d.first_order ? 0.0 : d.dv};
  };
  const double h0 = opt.alpha;
  const double u0 = 0.5 * h0 * h0;
  ode::StepOptions step;
  if (u0 == 0.0) step.initial_step = std::min(opt.sample_step, std::cbrt(6.0 * opt.tolerances.abs));
  const auto sol = ode::dopri5<2>(f, 0.0, Vec2{u0, 0.0}, opt.horizon, opt.tolerances, step);

  const double e0 = case4_energy(u0, 0.0);
  switch (c) {
    case RegimeCase::negligible_gravity: run.residual_kind = "u_minus_closed_form"; break;
    case RegimeCase::negligible_inertia: run.residual_kind = "implicit_time_minus_t"; break;
    case RegimeCase::negligible_gravity_inertia: run.residual_kind = "h_minus_closed_form"; break;
    case RegimeCase::negligible_viscosity: run.residual_kind = "energy_drift"; break;
  }
  for (double t : sample_times(opt.horizon, opt.sample_step)) {
    const Vec2 y = t == 0.0 ? Vec2{u0, 0.0} : sol(t);
    RegimeSample r;
    r.t = t;
    r.u = y[0];
    r.v = y[1];
    r.h = std::sqrt(2.0 * std::max(y[0], 0.0));
    switch (c) {
      case RegimeCase::negligible_gravity:
        r.oracle = case1_closed_form(t, beta, u0);
        r.residual = r.u - r.oracle;
        break;
      case RegimeCase::negligible_inertia:
        r.oracle = case2_elapsed_time(r.h, h0, beta);
        r.residual = r.oracle - t;
        break;
      case RegimeCase::negligible_gravity_inertia:
        r.oracle = case3_closed_form(t, beta, h0);
        r.residual = r.h - r.oracle;
        break;
      case RegimeCase::negligible_viscosity:
        r.oracle = case4_energy(r.u, r.v);
        r.residual = r.oracle - e0;
        break;
    }
    run.max_abs_residual = std::max(run.max_abs_residual, std::abs(r.residual));
    run.samples.push_back(r);
  }
  return run;
}

}  // namespace washburn
