#include "washburn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <complex>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "washburn/errors.hpp"
#include "washburn/integrate.hpp"
#include "washburn/lyapunov.hpp"
#include "washburn/params.hpp"
#include "washburn/stability.hpp"
#include "washburn/volterra.hpp"

namespace washburn::verify {

namespace {

constexpr std::uint64_t kSeed = 0x5eed'2024'0001ULL;

// Running maximum of a checked quantity plus the first offending case.
struct Tally {
  double worst = 0.0;
  double threshold = 0.0;
  bool ok = true;
  std::string where;

  explicit Tally(double thr) : threshold(thr) {}

  // Records `value` (<= threshold is a pass).
  void le(double value, const std::string& ctx) {
    if (!(value <= threshold)) {
      if (ok) where = ctx;
      ok = false;
    }
    if (std::isnan(value) || value > worst) worst = value;
  }
  void fail(const std::string& ctx) {
    if (ok) where = ctx;
    ok = false;
  }
  CheckResult result(std::string detail) const {
    CheckResult r;
    r.passed = ok;
    r.metric = worst;
    r.threshold = threshold;
    r.detail = ok ? std::move(detail) : "failed at " + where + "; " + detail;
    return r;
  }
};

std::string fmt(double x) { return io::format_double(x); }

std::string ctx3(double beta, double omega, double alpha) {
  std::ostringstream os;
  os << "beta=" << beta << " omega=" << omega << " alpha=" << alpha;
  return os.str();
}

double critical_omega_of(const VerifyOptions& o, double beta) {
  return o.critical_omega ? o.critical_omega(beta) : critical_omega(beta);
}

const std::vector<double> kAlphaGrid{0.0, 0.1, 1.0, 1.4, 1.5};
const std::vector<double> kBetaGrid{0.5, 1.0};
const std::vector<double> kOmegaGrid{0.1, 1.0};

// The implicit relation amplifies errors in h by beta / (1 - h) as h -> 1.
constexpr ode::Tolerances kCase2Tolerances{1e-14, 1e-13};

IntegrateOptions long_run(const ModelParams& m) {
  IntegrateOptions o;
  o.horizon = 60.0 / m.damping();
  return o;
}

// |(V(s+ds) - V(s-ds)) / (2 ds) + gamma v(s)^2| at the points s = k * coarse, 0 < s < horizon.
std::vector<double> lyapunov_fd_errors(const ModelParams& m, double ds, double coarse, double horizon) {
  IntegrateOptions o;
  o.horizon = horizon;
  o.sample_step = ds;
  o.tolerances = {1e-12, 1e-12};
  const Trajectory t = integrate(m, o);
  const auto& s = t.samples();
  const double gamma = m.damping();
  const auto stride = static_cast<std::size_t>(std::lround(coarse / ds));
  std::vector<double> err;
  for (std::size_t i = stride; i + 1 < s.size() && s[i].s < horizon - coarse / 2; i += stride) {
    const double fd = (s[i + 1].V - s[i - 1].V) / (2.0 * ds);
    err.push_back(std::abs(fd + gamma * s[i].v * s[i].v));
  }
  return err;
}

// Smallest observed order over the halving ladder, from the largest error at shared points;
// +inf when the error is already at round-off.
double lyapunov_fd_order(const ModelParams& m, std::string* detail) {
  const double steps[] = {0.04, 0.02, 0.01};
  double e[3];
  for (int k = 0; k < 3; ++k) {
    const auto v = lyapunov_fd_errors(m, steps[k], steps[0], 20.0);
    e[k] = *std::max_element(v.begin(), v.end());
  }
  if (detail) *detail = "errors " + fmt(e[0]) + ", " + fmt(e[1]) + ", " + fmt(e[2]);
  if (e[0] < 1e-11) return INFINITY;
  return std::min(std::log2(e[0] / e[1]), std::log2(e[1] / e[2]));
}

// ---- params -----------------------------------------------------------------

CheckResult params_roundtrip(const VerifyOptions&) {
  Tally t(1e-15);
  for (int i = 0; i <= 100000; ++i) {
    const double u = kUpperBound * i / 100000.0;
    t.le(std::abs(u_from_H(H_from_u(u)) - u), "u=" + fmt(u));
  }
  return t.result("100001 points on [0, 9/8]");
}

PhysicalParams random_physical(std::mt19937_64& rng) {
  auto logu = [&rng](double lo, double hi) {
    return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
  };
  PhysicalParams p;
  p.rho = logu(500.0, 15000.0);
  p.mu = logu(1e-4, 1.0);
  p.gamma = logu(0.01, 0.5);
  p.theta = std::uniform_real_distribution<double>(0.0, 1.5)(rng);
  p.g = logu(1.0, 30.0);
  p.R = logu(1e-6, 1e-2);
  p.L = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < 0.2 ? 0.0 : p.R * logu(1e-4, 10.0);
  p.h0 = 0.0;
  return p;
}

CheckResult params_omega_routes(const VerifyOptions&) {
  std::mt19937_64 rng(kSeed);
  Tally t(1e-12);
  for (int i = 0; i < 10000; ++i) {
    const PhysicalParams p = random_physical(rng);
    const ModelParams m = nondimensionalize(p);
    const auto& sc = *m.scales();
    const double direct = p.rho * p.rho * std::pow(p.R, 4) * p.g / (64.0 * p.mu * p.mu * sc.h_e);
    const double bo_oh = (sc.Bo / sc.Oh) * (sc.Bo / sc.Oh) / (128.0 * std::cos(p.theta));
    t.le(std::abs(direct - bo_oh) / direct, "sample " + std::to_string(i));
  }
  return t.result("10000 random fluids; metric is the relative gap");
}

CheckResult params_beta_monotone(const VerifyOptions&) {
  Tally t(0.0);
  double prev = 2.0;
  for (int i = 0; i <= 2000; ++i) {
    PhysicalParams p{1000.0, 1e-3, 0.07, 0.0, 9.81, 1e-4, 1e-4 * (i * 0.005), 0.0};
    const double beta = nondimensionalize(p).beta();
    if (!(beta > 0.0 && beta <= 1.0)) t.fail("L/R=" + fmt(i * 0.005) + " beta out of (0,1]");
    if (!(beta < prev)) t.fail("L/R=" + fmt(i * 0.005) + " not strictly decreasing");
    prev = beta;
  }
  return t.result("L/R on [0, 10]");
}

CheckResult params_critical_scaling(const VerifyOptions& o) {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> d(0.01, 3.0);
  Tally t(4.0 * std::numeric_limits<double>::epsilon());
  for (int i = 0; i < 10000; ++i) {
    const double beta = d(rng), c = d(rng);
    const double lhs = critical_omega_of(o, c * beta);
    const double rhs = c * c * critical_omega_of(o, beta);
    t.le(std::abs(lhs - rhs) / std::abs(rhs), "beta=" + fmt(beta) + " c=" + fmt(c));
  }
  return t.result("10000 random (beta, c); relative");
}

// ---- dynamics ---------------------------------------------------------------

CheckResult dynamics_equilibrium(const VerifyOptions&) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_real_distribution<double> d(1e-3, 10.0);
  Tally t(0.0);
  for (int i = 0; i < 10000; ++i) {
    const double omega = d(rng), beta = d(rng);
    const State r = rhs_u(kEquilibrium, omega, beta, 0.0);
    t.le(std::max(std::abs(r.u), std::abs(r.v)), ctx3(beta, omega, 1.0));
  }
  return t.result("exact zero at (1/2, 0) for 10000 random (omega, beta)");
}

CheckResult dynamics_regularization_order(const VerifyOptions&) {
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_real_distribution<double> du(-0.5, 2.0), dv(-2.0, 2.0);
  const double eps[] = {0.0, 1e-6, 1e-4, 1e-2, 1.0};
  Tally t(0.0);
  for (int i = 0; i < 10000; ++i) {
    const State x{du(rng), dv(rng)};
    double prev = INFINITY;
    for (double e : eps) {
      const double a = rhs_u(x, 1.0, 1.0, e).v;
      if (!(a < prev)) t.fail("u=" + fmt(x.u) + " eps=" + fmt(e));
      prev = a;
    }
  }
  return t.result("dv/ds strictly decreasing in eps at 10000 random states");
}

CheckResult dynamics_case4_conservation(const VerifyOptions&) {
  RegimeOptions ro;
  ro.horizon = 100.0;
  Tally t(10.0 * std::max(ro.tolerances.abs, ro.tolerances.rel));
  for (double a : {0.0, 0.5, 1.2, 1.5}) {
    ro.alpha = a;
    const RegimeRun r = integrate_regime(RegimeCase::negligible_viscosity, 1.0, ro);
    t.le(r.max_abs_residual, "alpha=" + fmt(a));
  }
  return t.result("energy drift over t in [0, 100]");
}

CheckResult dynamics_case2_implicit(const VerifyOptions&) {
  Tally t(1e-8);
  RegimeOptions ro;
  ro.horizon = 5.0;
  ro.tolerances = kCase2Tolerances;
  for (double beta : {1.0, 0.5})
    for (double a : {0.1, 0.5, 0.9}) {
      ro.alpha = a;
      const RegimeRun r = integrate_regime(RegimeCase::negligible_inertia, beta, ro);
      t.le(r.max_abs_residual, "beta=" + fmt(beta) + " h0=" + fmt(a));
    }
  return t.result("implicit-time residual over t in [0, 5]");
}

CheckResult dynamics_h_u_consistency(const VerifyOptions&) {
  Tally t(1e-7);
  const ode::Tolerances tight{1e-12, 1e-12};
  for (double beta : {1.0, 0.5})
    for (double omega : {0.1, 1.0})
      for (double alpha : {0.2, 0.7, 1.3}) {
        const ModelParams m = ModelParams::dimensionless(omega, beta, alpha);
        IntegrateOptions o;
        o.horizon = 20.0;
        o.sample_step = 0.05;
        o.tolerances = tight;
        const Trajectory tu = integrate(m, o);
        const double so = std::sqrt(omega);
        auto f = [omega, beta](double, const ode::Vec<2>& y) {
          return ode::Vec<2>{y[1], rhs_H(y[0], y[1], omega, beta)};
        };
        const auto th = ode::dopri5<2>(f, 0.0, ode::Vec<2>{alpha, 0.0}, 20.0 * so, tight);
        double d = 0.0;
        for (const Sample& s : tu.samples()) d = std::max(d, std::abs(s.H - th(s.s * so)[0]));
        t.le(d, ctx3(beta, omega, alpha));
      }
  return t.result("sup |sqrt(2u) - H| over s in [0, 20]");
}

// ---- integrate --------------------------------------------------------------

CheckResult integrate_positivity(const VerifyOptions&) {
  Tally t(0.0);
  for (double beta : kBetaGrid)
    for (double omega : kOmegaGrid)
      for (double alpha : {0.0, 0.05, 0.1, 0.5, 1.0, 1.4, 1.5}) {
        const ModelParams m = ModelParams::dimensionless(omega, beta, alpha);
        const Trajectory tr = integrate(m, long_run(m));
        double umin = INFINITY;
        for (std::size_t i = alpha == 0.0 ? 1 : 0; i < tr.samples().size(); ++i)
          umin = std::min(umin, tr.samples()[i].u);
        t.le(-umin, ctx3(beta, omega, alpha));
      }
  return t.result("metric is -min u (over s >= ds when alpha = 0)");
}

CheckResult integrate_upper_bound(const VerifyOptions&) {
  Tally t(1e-9);
  for (double beta : kBetaGrid)
    for (double omega : kOmegaGrid)
      for (double alpha : {0.0, 0.5, 1.0, 1.2, 1.4, 1.5}) {
        const ModelParams m = ModelParams::dimensionless(omega, beta, alpha);
        const Trajectory tr = integrate(m, long_run(m));
        double umax = -INFINITY;
        for (const Sample& s : tr.samples()) umax = std::max(umax, s.u);
        t.le(umax - kUpperBound, ctx3(beta, omega, alpha));
      }
  return t.result("metric is max u - 9/8");
}

CheckResult energy_monotone(const VerifyOptions&) {
  Tally t(1e-8);
  for (double beta : kBetaGrid)
    for (double omega : kOmegaGrid)
      for (double alpha : kAlphaGrid) {
        const ModelParams m = ModelParams::dimensionless(omega, beta, alpha);
        const Trajectory tr = integrate(m, long_run(m));
        const auto& s = tr.samples();
        double inc = 0.0;
        for (std::size_t i = 1; i < s.size(); ++i) inc = std::max(inc, s[i].E - s[i - 1].E);
        t.le(inc, ctx3(beta, omega, alpha));
      }
  return t.result("largest sample-to-sample increase of E");
}

CheckResult lyapunov_derivative(const VerifyOptions&) {
  Tally t(1.9);
  double min_order = INFINITY;
  for (double beta : kBetaGrid)
    for (double omega : kOmegaGrid)
      for (double alpha : kAlphaGrid) {
        std::string d;
        const double p = lyapunov_fd_order(ModelParams::dimensionless(omega, beta, alpha), &d);
        min_order = std::min(min_order, p);
        if (!(p >= 1.9)) t.fail(ctx3(beta, omega, alpha) + " order " + fmt(p) + " (" + d + ")");
      }
  t.worst = min_order;
  return t.result("smallest finite-difference order under ds = 0.04, 0.02, 0.01");
}

CheckResult eps_convergence(const VerifyOptions&) {
  const ModelParams m = ModelParams::dimensionless(1.0, 1.0, 0.0);
  IntegrateOptions o;
  o.horizon = 20.0;
  o.tolerances = {1e-12, 1e-12};
  Tally t(0.0);
  double prev = INFINITY;
  std::string list;
  for (double e = 1e-2; e > 5e-9; e /= 10.0) {
    const double eps[] = {e, e / 2.0};
    const auto rows = regularization_convergence(m, eps, o);
    const double d = rows.front().distance;
    list += (list.empty() ? "" : ", ") + fmt(d);
    if (!(d < prev)) t.fail("eps=" + fmt(e));
    prev = d;
  }
  t.worst = prev;
  return t.result("||u_eps - u_eps/2|| = " + list);
}

CheckResult tolerance_convergence(const VerifyOptions&) {
  Tally t(1.0);
  struct P { double beta, omega, alpha; };
  for (const P& p : {P{1, 1, 0}, P{0.5, 0.1, 0.1}, P{1, 0.1, 1.5}, P{0.5, 1, 1.4}, P{1, 0.25, 0}}) {
    const ModelParams m = ModelParams::dimensionless(p.omega, p.beta, p.alpha);
    IntegrateOptions a;
    a.horizon = 20.0;
    IntegrateOptions b = a;
    b.tolerances = {a.tolerances.abs / 2.0, a.tolerances.rel / 2.0};
    const State ya = integrate(m, a).at(20.0), yb = integrate(m, b).at(20.0);
    const double bound =
        10.0 * (a.tolerances.abs + a.tolerances.rel * std::max(std::abs(ya.u), std::abs(ya.v)));
    const double d = std::max(std::abs(ya.u - yb.u), std::abs(ya.v - yb.v));
    t.le(d / bound, ctx3(p.beta, p.omega, p.alpha));
  }
  return t.result("final-state change / (10 x coarse tolerance)");
}

// ---- volterra ---------------------------------------------------------------

CheckResult volterra_monotonicity(const VerifyOptions&) {
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_real_distribution<double> d(0.0, 1.2), gap(0.0, 0.3);
  Tally t(0.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double omega = 0.1 + d(rng), beta = 0.3 + 0.5 * d(rng), alpha = d(rng);
    GridFunction f{0.01, std::vector<double>(257)}, g = f;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      f.values[i] = d(rng);
      g.values[i] = f.values[i] + gap(rng);
    }
    const GridFunction tf = apply_T(f, omega, beta, alpha), tg = apply_T(g, omega, beta, alpha);
    double worst = -INFINITY;
    for (std::size_t i = 0; i < tf.values.size(); ++i) worst = std::max(worst, tg.values[i] - tf.values[i]);
    t.le(worst, "trial " + std::to_string(trial));
  }
  return t.result("metric is max_i T(g)_i - T(f)_i for f <= g");
}

CheckResult volterra_self_map(const VerifyOptions&) {
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  Tally t(1e-10);
  for (int trial = 0; trial < 200; ++trial) {
    const double omega = 0.05 + 4.0 * d(rng), beta = 0.1 + 0.9 * d(rng);
    const double s_star = order_interval_end(omega, beta);
    const std::size_t n = 256;
    const GridFunction u0 = lower_barrier(omega, beta, n), v0 = upper_barrier(omega, beta, n);
    GridFunction f = u0;
    for (std::size_t i = 0; i <= n; ++i) f.values[i] += d(rng) * (v0.values[i] - u0.values[i]);
    const GridFunction tf = apply_T(f, omega, beta, 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      worst = std::max({worst, u0.values[i] - tf.values[i], tf.values[i] - v0.values[i]});
    t.le(worst, "omega=" + fmt(omega) + " beta=" + fmt(beta) + " s*=" + fmt(s_star));
  }
  return t.result("largest excursion of T(f) outside [u0, v0]");
}

double grid_gap(const GridFunction& coarse, const GridFunction& fine) {
  double d = 0.0;
  for (std::size_t i = 0; i < coarse.values.size(); ++i)
    d = std::max(d, std::abs(coarse.values[i] - fine.values[2 * i]));
  return d;
}

CheckResult volterra_quadrature_order(const VerifyOptions&) {
  Tally t(0.5);
  for (double alpha : {0.0, 0.5}) {
    PicardOptions po;
    po.horizon = 5.0;
    po.tol = 1e-13;
    po.step = 5.0 / 256;
    const auto a = picard_solve(1.0, 1.0, alpha, po);
    po.step /= 2;
    const auto b = picard_solve(1.0, 1.0, alpha, po);
    po.step /= 2;
    const auto c = picard_solve(1.0, 1.0, alpha, po);
    const double ratio = grid_gap(a.solution, b.solution) / grid_gap(b.solution, c.solution);
    t.le(std::abs(ratio - 4.0), "alpha=" + fmt(alpha) + " ratio=" + fmt(ratio));
  }
  return t.result("metric is |ratio - 4| for successive step halvings");
}

CheckResult volterra_picard_ode(const VerifyOptions&) {
  Tally t(1.0);
  for (double beta : {1.0, 0.5})
    for (double omega : {0.1, 0.25, 1.0})
      for (double alpha : {0.0, 0.1, 1.0}) {
        PicardOptions po;
        po.horizon = 10.0;
        po.step = 10.0 / 1024;
        const auto coarse = picard_solve(omega, beta, alpha, po);
        po.step /= 2;
        const auto fine = picard_solve(omega, beta, alpha, po);
        const double quad = grid_gap(coarse.solution, fine.solution) * 4.0 / 3.0;
        IntegrateOptions io;
        io.horizon = 10.0;
        io.sample_step = coarse.solution.step;
        io.tolerances = {1e-12, 1e-12};
        const Trajectory tr = integrate(ModelParams::dimensionless(omega, beta, alpha), io);
        double d = 0.0;
        for (std::size_t i = 0; i < coarse.solution.values.size(); ++i)
          d = std::max(d, std::abs(coarse.solution.values[i] - tr.samples()[i].u));
        const double bound = 10.0 * std::max(quad, io.tolerances.rel);
        t.le(d / bound, ctx3(beta, omega, alpha) + " d=" + fmt(d));
      }
  return t.result("sup distance / (10 x max(quadrature error, ODE tolerance))");
}

// ---- stability --------------------------------------------------------------

CheckResult v_positivity(const VerifyOptions&) {
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_real_distribution<double> du(0.0, kUpperBound), dv(-2.0, 2.0);
  Tally t(1e-13);
  const double c = 2.0 * std::sqrt(2.0) / 3.0;
  int n = 0;
  while (n < 100000) {
    const double u = du(rng), v = dv(rng);
    if (std::abs(u - 0.5) + std::abs(v) <= 1e-6) continue;
    ++n;
    const double f = lyapunov_factored(u, v), d = lyapunov_direct(u, v);
    if (!(lyapunov(u, v).V > 0.0) || !(f > 0.0)) t.fail("u=" + fmt(u) + " v=" + fmt(v) + " V<=0");
    const double scale = std::max(std::abs(f), 0.5 * v * v + u + c * u * std::sqrt(u) + 1.0 / 6.0);
    t.le(std::abs(f - d) / scale, "u=" + fmt(u) + " v=" + fmt(v));
  }
  return t.result("1e5 samples; V > 0 and factored/direct gap relative to term size");
}

CheckResult eigen_real_part(const VerifyOptions&) {
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_real_distribution<double> db(0.0, 2.0), dw(0.0, 4.0);
  Tally t(1e-12);
  for (int i = 0; i < 100000; ++i) {
    const double beta = 2.0 - db(rng), omega = 4.0 - dw(rng);  // (0, 2] x (0, 4]
    const StabilityReport r = linearize(omega, beta);
    const double half = -beta / (2.0 * std::sqrt(omega));
    const double re1 = r.lambda1.real(), re2 = r.lambda2.real();
    if (!(re1 < 0.0 && re2 < 0.0)) t.fail(ctx3(beta, omega, 0) + " Re >= 0");
    // Spiral and inflected node: both real parts equal -gamma/2. Node: their mean does.
    double gap = std::abs(0.5 * (re1 + re2) - half);
    if (r.kind != CriticalPointKind::stable_node)
      gap = std::max({gap, std::abs(re1 - half), std::abs(re2 - half)});
    t.le(gap / std::abs(half), ctx3(beta, omega, 0));
  }
  return t.result("1e5 random (beta, omega); relative");
}

CheckResult classification_boundary(const VerifyOptions& o) {
  Tally t(1e-10);
  for (double beta : {0.3, 0.5, 1.0, 1.7}) {
    // Smallest omega classified as a spiral.
    double lo = beta * beta / 100.0, hi = 4.0 * beta * beta;
    auto spiral = [beta](double w) { return linearize(w, beta).kind == CriticalPointKind::stable_spiral; };
    if (spiral(lo) || !spiral(hi)) {
      t.fail("beta=" + fmt(beta) + " bracket");
      continue;
    }
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      (spiral(mid) ? hi : lo) = mid;
    }
    t.le(std::abs(hi - critical_omega_of(o, beta)), "beta=" + fmt(beta) + " switch=" + fmt(hi));
  }
  return t.result("|switch point - critical omega|");
}

CheckResult basin_residual_suite(const VerifyOptions&) {
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_real_distribution<double> da(0.0, kMaxAlpha);
  Tally t(1e-10);
  for (int i = 0; i < 1000; ++i) {
    const BasinSpec b = basin(da(rng));
    t.le(std::max(basin_residual(b, b.u_min), basin_residual(b, b.u_max)), "alpha=" + fmt(b.alpha));
    if (!(0.0 <= b.u_min && b.u_min <= b.u_max && b.u_max <= kUpperBound))
      t.fail("alpha=" + fmt(b.alpha) + " ordering");
  }
  return t.result("1000 random alpha");
}

CheckResult basin_geometry(const VerifyOptions&) {
  Tally t(1.0);
  const int n = 15000;
  BasinSpec prev = basin(0.0);
  for (int i = 0; i <= n; ++i) {
    const double a = kMaxAlpha * i / n;
    const BasinSpec b = basin(a);
    if (!(b.u_min <= 0.5 + 1e-15 && b.u_max >= 0.5 - 1e-15)) t.fail("alpha=" + fmt(a) + " bracket");
    if (i > 0) {
      // Both bounds are Hoelder-1/2 at worst (sqrt at alpha = 3/2).
      const double da = kMaxAlpha / n;
      const double jump = std::max(std::abs(b.u_min - prev.u_min), std::abs(b.u_max - prev.u_max));
      t.le(jump / (2.0 * std::sqrt(da)), "alpha=" + fmt(a));
    }
    prev = b;
  }
  return t.result("u_min <= 1/2 <= u_max; metric is max jump / (2 sqrt(d alpha))");
}

CheckResult forward_invariance(const VerifyOptions&) {
  Tally t(kInvarianceTol);
  for (double beta : kBetaGrid)
    for (double omega : kOmegaGrid)
      for (double alpha : kAlphaGrid) {
        const ModelParams m = ModelParams::dimensionless(omega, beta, alpha);
        const AuditReport a = audit_trajectory(integrate(m, long_run(m)), basin(alpha));
        t.le(a.max_V_minus_C, ctx3(beta, omega, alpha));
      }
  return t.result("max V - C(alpha) along trajectories");
}

// ---- acceptance -------------------------------------------------------------

CheckResult acc_equilibrium(const VerifyOptions&) {
  Tally t(1e-10);
  for (double beta : {0.5, 1.0})
    for (double omega : {0.1, 0.25, 1.0, 4.0}) {
      IntegrateOptions o;
      o.horizon = 100.0;
      const Trajectory tr = integrate(ModelParams::dimensionless(omega, beta, 1.0), o);
      double d = 0.0;
      for (const Sample& s : tr.samples()) d = std::max(d, std::abs(s.u - 0.5));
      t.le(d, ctx3(beta, omega, 1.0));
    }
  return t.result("max |u - 1/2| over S = 100");
}

CheckResult acc_bounds(const VerifyOptions&) {
  Tally t(1e-9);
  for (double beta : kBetaGrid)
    for (double omega : kOmegaGrid)
      for (double alpha : kAlphaGrid) {
        const ModelParams m = ModelParams::dimensionless(omega, beta, alpha);
        const Trajectory tr = integrate(m, long_run(m));
        double lo = 0.0, hi = -INFINITY;
        for (const Sample& s : tr.samples()) {
          lo = std::min(lo, s.u);
          hi = std::max(hi, s.u);
        }
        if (lo < -1e-12) t.fail(ctx3(beta, omega, alpha) + " u < -1e-12");
        t.le(hi - kUpperBound, ctx3(beta, omega, alpha));
      }
  return t.result("u >= -1e-12 everywhere; metric is max u - 9/8");
}

CheckResult acc_energy(const VerifyOptions& o) {
  const CheckResult e = energy_monotone(o);
  const CheckResult l = lyapunov_derivative(o);
  CheckResult r;
  r.passed = e.passed && l.passed;
  r.metric = l.metric;
  r.threshold = l.threshold;
  r.detail = "E increase " + fmt(e.metric) + " (<= 1e-8): " + e.detail + "; dV/ds order " +
             fmt(l.metric) + " (>= 1.9): " + l.detail;
  return r;
}

CheckResult acc_bifurcation(const VerifyOptions& o) {
  Tally t(0.05);
  struct Expect { double beta, omega; Approach kind; };
  for (const Expect& e : {Expect{1.0, 0.1, Approach::monotone}, Expect{1.0, 1.0, Approach::oscillatory},
                          Expect{0.5, 0.05, Approach::monotone}, Expect{0.5, 0.5, Approach::oscillatory}}) {
    IntegrateOptions io;
    io.horizon = settling_horizon(e.omega, e.beta);
    const ApproachReport r = classify_approach(integrate(ModelParams::dimensionless(e.omega, e.beta, 0.0), io));
    if (r.kind != e.kind)
      t.fail(ctx3(e.beta, e.omega, 0.0) + " classified " + std::string(to_string(r.kind)));
  }
  std::string brackets;
  for (const auto& [beta, lo0, hi0] : {std::tuple{1.0, 0.1, 1.0}, std::tuple{0.5, 0.05, 0.5}}) {
    auto crosses = [beta = beta](double w) {
      IntegrateOptions io;
      io.horizon = settling_horizon(w, beta);
      return !integrate(ModelParams::dimensionless(w, beta, 0.0), io).crossings().empty();
    };
    double lo = lo0, hi = hi0;
    if (crosses(lo) || !crosses(hi)) {
      t.fail("beta=" + fmt(beta) + " transition not bracketed");
      continue;
    }
    while (hi - lo > 1e-3) {
      const double mid = 0.5 * (lo + hi);
      (crosses(mid) ? hi : lo) = mid;
    }
    const double ws = critical_omega_of(o, beta);
    brackets += " beta=" + fmt(beta) + ": [" + fmt(lo) + ", " + fmt(hi) + "] vs " + fmt(ws) + ";";
    t.le(std::max(std::abs(lo - ws), std::abs(hi - ws)), "beta=" + fmt(beta));
  }
  return t.result("classification at four points; crossing transition brackets:" + brackets);
}

CheckResult acc_eigen_anchor(const VerifyOptions&) {
  Tally t(1e-12);
  const StabilityReport r = linearize(0.25, 1.0);
  t.le(std::abs(r.lambda1 - std::complex<double>(-1.0, 0.0)), "lambda1");
  t.le(std::abs(r.lambda2 - std::complex<double>(-1.0, 0.0)), "lambda2");
  if (r.kind != CriticalPointKind::stable_inflected_node) t.fail("kind " + std::string(to_string(r.kind)));
  return t.result("linearize(omega=1/4, beta=1) -> " + std::string(to_string(r.kind)));
}

CheckResult acc_basin(const VerifyOptions& o) {
  Tally t(1e-14);
  const BasinSpec b0 = basin(0.0), b1 = basin(1.0), b3 = basin(1.5);
  t.le(std::abs(b0.C - 1.0 / 6.0), "basin(0).C");
  t.le(std::abs(b0.u_min), "basin(0).u_min");
  t.le(std::abs(b0.u_max - 9.0 / 8.0), "basin(0).u_max");
  t.le(std::abs(b1.C), "basin(1).C");
  t.le(std::abs(b1.u_min - 0.5), "basin(1).u_min");
  t.le(std::abs(b1.u_max - 0.5), "basin(1).u_max");
  const double a = 1.5, ua = a * a / 2.0;
  const double c_formula = -ua + (2.0 * std::sqrt(2.0) / 3.0) * std::pow(ua, 1.5) + 1.0 / 6.0;
  t.le(std::abs(b3.C - c_formula), "basin(3/2).C");
  t.le(std::abs(b3.u_min), "basin(3/2).u_min");
  t.le(std::abs(b3.u_max - 9.0 / 8.0), "basin(3/2).u_max");
  const CheckResult r = basin_residual_suite(o);
  if (!r.passed) t.fail(r.detail);
  return t.result("anchors at alpha = 0, 1, 3/2; random residuals max " + fmt(r.metric));
}

CheckResult acc_volterra(const VerifyOptions&) {
  Tally t(1e-5);
  for (double beta : {1.0, 0.5})
    for (double omega : {0.1, 0.25, 1.0})
      for (double alpha : {0.0, 0.1, 1.0}) {
        PicardOptions po;
        po.horizon = 10.0;
        po.step = 10.0 / 4096;
        const PicardResult p = picard_solve(omega, beta, alpha, po);
        IntegrateOptions io;
        io.horizon = 10.0;
        io.sample_step = p.solution.step;
        io.tolerances = {1e-12, 1e-12};
        const Trajectory tr = integrate(ModelParams::dimensionless(omega, beta, alpha), io);
        double d = 0.0;
        for (std::size_t i = 0; i < p.solution.values.size(); ++i)
          d = std::max(d, std::abs(p.solution.values[i] - tr.samples()[i].u));
        t.le(d, ctx3(beta, omega, alpha));
      }
  struct BW { double beta, omega; };
  for (const BW& p : {BW{1, 0.1}, BW{1, 0.25}, BW{1, 1}, BW{0.5, 0.1}, BW{0.5, 0.25}, BW{0.5, 1}, BW{1, 4}}) {
    const std::size_t n = 1024;
    const OrderIntervalReport oi = check_order_interval(p.omega, p.beta, n);
    if (!oi.holds) t.fail(ctx3(p.beta, p.omega, 0.0) + " order interval");
    const GridFunction u0 = lower_barrier(p.omega, p.beta, n), v0 = upper_barrier(p.omega, p.beta, n);
    GridFunction mid = u0;
    for (std::size_t i = 0; i <= n; ++i) mid.values[i] = 0.5 * (u0.values[i] + v0.values[i]);
    for (const GridFunction* f : std::initializer_list<const GridFunction*>{&u0, &v0, &mid})
      for (double lam : {0.25, 0.5, 0.999999}) {
        const ScalingReport sr = check_scaling_inequality(*f, lam, p.omega, p.beta);
        if (!sr.holds) t.fail(ctx3(p.beta, p.omega, 0.0) + " scaling lambda=" + fmt(lam));
      }
  }
  return t.result("Picard/ODE sup distance on 18 points; order interval and scaling checks on [0, s*]");
}

CheckResult acc_regularization(const VerifyOptions&) {
  const ModelParams m = ModelParams::dimensionless(1.0, 1.0, 0.0);
  IntegrateOptions o;
  o.horizon = 20.0;
  o.tolerances = {1e-12, 1e-12};
  const std::vector<double> eps{1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
  const auto rows = regularization_convergence(m, eps, o);
  Tally t(0.0);
  std::string list;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    list += (i ? ", " : "") + fmt(rows[i].distance);
    if (i > 0 && !(rows[i].distance < rows[i - 1].distance)) t.fail("eps=" + fmt(rows[i].epsilon));
  }
  t.worst = rows.back().distance;
  return t.result("||u_eps - u_eps/10|| = " + list);
}

CheckResult acc_dependence(const VerifyOptions&) {
  const ModelParams m = ModelParams::dimensionless(1.0, 1.0, 0.0);
  IntegrateOptions o;
  o.horizon = 20.0;
  const std::vector<double> alphas{0.2, 0.1, 0.05, 0.025};
  const auto rows = continuous_dependence(m, 0.0, alphas, o);
  Tally t(0.0);
  std::string list;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    list += (i ? ", " : "") + fmt(rows[i].distance);
    if (i > 0 && !(rows[i].distance < rows[i - 1].distance)) t.fail("alpha=" + fmt(rows[i].alpha));
  }
  t.worst = rows.back().distance;
  return t.result("distances " + list);
}

CheckResult acc_regimes(const VerifyOptions&) {
  Tally t(1.0);  // metric: residual / its bound
  auto check = [&t](RegimeCase c, double beta, double alpha, double horizon, double bound) {
    RegimeOptions ro;
    ro.alpha = alpha;
    ro.horizon = horizon;
    if (c == RegimeCase::negligible_inertia) ro.tolerances = kCase2Tolerances;
    const RegimeRun r = integrate_regime(c, beta, ro);
    t.le(r.max_abs_residual / bound, "case " + std::to_string(static_cast<int>(c)) + " beta=" + fmt(beta) +
                                         " alpha=" + fmt(alpha) + " residual=" + fmt(r.max_abs_residual));
  };
  for (double beta : {1.0, 0.5})
    for (double alpha : {0.0, 0.3}) {
      check(RegimeCase::negligible_gravity_inertia, beta, alpha, 20.0, 1e-10);
      check(RegimeCase::negligible_gravity, beta, alpha, 20.0, 1e-8);
      check(RegimeCase::negligible_inertia, beta, alpha, 5.0, 1e-8);
    }
  for (double alpha : {0.0, 0.5, 1.5}) check(RegimeCase::negligible_viscosity, 1.0, alpha, 100.0, 1e-8);
  return t.result("case 3 to 1e-10, cases 1, 2 and 4 to 1e-8; metric is residual / bound");
}

CheckResult acc_convergence(const VerifyOptions&) {
  Tally t(1e-5);
  for (double beta : kBetaGrid)
    for (double omega : kOmegaGrid)
      for (double alpha : kAlphaGrid) {
        const ModelParams m = ModelParams::dimensionless(omega, beta, alpha);
        const State y = integrate(m, long_run(m)).at(60.0 / m.damping());
        t.le(std::hypot(y.u - 0.5, y.v), ctx3(beta, omega, alpha));
      }
  return t.result("final distance to (1/2, 0) at S = 60 sqrt(omega)/beta");
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"params.roundtrip", "u_from_H o H_from_u is the identity", 0, params_roundtrip},
      {"params.omega_routes", "direct and Bo/Oh omega agree", 0, params_omega_routes},
      {"params.beta_monotone", "beta in (0,1], decreasing in L/R", 0, params_beta_monotone},
      {"params.critical_scaling", "critical omega scales as beta^2", 0, params_critical_scaling},
      {"dynamics.equilibrium", "(1/2, 0) is an exact fixed point", 0, dynamics_equilibrium},
      {"dynamics.regularization_order", "rhs decreasing in eps", 0, dynamics_regularization_order},
      {"dynamics.case4_conservation", "case 4 conserves energy", 0, dynamics_case4_conservation},
      {"dynamics.case2_implicit", "case 2 implicit relation", 0, dynamics_case2_implicit},
      {"dynamics.h_u_consistency", "u-form and H-form agree", 0, dynamics_h_u_consistency},
      {"integrate.positivity", "u > 0 along trajectories", 0, integrate_positivity},
      {"integrate.upper_bound", "u <= 9/8", 0, integrate_upper_bound},
      {"integrate.energy_monotone", "E nonincreasing", 0, energy_monotone},
      {"integrate.lyapunov_derivative", "FD dV/ds = -gamma v^2, order >= 1.9", 0, lyapunov_derivative},
      {"integrate.eps_convergence", "eps -> 0 convergence", 0, eps_convergence},
      {"integrate.tolerance_convergence", "tolerance halving", 0, tolerance_convergence},
      {"volterra.monotonicity", "T is decreasing", 0, volterra_monotonicity},
      {"volterra.self_map", "T maps [u0, v0] into itself", 0, volterra_self_map},
      {"volterra.quadrature_order", "trapezoid error ratio ~ 4", 0, volterra_quadrature_order},
      {"volterra.picard_ode", "Picard and ODE solutions agree", 0, volterra_picard_ode},
      {"stability.v_positivity", "V > 0 off the equilibrium", 0, v_positivity},
      {"stability.eigen_real_part", "real parts of the eigenvalues", 0, eigen_real_part},
      {"stability.classification_boundary", "node/spiral switch at critical omega", 0,
       classification_boundary},
      {"stability.basin_residual", "basin bounds solve the level equation", 0, basin_residual_suite},
      {"stability.basin_geometry", "basin bounds bracket 1/2 and vary continuously", 0, basin_geometry},
      {"stability.forward_invariance", "V <= C along trajectories", 0, forward_invariance},
      {"acceptance.01_equilibrium", "equilibrium exactness", 1.0, acc_equilibrium},
      {"acceptance.02_bounds", "0 <= u <= 9/8", 5.0, acc_bounds},
      {"acceptance.03_energy", "energy and Lyapunov decrease", 10.0, acc_energy},
      {"acceptance.04_bifurcation", "monotone/oscillatory switch at beta^2/4", 30.0, acc_bifurcation},
      {"acceptance.05_eigen_anchor", "double eigenvalue -1 at (1/4, 1)", 1e-3, acc_eigen_anchor},
      {"acceptance.06_basin", "basin formulas", 1.0, acc_basin},
      {"acceptance.07_volterra", "Volterra/ODE cross-validation", 60.0, acc_volterra},
      {"acceptance.08_regularization", "regularization convergence", 10.0, acc_regularization},
      {"acceptance.09_dependence", "continuous dependence on alpha", 5.0, acc_dependence},
      {"acceptance.10_regimes", "reduced-regime oracles", 10.0, acc_regimes},
      {"acceptance.11_convergence", "convergence to equilibrium", 20.0, acc_convergence},
  };
  return all;
}

CheckResult run_suite(const Suite& s, const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = s.run(opt);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.name = s.name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.time_limit = s.time_limit;
  if (s.time_limit > 0.0 && r.seconds > s.time_limit) {
    r.passed = false;
    r.detail += "; runtime " + fmt(r.seconds) + " s exceeds " + fmt(s.time_limit) + " s";
  }
  return r;
}

std::vector<CheckResult> run(const VerifyOptions& opt) {
  std::vector<const Suite*> selected;
  for (const Suite& s : suites())
    if (opt.only.empty() || s.name.find(opt.only) != std::string::npos) selected.push_back(&s);

  std::vector<CheckResult> results(selected.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = opt.parallel ? std::min<unsigned>(hw, static_cast<unsigned>(selected.size())) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) results[i] = run_suite(*selected[i], opt);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) results[i] = run_suite(*selected[i], opt);
    });
  for (auto& th : pool) th.join();
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

io::JsonObject report(const std::vector<CheckResult>& results) {
  std::vector<io::JsonObject> rows;
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    io::JsonObject o;
    o.add("name", r.name)
        .add("passed", r.passed)
        .add("metric", r.metric)
        .add("threshold", r.threshold)
        .add("seconds", r.seconds)
        .add("time_limit", r.time_limit)
        .add("detail", r.detail);
    rows.push_back(std::move(o));
    if (!r.passed) ++failed;
  }
  io::JsonObject top;
  top.add("passed", failed == 0).add("total", results.size()).add("failed", failed).add("suites", rows);
  return top;
}

}  // namespace washburn::verify
