#include "washburn/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "washburn/errors.hpp"

namespace washburn {

std::string_view to_string(CriticalPointKind k) {
  switch (k) {
    case CriticalPointKind::stable_node: return "StableNode";
    case CriticalPointKind::stable_spiral: return "StableSpiral";
    case CriticalPointKind::stable_inflected_node: return "StableInflectedNode";
  }
  return "unknown";
}

std::string_view to_string(Approach a) {
  switch (a) {
    case Approach::monotone: return "Monotone";
    case Approach::oscillatory: return "Oscillatory";
    case Approach::at_equilibrium: return "AtEquilibrium";
  }
  return "unknown";
}

StabilityReport linearize(double omega, double beta) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw_domain("omega", "must be finite and > 0");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw_domain("beta", "must be finite and > 0");
  StabilityReport r;
  const double half = beta / (2.0 * std::sqrt(omega));
  r.omega_star = beta * beta / 4.0;
  r.discriminant = 1.0 - 4.0 * omega / (beta * beta);
  if (std::abs(r.discriminant) <= kInflectedBand) {
    r.kind = CriticalPointKind::stable_inflected_node;
    r.lambda1 = r.lambda2 = {-half, 0.0};
  } else if (r.discriminant > 0.0) {
    r.kind = CriticalPointKind::stable_node;
    const double root = std::sqrt(r.discriminant);
    r.lambda1 = {-half * (1.0 + root), 0.0};
    // -(half)(1 - root) = -half * (1 - disc) / (1 + root)
    r.lambda2 = {-half * (1.0 - r.discriminant) / (1.0 + root), 0.0};
  } else {
    r.kind = CriticalPointKind::stable_spiral;
    const double im = half * std::sqrt(-r.discriminant);
    r.lambda1 = {-half, -im};
    r.lambda2 = {-half, im};
  }
  if (r.kind != CriticalPointKind::stable_spiral) {
    r.has_real_eigenvector = true;
    r.eigenvector_slow[0] = 1.0;
    r.eigenvector_slow[1] = r.lambda2.real();
  }
  return r;
}

BasinSpec basin(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.5)) throw_domain("alpha", "must lie in [0, 3/2]");
  BasinSpec b;
  b.alpha = alpha;
  const double a2 = alpha * alpha;
  const double half_a2 = 0.5 * a2;
  // -a^2/2 + (2 sqrt2/3)(a^2/2)^{3/2} + 1/6 = (1 - a)^2 (1 + 2a) / 6 for a >= 0
  b.C = (1.0 - alpha) * (1.0 - alpha) * (1.0 + 2.0 * alpha) / 6.0;
  const double disc = std::max(0.0, 9.0 + 12.0 * alpha - 12.0 * a2);
  const double inner = 0.5 - alpha / 3.0 + std::sqrt(disc) / 6.0;
  const double other = 9.0 / 8.0 * inner * inner;
  if (alpha <= 1.0) {
    b.u_min = half_a2;
    b.u_max = other;
  } else {
    b.u_min = other;
    b.u_max = half_a2;
  }
  return b;
}

double basin_residual(const BasinSpec& b, double u) { return std::abs(lyapunov_level(u) - b.C); }

ApproachReport classify_approach(const Trajectory& traj) {
  const auto& smp = traj.samples();
  ApproachReport r;
  const Sample& last = smp.back();
  r.final_distance = std::hypot(last.u - 0.5, last.v);
  r.crossings = traj.crossings();

  const State x0 = traj.initial();
  if (x0.u == kEquilibrium.u && x0.v == kEquilibrium.v) {
    r.kind = Approach::at_equilibrium;
    return r;
  }
  if (!(std::abs(last.u - 0.5) < kSettledDistance)) {
    std::ostringstream os;
    os.precision(3);
    os << "horizon too short: |u(S) - 1/2| = " << std::abs(last.u - 0.5) << " >= 1e-4";
    throw Error(Errc::inconclusive, os.str());
  }
  if (r.crossings.size() >= 2) {
    r.kind = Approach::oscillatory;
    return r;
  }
  if (r.crossings.size() == 1)
    throw Error(Errc::inconclusive, "exactly one crossing of u = 1/2 (omega close to omega*?)");

  bool up = true, down = true;
  for (std::size_t i = 2; i < smp.size(); ++i) {
    const double d = smp[i].u - smp[i - 1].u;
    if (d < -kMonotoneTol) up = false;
    if (d > kMonotoneTol) down = false;
  }
  if (!up && !down) throw Error(Errc::inconclusive, "u is not monotone but never crosses 1/2");
  r.kind = Approach::monotone;
  return r;
}

AuditReport audit_trajectory(const Trajectory& traj, const BasinSpec& b) {
  const auto& smp = traj.samples();
  AuditReport r;
  r.initial_V_minus_C = smp.front().V - b.C;
  if (r.initial_V_minus_C > 1e-12) throw_domain("trajectory", "initial state lies outside {V <= C}");
  r.max_V_minus_C = -INFINITY;
  for (std::size_t i = 0; i < smp.size(); ++i) {
    r.max_V_minus_C = std::max(r.max_V_minus_C, smp[i].V - b.C);
    if (i > 0) r.max_V_increase = std::max(r.max_V_increase, smp[i].V - smp[i - 1].V);
  }
  r.final_distance = std::hypot(smp.back().u - 0.5, smp.back().v);
  r.forward_invariant = r.max_V_minus_C <= kInvarianceTol;
  return r;
}

}  // namespace washburn
