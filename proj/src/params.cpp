#include "washburn/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "washburn/errors.hpp"

namespace washburn {

namespace {

void require_positive(double x, const char* field) {
  if (!(x > 0.0) || !std::isfinite(x)) throw_domain(field, "must be finite and > 0");
}

void require_nonnegative(double x, const char* field) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw_domain(field, "must be finite and >= 0");
}

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= kMaxAlpha)) {
    std::ostringstream os;
    os.precision(17);
    os << "must lie in [0, 3/2], got " << alpha;
    throw_domain("alpha", os.str());
  }
}

}  // namespace

ModelParams ModelParams::dimensionless(double omega, double beta, double alpha) {
  require_positive(omega, "omega");
  require_positive(beta, "beta");
  if (beta > 1.0) throw_domain("beta", "must lie in (0, 1]");
  require_alpha(alpha);
  return ModelParams(omega, beta, alpha);
}

double ModelParams::damping() const noexcept { return beta_ / std::sqrt(omega_); }

double ModelParams::omega_star() const { return critical_omega(beta_); }

ModelParams ModelParams::with_alpha(double alpha) const {
  require_alpha(alpha);
  ModelParams m = *this;
  m.alpha_ = alpha;
  return m;
}

void validate(const PhysicalParams& p) {
  require_positive(p.rho, "rho");
  require_positive(p.mu, "mu");
  require_positive(p.gamma, "gamma");
  require_positive(p.g, "g");
  require_positive(p.R, "R");
  require_nonnegative(p.L, "L");
  require_nonnegative(p.h0, "h0");
  if (!(p.theta >= 0.0 && p.theta < std::numbers::pi / 2) || !(std::cos(p.theta) > 0.0))
    throw_domain("theta", "must lie in [0, pi/2) so that cos(theta) > 0");
}

ModelParams nondimensionalize(const PhysicalParams& p) {
  validate(p);
  const double cos_theta = std::cos(p.theta);
  const double h_e = 2.0 * p.gamma * cos_theta / (p.rho * p.g * p.R);
  const double tau = 8.0 * p.mu * h_e / (p.rho * p.g * p.R * p.R);
  const double omega = h_e / (p.g * tau * tau);
  const double beta = 1.0 / (1.0 + 4.0 * p.L / p.R);
  const double Oh = p.mu / std::sqrt(p.R * p.rho * p.gamma);
  const double Bo = p.rho * p.g * p.R * p.R / p.gamma;
  const double alpha = p.h0 / h_e;

  const double R2 = p.R * p.R;
  const double omega_direct = p.rho * p.rho * R2 * R2 * p.g / (64.0 * p.mu * p.mu * h_e);
  const double ratio = Bo / Oh;
  const double omega_bo_oh = ratio * ratio / (128.0 * cos_theta);
  for (double other : {omega_direct, omega_bo_oh}) {
    if (std::abs(other - omega) > 1e-12 * std::abs(omega)) {
      std::ostringstream os;
      os.precision(17);
      os << "omega routes disagree: " << omega << " vs " << other;
      throw Error(Errc::consistency, os.str());
    }
  }
  require_alpha(alpha);

  ModelParams m(omega, beta, alpha);
  m.scales_ = Scales{h_e, tau, Oh, Bo};
  return m;
}

std::vector<std::string> advisories(const ModelParams& m) {
  std::vector<std::string> out;
  if (m.alpha() > kSmallAlpha) {
    std::ostringstream os;
    os.precision(6);
    os << "alpha = " << m.alpha() << " exceeds " << kSmallAlpha
       << "; the model assumes h0 << h_e (results remain valid up to alpha = 3/2)";
    out.push_back(os.str());
  }
  return out;
}

double critical_omega(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw_domain("beta", "must be finite and > 0");
  return beta * beta / 4.0;
}

double u_from_H(double H) {
  if (!(H >= 0.0)) throw_domain("H", "must be >= 0");
  return 0.5 * H * H;
}

double H_from_u(double u) {
  if (!(u >= 0.0)) throw_domain("u", "must be >= 0");
  return std::sqrt(2.0 * u);
}

}  // namespace washburn
