#include "washburn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "washburn/errors.hpp"

namespace washburn {

State rhs_u(State x, double omega, double beta, double epsilon) {
  const double root = std::sqrt(2.0 * std::max(x.u, 0.0) + epsilon);
  return {x.v, 1.0 - (beta / std::sqrt(omega)) * x.v - root};
}

double rhs_H(double H, double Hdot, double omega, double beta) {
  if (!(H > kSingularH))
    throw Error(Errc::singularity, "rhs_H: H <= 1e-12, integrate in u-coordinates instead");
  return (1.0 - H - beta * H * Hdot - omega * Hdot * Hdot) / (omega * H);
}

std::string_view to_string(RegimeCase c) {
  switch (c) {
    case RegimeCase::negligible_gravity: return "negligible_gravity";
    case RegimeCase::negligible_inertia: return "negligible_inertia";
    case RegimeCase::negligible_gravity_inertia: return "negligible_gravity_inertia";
    case RegimeCase::negligible_viscosity: return "negligible_viscosity";
  }
  return "unknown";
}

RegimeCase regime_from_string(std::string_view name) {
  if (name == "1" || name == "negligible_gravity") return RegimeCase::negligible_gravity;
  if (name == "2" || name == "negligible_inertia") return RegimeCase::negligible_inertia;
  if (name == "3" || name == "negligible_gravity_inertia")
    return RegimeCase::negligible_gravity_inertia;
  if (name == "4" || name == "negligible_viscosity") return RegimeCase::negligible_viscosity;
  throw_domain("case", "unknown regime '" + std::string(name) + "'");
}

RegimeExponents regime_exponents(RegimeCase c) {
  switch (c) {
    case RegimeCase::negligible_gravity: return {1.0, 0.5};
    case RegimeCase::negligible_inertia: return {0.0, 0.0};
    case RegimeCase::negligible_gravity_inertia: return {0.5, 0.25, true, 0.0, 1.0, 0.0, 0.5};
    case RegimeCase::negligible_viscosity: return {0.5, 0.0};
  }
  throw_domain("case", "unknown regime");
}

RegimeSpec RegimeSpec::make(RegimeCase c, double case3_b) {
  if (c == RegimeCase::negligible_gravity_inertia) {
    if (!(case3_b > 0.0 && case3_b < 0.5)) throw_domain("b", "Case 3 needs b in (0, 1/2)");
    return {c, 2.0 * case3_b, case3_b};
  }
  const RegimeExponents e = regime_exponents(c);
  return {c, e.a, e.b};
}

namespace {

RegimeDerivative regime_eval(const RegimeSpec& spec, double u, double v, double beta) {
  switch (spec.case_id) {
    case RegimeCase::negligible_gravity: return {v, 1.0 - beta * v, false};
    case RegimeCase::negligible_inertia: return {(1.0 - std::sqrt(2.0 * u)) / beta, 0.0, true};
    case RegimeCase::negligible_gravity_inertia: return {1.0 / beta, 0.0, true};
    case RegimeCase::negligible_viscosity: return {v, 1.0 - std::sqrt(2.0 * u), false};
  }
  throw_domain("case", "unknown regime");
}

void check_spec(const RegimeSpec& spec, double beta) {
  if (!(beta > 0.0)) throw_domain("beta", "must be > 0");
  if (spec.case_id == RegimeCase::negligible_gravity_inertia) {
    if (!(spec.a > 0.0 && spec.a < 1.0) || std::abs(spec.a - 2.0 * spec.b) > 1e-15)
      throw_domain("exponents", "Case 3 needs a = 2b with a in (0,1)");
  } else {
    const RegimeExponents e = regime_exponents(spec.case_id);
    if (spec.a != e.a || spec.b != e.b) throw_domain("exponents", "do not match the regime");
  }
}

}  // namespace

RegimeDerivative rhs_regime(const RegimeSpec& spec, State x, double beta) {
  check_spec(spec, beta);
  const bool uses_root = spec.case_id == RegimeCase::negligible_inertia ||
                         spec.case_id == RegimeCase::negligible_viscosity;
  if (uses_root && x.u < 0.0) throw_domain("u", "reduced model needs u >= 0");
  return regime_eval(spec, x.u, x.v, beta);
}

RegimeDerivative rhs_regime_clamped(const RegimeSpec& spec, State x, double beta) {
  return regime_eval(spec, std::max(x.u, 0.0), x.v, beta);
}

}  // namespace washburn
