#include <cmath>

#include "support.hpp"
#include "washburn/stability.hpp"

using namespace washburn;
using test::code_of;

TEST_SUITE("stability") {

TEST_CASE("eigenvalues and type") {
  const StabilityReport in = linearize(0.25, 1.0);
  CHECK(in.kind == CriticalPointKind::stable_inflected_node);
  CHECK(in.lambda1.real() == doctest::Approx(-1.0));
  CHECK(in.lambda2.real() == doctest::Approx(-1.0));
  CHECK(in.omega_star == 0.25);

  const StabilityReport sp = linearize(1.0, 1.0);
  CHECK(sp.kind == CriticalPointKind::stable_spiral);
  CHECK(sp.lambda1.real() == doctest::Approx(-0.5));
  CHECK(std::abs(sp.lambda1.imag()) == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(sp.lambda1 == std::conj(sp.lambda2));
  CHECK(!sp.has_real_eigenvector);

  const StabilityReport nd = linearize(0.125, 1.0);
  CHECK(nd.kind == CriticalPointKind::stable_node);
  CHECK(nd.discriminant == doctest::Approx(0.5));
  CHECK(nd.lambda1.imag() == 0.0);
  CHECK(nd.lambda1.real() < nd.lambda2.real());
  CHECK(nd.lambda2.real() < 0.0);
  // product of eigenvalues is the restoring stiffness 1, sum is -gamma
  CHECK(std::abs(nd.lambda1 * nd.lambda2 - 1.0) < 1e-14);
  CHECK(std::abs(nd.lambda1 + nd.lambda2 + 1.0 / std::sqrt(0.125)) < 1e-14);
  CHECK(nd.has_real_eigenvector);
  CHECK(nd.eigenvector_slow[1] == doctest::Approx(nd.lambda2.real()));

  CHECK(code_of([] { linearize(0.0, 1.0); }) == Errc::domain);
  CHECK(to_string(CriticalPointKind::stable_spiral) == "StableSpiral");
}

TEST_CASE("basin of attraction") {
  const BasinSpec b0 = basin(0.0);
  CHECK(b0.C == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(b0.u_min == 0.0);
  CHECK(b0.u_max == doctest::Approx(9.0 / 8.0).epsilon(1e-14));
  const BasinSpec b1 = basin(1.0);
  CHECK(b1.C == 0.0);
  CHECK(b1.u_min == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b1.u_max == doctest::Approx(0.5).epsilon(1e-12));
  for (double a : {0.1, 0.5, 0.9, 1.2, 1.5}) {
    const BasinSpec b = basin(a);
    CHECK(test::rel(b.C, (1.0 - a) * (1.0 - a) * (1.0 + 2.0 * a) / 6.0) <= 1e-14);
    CHECK(b.u_min <= 0.5);
    CHECK(b.u_max >= 0.5);
    CHECK(basin_residual(b, b.u_min) < 1e-14);
    CHECK(basin_residual(b, b.u_max) < 1e-14);
  }
  CHECK(code_of([] { basin(-0.1); }) == Errc::domain);
  CHECK(code_of([] { basin(1.6); }) == Errc::domain);
}

TEST_CASE("approach classification") {
  const Trajectory eq = integrate(ModelParams::dimensionless(1.0, 1.0, 1.0));
  CHECK(classify_approach(eq).kind == Approach::at_equilibrium);

  IntegrateOptions opt;
  opt.horizon = settling_horizon(1.0, 0.5);
  const Trajectory sp = integrate(ModelParams::dimensionless(1.0, 0.5, 0.0), opt);
  const ApproachReport r = classify_approach(sp);
  CHECK(r.kind == Approach::oscillatory);
  CHECK(r.final_distance < kSettledDistance);

  opt.horizon = settling_horizon(0.1, 1.0);
  const Trajectory nd = integrate(ModelParams::dimensionless(0.1, 1.0, 0.0), opt);
  CHECK(classify_approach(nd).kind == Approach::monotone);

  opt.horizon = 1.0;
  const Trajectory short_run = integrate(ModelParams::dimensionless(1.0, 0.5, 0.0), opt);
  CHECK(code_of([&] { classify_approach(short_run); }) == Errc::inconclusive);
  CHECK(to_string(Approach::monotone) == "Monotone");
}

TEST_CASE("sublevel sets are forward invariant") {
  for (double a : {0.0, 0.4, 1.5}) {
    const Trajectory t = integrate(ModelParams::dimensionless(0.3, 0.6, a));
    const AuditReport r = audit_trajectory(t, basin(a));
    CHECK(r.forward_invariant);
    CHECK(r.max_V_minus_C <= kInvarianceTol);
    CHECK(r.max_V_increase <= 1e-10);
  }
  const Trajectory t = integrate(ModelParams::dimensionless(0.3, 0.6, 0.2));
  CHECK(code_of([&] { audit_trajectory(t, basin(0.8)); }) == Errc::domain);
}

}
