#include <cmath>
#include <random>

#include "support.hpp"
#include "washburn/dynamics.hpp"

using namespace washburn;
using test::code_of;

TEST_SUITE("dynamics") {

TEST_CASE("u-form right-hand side at anchor states") {
  for (double omega : {0.1, 1.0, 7.0})
    for (double beta : {0.2, 1.0}) {
      const State eq = rhs_u(kEquilibrium, omega, beta);
      CHECK(eq.u == 0.0);
      CHECK(eq.v == 0.0);
      const State origin = rhs_u({0.0, 0.0}, omega, beta);
      CHECK(origin.u == 0.0);
      CHECK(origin.v == 1.0);
      const State top = rhs_u({9.0 / 8.0, 0.0}, omega, beta);
      CHECK(top.u == 0.0);
      CHECK(top.v == -0.5);
    }
}

TEST_CASE("damping term and regularization") {
  const State d = rhs_u({0.5, 0.2}, 4.0, 1.0, 0.0);
  CHECK(d.u == 0.2);
  CHECK(d.v == doctest::Approx(-0.1));
  // negative u is clamped inside the root
  CHECK(rhs_u({-0.3, 0.0}, 1.0, 1.0).v == 1.0);
  CHECK(rhs_u({-0.3, 0.0}, 1.0, 1.0, 0.04).v == doctest::Approx(0.8));
  for (double u : {-0.5, 0.0, 0.3, 1.1}) {
    double prev = rhs_u({u, 0.1}, 1.0, 1.0, 0.0).v;
    for (double eps : {1e-8, 1e-4, 1e-1, 1.0}) {
      const double now = rhs_u({u, 0.1}, 1.0, 1.0, eps).v;
      CHECK(now < prev);
      prev = now;
    }
  }
}

TEST_CASE("H-form right-hand side") {
  CHECK(rhs_H(1.0, 0.0, 1.0, 1.0) == 0.0);
  CHECK(rhs_H(0.5, 0.0, 1.0, 1.0) == 1.0);
  CHECK(code_of([] { rhs_H(0.0, 0.0, 1.0, 1.0); }) == Errc::singularity);
  CHECK(code_of([] { rhs_H(1e-13, 0.0, 1.0, 1.0); }) == Errc::singularity);
}

TEST_CASE("H-form and u-form describe the same motion") {
  // u = H^2/2, u' = H H' sqrt(omega) ... in s = T/sqrt(omega): v = sqrt(omega) H H_T
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dh(0.05, 1.5), dv(-1.0, 1.0), dw(0.05, 4.0), db(0.1, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double H = dh(rng), Hd = dv(rng), omega = dw(rng), beta = db(rng);
    const double Hdd = rhs_H(H, Hd, omega, beta);
    const double so = std::sqrt(omega);
    const State x{0.5 * H * H, so * H * Hd};
    const State d = rhs_u(x, omega, beta);
    // u'' = omega (H_T^2 + H H_TT)
    CHECK(d.v == doctest::Approx(omega * (Hd * Hd + H * Hdd)).epsilon(1e-12));
  }
}

TEST_CASE("regime exponents") {
  const auto e1 = regime_exponents(RegimeCase::negligible_gravity);
  CHECK(e1.a == 1.0);
  CHECK(e1.b == 0.5);
  const auto e2 = regime_exponents(RegimeCase::negligible_inertia);
  CHECK(e2.a == 0.0);
  CHECK(e2.b == 0.0);
  const auto e3 = regime_exponents(RegimeCase::negligible_gravity_inertia);
  CHECK(e3.family);
  CHECK(e3.a == 2.0 * e3.b);
  CHECK(e3.a > e3.a_lo);
  CHECK(e3.a < e3.a_hi);
  const auto e4 = regime_exponents(RegimeCase::negligible_viscosity);
  CHECK(e4.a == 0.5);
  CHECK(e4.b == 0.0);
  const RegimeSpec s = RegimeSpec::make(RegimeCase::negligible_gravity_inertia, 0.25);
  CHECK(s.a == 0.5);
  CHECK(s.b == 0.25);
  CHECK(code_of([] { RegimeSpec::make(RegimeCase::negligible_gravity_inertia, 0.5); }) == Errc::domain);
  CHECK(code_of([] { RegimeSpec::make(RegimeCase::negligible_gravity_inertia, 0.0); }) == Errc::domain);
}

TEST_CASE("regime names") {
  CHECK(regime_from_string("3") == RegimeCase::negligible_gravity_inertia);
  CHECK(regime_from_string("negligible_viscosity") == RegimeCase::negligible_viscosity);
  CHECK(to_string(RegimeCase::negligible_inertia) == "negligible_inertia");
  CHECK(code_of([] { regime_from_string("5"); }) == Errc::domain);
}

TEST_CASE("reduced right-hand sides") {
  const auto c1 = RegimeSpec::make(RegimeCase::negligible_gravity);
  const auto c2 = RegimeSpec::make(RegimeCase::negligible_inertia);
  const auto c3 = RegimeSpec::make(RegimeCase::negligible_gravity_inertia);
  const auto c4 = RegimeSpec::make(RegimeCase::negligible_viscosity);
  CHECK(rhs_regime(c1, {0.0, 0.0}, 1.0).dv == 1.0);
  CHECK(rhs_regime(c1, {0.0, 2.0}, 0.5).dv == 0.0);
  CHECK(rhs_regime(c2, {0.5, 0.0}, 1.0).du == 0.0);
  CHECK(rhs_regime(c2, {0.0, 0.0}, 0.5).du == 2.0);
  CHECK(rhs_regime(c2, {0.5, 0.0}, 1.0).first_order);
  CHECK(rhs_regime(c3, {0.7, 0.0}, 0.5).du == 2.0);
  CHECK(rhs_regime(c4, {0.5, 0.3}, 1.0).dv == 0.0);
  CHECK(rhs_regime(c4, {0.5, 0.3}, 1.0).du == 0.3);
  CHECK(code_of([&] { rhs_regime(c2, {-0.1, 0.0}, 1.0); }) == Errc::domain);
  CHECK(code_of([&] { rhs_regime(c4, {-0.1, 0.0}, 1.0); }) == Errc::domain);
  CHECK(code_of([&] { rhs_regime(c1, {0.1, 0.0}, 0.0); }) == Errc::domain);
  CHECK(rhs_regime_clamped(c4, {-0.1, 0.0}, 1.0).dv == 1.0);
  RegimeSpec wrong = c1;
  wrong.a = 0.5;
  CHECK(code_of([&] { rhs_regime(wrong, {0.1, 0.0}, 1.0); }) == Errc::domain);
}

}
