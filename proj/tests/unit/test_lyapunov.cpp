#include <cmath>
#include <random>

#include "support.hpp"
#include "washburn/lyapunov.hpp"

using namespace washburn;

TEST_SUITE("lyapunov") {

TEST_CASE("anchor values") {
  const EnergyValues eq = lyapunov(0.5, 0.0);
  CHECK(eq.E == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK(eq.V == 0.0);
  const EnergyValues o = lyapunov(0.0, 0.0);
  CHECK(o.E == 0.0);
  CHECK(o.V == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  const EnergyValues top = lyapunov(9.0 / 8.0, 0.0);
  CHECK(std::abs(top.E) < 1e-15);
  CHECK(top.V == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(test::code_of([] { lyapunov(-1e-9, 0.0); }) == Errc::domain);
}

TEST_CASE("factored and direct forms agree") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> du(0.0, 9.0 / 8.0), dv(-2.0, 2.0);
  for (int i = 0; i < 10000; ++i) {
    const double u = du(rng), v = dv(rng);
    CHECK(std::abs(lyapunov_direct(u, v) - lyapunov_factored(u, v)) < 1e-14);
    CHECK(lyapunov(u, v).V > 0.0);
  }
}

TEST_CASE("factored form near the equilibrium") {
  // V ~ (u - 1/2)^2 / 2 there; the direct form loses all digits.
  const double d = 1e-9;
  const double V = lyapunov(0.5 + d, 0.0).V;
  CHECK(V > 0.0);
  CHECK(V == doctest::Approx(0.5 * d * d).epsilon(1e-6));
  CHECK(std::abs(lyapunov_level(0.5)) < 1e-15);
  CHECK(lyapunov_level(0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

}
