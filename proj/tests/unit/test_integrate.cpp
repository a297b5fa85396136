#include <cmath>
#include <vector>

#include "support.hpp"
#include "washburn/integrate.hpp"
#include "washburn/lyapunov.hpp"

using namespace washburn;
using test::code_of;

TEST_SUITE("integrate") {

TEST_CASE("derived columns are consistent with (s, u, v)") {
  const auto m = ModelParams::dimensionless(0.3, 0.8, 0.2);
  const Trajectory t = integrate(m);
  REQUIRE(t.samples().size() > 100);
  CHECK(t.samples().front().u == doctest::Approx(0.02).epsilon(1e-15));
  CHECK(t.samples().front().v == 0.0);
  double prev_s = -1.0;
  for (const Sample& x : t.samples()) {
    CHECK(x.s > prev_s);
    prev_s = x.s;
    CHECK(std::abs(x.H - std::sqrt(2.0 * x.u)) <= 1e-14);
    CHECK(std::abs(x.T - std::sqrt(0.3) * x.s) <= 1e-14 * std::max(1.0, x.T));
    const EnergyValues e = lyapunov(x.u, x.v);
    CHECK(x.E == e.E);
    CHECK(x.V == e.V);
  }
}

TEST_CASE("default and settling horizons") {
  const auto m = ModelParams::dimensionless(4.0, 1.0, 0.0);
  CHECK(default_horizon(m) == doctest::Approx(60.0));
  // slow rate of a node: (gamma/2)(1 - sqrt(1 - 4 omega/beta^2))
  const double g = 1.0 / std::sqrt(0.1);
  const double slow = 0.5 * g * (1.0 - std::sqrt(1.0 - 0.4));
  CHECK(test::rel(settling_horizon(0.1, 1.0), 30.0 / slow) <= 1e-12);
  // spirals decay at gamma/2
  CHECK(test::rel(settling_horizon(1.0, 1.0), 60.0) <= 1e-12);
}

TEST_CASE("starting at the equilibrium stays there") {
  const Trajectory t = integrate(ModelParams::dimensionless(0.7, 0.5, 1.0));
  double dev = 0.0;
  for (const Sample& x : t.samples()) dev = std::max(dev, std::abs(x.u - 0.5) + std::abs(x.v));
  CHECK(dev < 1e-12);
  CHECK(t.crossings().empty());
}

TEST_CASE("reference value of u") {
  IntegrateOptions opt;
  opt.horizon = 30.0;
  const Trajectory t = integrate(ModelParams::dimensionless(1.0, 1.0, 0.0), opt);
  CHECK(std::abs(t.at(30.0).u - 0.4999998627521495) < 1e-6);
  CHECK(std::abs(t.samples().back().s - 30.0) < 1e-12);
}

TEST_CASE("positivity and the upper bound") {
  for (double omega : {0.05, 0.5, 5.0})
    for (double beta : {0.3, 1.0})
      for (double alpha : {0.0, 0.5, 1.5}) {
        const Trajectory t = integrate(ModelParams::dimensionless(omega, beta, alpha));
        for (const Sample& x : t.samples()) {
          CHECK(x.u >= 0.0);
          CHECK(x.u <= 9.0 / 8.0 + 1e-12);
        }
      }
}

TEST_CASE("crossing counts over the settling horizon") {
  struct Row {
    double beta, omega;
    std::size_t crossings;
  };
  for (const Row r : {Row{1.0, 0.1, 0}, Row{1.0, 1.0, 11}, Row{0.5, 0.5, 17}, Row{0.5, 0.05, 0}}) {
    IntegrateOptions opt;
    opt.horizon = settling_horizon(r.omega, r.beta);
    const Trajectory t = integrate(ModelParams::dimensionless(r.omega, r.beta, 0.0), opt);
    CAPTURE(r.beta);
    CAPTURE(r.omega);
    CHECK(t.crossings().size() == r.crossings);
    for (std::size_t i = 1; i < t.crossings().size(); ++i)
      CHECK(t.crossings()[i].direction == -t.crossings()[i - 1].direction);
  }
}

TEST_CASE("crossings are located on the level") {
  const Trajectory t = integrate(ModelParams::dimensionless(1.0, 0.5, 0.0));
  REQUIRE(!t.crossings().empty());
  for (const Crossing& c : t.crossings()) {
    const State x = t.at(c.s);
    CHECK(std::abs(x.u - 0.5) < 1e-8);
    CHECK((x.v > 0.0) == (c.direction > 0));
  }
  CHECK(t.crossings().front().direction == 1);
}

TEST_CASE("continuous dependence on the initial height") {
  const auto m = ModelParams::dimensionless(0.5, 0.7, 1.0);
  IntegrateOptions opt;
  opt.horizon = 50.0;
  const std::vector<double> alphas{1.0 - 1e-6, 1.0 + 1e-6};
  for (const DependenceRow& r : continuous_dependence(m, 1.0, alphas, opt)) CHECK(r.distance < 1e-4);
}

TEST_CASE("regularized runs approach the limit") {
  const auto m = ModelParams::dimensionless(1.0, 1.0, 0.0);
  IntegrateOptions opt;
  opt.horizon = 20.0;
  const std::vector<double> eps{1e-2, 1e-4, 1e-6};
  const auto rows = regularization_convergence(m, eps, opt);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].distance < rows[0].distance);
}

TEST_CASE("input errors") {
  const auto m = ModelParams::dimensionless(1.0, 1.0, 0.0);
  IntegrateOptions opt;
  opt.horizon = 2.0 * kMaxHorizon;
  CHECK(code_of([&] { integrate(m, opt); }) == Errc::horizon);
  opt.horizon = -1.0;
  CHECK(code_of([&] { integrate(m, opt); }) == Errc::domain);
  opt = {};
  opt.epsilon = -1e-3;
  CHECK(code_of([&] { integrate(m, opt); }) == Errc::domain);
  opt = {};
  opt.sample_step = 0.0;
  CHECK(code_of([&] { integrate(m, opt); }) == Errc::domain);
  CHECK(code_of([&] { integrate_from(m, {-0.1, 0.0}); }) == Errc::domain);
}

TEST_CASE("reduced regimes against their oracles") {
  RegimeOptions opt;
  for (int c = 1; c <= 4; ++c) {
    RegimeOptions o = opt;
    // the implicit relation loses digits as h* approaches 1
    if (c == 2) o.horizon = 3.0;
    const RegimeRun r = integrate_regime(static_cast<RegimeCase>(c), 0.5, o);
    CAPTURE(c);
    CHECK(r.samples.size() == static_cast<std::size_t>(o.horizon / o.sample_step + 1.5));
    CHECK(r.max_abs_residual < 1e-9);
  }
  // without gravity the column keeps rising
  const RegimeRun slow = integrate_regime(RegimeCase::negligible_gravity, 1.0, opt);
  const RegimeRun fast = integrate_regime(RegimeCase::negligible_gravity, 0.5, opt);
  CHECK(fast.samples.back().h > slow.samples.back().h);
  CHECK(case1_closed_form(0.0, 1.0, 0.3) == 0.3);
  CHECK(case3_closed_form(2.0, 1.0, 0.0) == 2.0);
  CHECK(case2_elapsed_time(0.3, 0.3, 0.5) == 0.0);
  CHECK(case4_energy(0.5, 0.0) == doctest::Approx(-1.0 / 6.0));
}

}
