#include <cmath>

#include "support.hpp"
#include "washburn/volterra.hpp"

using namespace washburn;
using test::code_of;

TEST_SUITE("volterra") {

TEST_CASE("the equilibrium is a fixed point") {
  const GridFunction f = sample_grid(0.01, 500, [](double) { return 0.5; });
  const GridFunction g = apply_T(f, 0.8, 0.6, 1.0);
  for (double x : g.values) CHECK(std::abs(x - 0.5) < 1e-15);
}

TEST_CASE("zero input matches the closed form") {
  // T(0)(s) = (sqrt(omega)/beta) [s - (sqrt(omega)/beta)(1 - e^{-beta s/sqrt(omega)})]
  const double omega = 0.5, beta = 0.7, k = std::sqrt(omega) / beta;
  auto error = [&](std::size_t n) {
    const GridFunction z = sample_grid(10.0 / n, n, [](double) { return 0.0; });
    const GridFunction g = apply_T(z, omega, beta, 0.0);
    double err = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      const double s = g.node(i);
      err = std::max(err, std::abs(g.values[i] - k * (s - k * (1.0 - std::exp(-s / k)))));
    }
    return err;
  };
  const double e1 = error(1000), e2 = error(2000);
  CHECK(e2 < 1e-5);
  CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("order interval") {
  for (double omega : {0.1, 1.0, 10.0})
    for (double beta : {0.2, 1.0}) {
      const OrderIntervalReport r = check_order_interval(omega, beta, 512);
      CAPTURE(omega);
      CAPTURE(beta);
      CHECK(r.holds);
      CHECK(r.lower_slack >= 0.0);
      CHECK(r.upper_slack >= 0.0);
    }
  CHECK(order_interval_end(1.0, 1.0) == 0.5);
  CHECK(order_interval_end(0.01, 1.0) == doctest::Approx(0.1));
}

TEST_CASE("scaling inequality") {
  const double omega = 1.0, beta = 1.0;
  const GridFunction u0 = lower_barrier(omega, beta, 256);
  const GridFunction v0 = upper_barrier(omega, beta, 256);
  const GridFunction mid = sample_grid(u0.step, 256, [](double s) { return s * s / 3.0; });
  for (const GridFunction* f : {&u0, &v0, &mid})
    for (double lambda : {0.25, 0.5, 0.9}) {
      const ScalingReport r = check_scaling_inequality(*f, lambda, omega, beta);
      CHECK(r.holds);
      CHECK(r.max_violation <= kScalingSlack);
    }
}

TEST_CASE("Picard iteration") {
  const PicardResult at_eq = picard_solve(1.0, 1.0, 1.0);
  CHECK(at_eq.iterations == 1);
  CHECK(at_eq.final_diff < 1e-15);

  PicardOptions opt;
  opt.horizon = 5.0;
  const PicardResult r = picard_solve(1.0, 1.0, 0.0, opt);
  CHECK(r.final_diff <= opt.tol);
  CHECK(static_cast<int>(r.diffs.size()) == r.iterations);
  CHECK(r.solution.intervals() == 4096);
  CHECK(r.solution.values.front() == 0.0);
  CHECK(r.diffs.back() < r.diffs.front());
}

TEST_CASE("Picard errors") {
  PicardOptions opt;
  opt.max_iter = 2;
  CHECK(code_of([&] { picard_solve(1.0, 1.0, 0.0, opt); }) == Errc::non_convergence);
  opt = {};
  opt.horizon = 1.0;
  opt.step = 1.0 / static_cast<double>(2 * kMaxIntervals);
  CHECK(code_of([&] { picard_solve(1.0, 1.0, 0.0, opt); }) == Errc::domain);
  opt = {};
  opt.tol = 0.0;
  CHECK(code_of([&] { picard_solve(1.0, 1.0, 0.0, opt); }) == Errc::domain);
  CHECK(code_of([] { apply_T(GridFunction{}, 1.0, 1.0, 0.0); }) == Errc::domain);
}

}
