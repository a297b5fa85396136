#include "washburn/lyapunov.hpp"

#include <cmath>
#include <numbers>

#include "washburn/errors.hpp"

namespace washburn {

namespace {
constexpr double kTwoSqrt2Over3 = 2.0 * std::numbers::sqrt2 / 3.0;
}

double lyapunov_level(double u) { return -u + kTwoSqrt2Over3 * u * std::sqrt(u) + 1.0 / 6.0; }

double lyapunov_direct(double u, double v) { return 0.5 * v * v + lyapunov_level(u); }

double lyapunov_factored(double u, double v) {
  const double r = std::sqrt(u);
  // sqrt(0.5) rather than 1/sqrt2 so that V(1/2, 0) is exactly zero
  const double d = r - std::sqrt(0.5);
  return 0.5 * v * v + kTwoSqrt2Over3 * d * d * (r + 0.5 / std::numbers::sqrt2);
}

EnergyValues lyapunov(double u, double v) {
  if (!(u >= 0.0)) throw_domain("u", "Lyapunov function needs u >= 0");
  EnergyValues out;
  out.E = 0.5 * v * v - u + kTwoSqrt2Over3 * u * std::sqrt(u);
  out.V = std::abs(u - 0.5) < kFactoredBand ? lyapunov_factored(u, v) : out.E + 1.0 / 6.0;
  return out;
}

}  // namespace washburn
