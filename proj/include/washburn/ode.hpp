#pragma once

// Dormand-Prince 5(4) with PI step-size control and Hairer's 4th-order
// continuous extension. Fixed-size state, forward time only.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <vector>

#include "washburn/errors.hpp"

namespace washburn::ode {

template <std::size_t N>
using Vec = std::array<double, N>;

struct Tolerances {
  double abs = 1e-10;
  double rel = 1e-8;
};

struct StepOptions {
  double initial_step = 0.0;  // 0 selects the step automatically
  double max_step = 0.0;      // 0 means unbounded
  std::size_t max_steps = 50'000'000;
};

/// One accepted step [s0, s0 + h] with its interpolation coefficients.
template <std::size_t N>
struct DenseSegment {
  double s0 = 0.0;
  double h = 0.0;
  std::array<Vec<N>, 5> c{};

  Vec<N> eval(double s) const {
    const double th = (s - s0) / h;
    const double th1 = 1.0 - th;
    Vec<N> y;
    for (std::size_t i = 0; i < N; ++i)
      y[i] = c[0][i] + th * (c[1][i] + th1 * (c[2][i] + th * (c[3][i] + th1 * c[4][i])));
    return y;
  }
};

/// Piecewise-polynomial solution over [begin, end].
template <std::size_t N>
class DenseSolution {
 public:
  DenseSolution() = default;
  DenseSolution(Vec<N> y0, double s0) : y0_(y0), s0_(s0) {}

  void push(const DenseSegment<N>& seg) { segs_.push_back(seg); }

  double begin() const { return s0_; }
  double end() const { return segs_.empty() ? s0_ : segs_.back().s0 + segs_.back().h; }
  std::size_t steps() const { return segs_.size(); }
  const std::vector<DenseSegment<N>>& segments() const { return segs_; }

  /// Evaluate at s in [begin, end] (clamped).
  Vec<N> operator()(double s) const {
    if (segs_.empty() || s <= s0_) return y0_;
    auto it = std::upper_bound(segs_.begin(), segs_.end(), s,
                               [](double x, const DenseSegment<N>& g) { return x < g.s0; });
    if (it != segs_.begin()) --it;
    if (s >= it->s0 + it->h && std::next(it) == segs_.end()) return it->eval(it->s0 + it->h);
    return it->eval(s);
  }

 private:
  Vec<N> y0_{};
  double s0_ = 0.0;
  std::vector<DenseSegment<N>> segs_;
};

namespace detail {

// Butcher tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                        a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// 5th minus 4th order weights.
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Continuous extension.
inline constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

template <std::size_t N>
double error_norm(const Vec<N>& err, const Vec<N>& y0, const Vec<N>& y1, const Tolerances& tol) {
  double acc = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const double sc = tol.abs + tol.rel * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double r = err[i] / sc;
    acc += r * r;
  }
  return std::sqrt(acc / static_cast<double>(N));
}

// Hairer's starting-step heuristic.
template <std::size_t N, class Rhs>
double initial_step(Rhs& f, double s0, const Vec<N>& y0, const Vec<N>& f0, double span,
                    const Tolerances& tol) {
  double dnf = 0.0, dny = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const double sk = tol.abs + tol.rel * std::abs(y0[i]);
    dnf += (f0[i] / sk) * (f0[i] / sk);
    dny += (y0[i] / sk) * (y0[i] / sk);
  }
  double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);
  h = std::min(h, span);
  Vec<N> y1;
  for (std::size_t i = 0; i < N; ++i) y1[i] = y0[i] + h * f0[i];
  const Vec<N> f1 = f(s0 + h, y1);
  double der2 = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const double sk = tol.abs + tol.rel * std::abs(y0[i]);
    const double d = (f1[i] - f0[i]) / sk;
    der2 += d * d;
  }
  der2 = std::sqrt(der2) / h;
  const double der12 = std::max(std::abs(der2), std::sqrt(dnf));
  const double h1 = der12 <= 1e-15 ? std::max(1e-6, std::abs(h) * 1e-3)
                                   : std::pow(0.01 / der12, 1.0 / 5.0);
  return std::min({100.0 * h, h1, span});
}

}  // namespace detail

/// Integrate y' = f(s, y) from s0 to s_end and return the dense solution.
/// Throws Errc::step_underflow when the controller cannot make progress.
template <std::size_t N, class Rhs>
DenseSolution<N> dopri5(Rhs&& f, double s0, const Vec<N>& y0, double s_end, const Tolerances& tol,
                        const StepOptions& opt = {}) {
  using namespace detail;
  DenseSolution<N> sol(y0, s0);
  const double span = s_end - s0;
  if (!(span > 0.0)) return sol;

  constexpr double safe = 0.9, fac_min = 0.2, fac_max = 10.0, beta = 0.04;
  const double expo = 0.2 - beta * 0.75;
  const double max_step = opt.max_step > 0.0 ? opt.max_step : span;

  double s = s0;
  Vec<N> y = y0;
  Vec<N> k1 = f(s, y);
  double h = opt.initial_step > 0.0 ? opt.initial_step : initial_step<N>(f, s, y, k1, span, tol);
  h = std::min(h, max_step);
  double fac_old = 1e-4;
  bool last_rejected = false;
  std::size_t n_steps = 0;

  Vec<N> yt, k2, k3, k4, k5, k6, k7, y1, err;
  while (s < s_end) {
    if (++n_steps > opt.max_steps)
      throw Error(Errc::step_underflow, "dopri5: step budget exhausted");
    const double min_step = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(s));
    if (h < min_step) {
      std::ostringstream os;
      os.precision(17);
      os << "dopri5: step size underflow at s = " << s;
      throw Error(Errc::step_underflow, os.str());
    }
    bool final_step = false;
    if (s + 1.01 * h >= s_end) {
      h = s_end - s;
      final_step = true;
    }

    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
    k2 = f(s + c2 * h, yt);
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(s + c3 * h, yt);
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(s + c4 * h, yt);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(s + c5 * h, yt);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    k6 = f(s + h, yt);
    for (std::size_t i = 0; i < N; ++i)
      y1[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    const double s_new = final_step ? s_end : s + h;
    k7 = f(s_new, y1);
    for (std::size_t i = 0; i < N; ++i)
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);

    const double e = error_norm<N>(err, y, y1, tol);
    double fac11 = std::pow(std::max(e, 1e-300), expo);
    if (e <= 1.0) {
      double fac = fac11 / std::pow(fac_old, beta);
      fac = std::clamp(fac / safe, 1.0 / fac_max, 1.0 / fac_min);
      double h_new = h / fac;
      fac_old = std::max(e, 1e-4);

      DenseSegment<N> seg;
      seg.s0 = s;
      seg.h = h;
      for (std::size_t i = 0; i < N; ++i) {
        const double dy = y1[i] - y[i];
        const double bspl = h * k1[i] - dy;
        seg.c[0][i] = y[i];
        seg.c[1][i] = dy;
        seg.c[2][i] = bspl;
        seg.c[3][i] = dy - h * k7[i] - bspl;
        seg.c[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
      }
      sol.push(seg);

      y = y1;
      k1 = k7;
      s = s_new;
      if (final_step) break;
      h_new = std::min(h_new, max_step);
      if (last_rejected) h_new = std::min(h_new, h);
      last_rejected = false;
      h = h_new;
    } else {
      h = h / std::min(1.0 / fac_min, fac11 / safe);
      last_rejected = true;
    }
  }
  return sol;
}

}  // namespace washburn::ode
