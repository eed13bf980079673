#pragma once

/**
 * @file quadrature.hpp
 * @brief Circle averages (1/2pi) int_0^{2pi} f(theta) dtheta.
 *
 * Two rules, both trapezoidal sums with step halving:
 *
 *  - periodic_mean: the plain periodic trapezoid rule. Exponentially
 *    convergent when f extends analytically to a strip around the real axis;
 *    the strip width for |P(e^{i theta})|^p is about the distance of the
 *    nearest zero of P to the unit circle.
 *  - arc_mean: the circle is cut at a set of singular angles and each arc is
 *    integrated with the tanh-sinh (double exponential) substitution, i.e.
 *    the trapezoid rule in the variable t where
 *    theta = c + h tanh(pi/2 sinh t). Endpoint singularities of the form
 *    |theta - theta_0|^p or log|theta - theta_0| are integrated to near
 *    machine precision.
 */

#include <algorithm>
#include <cmath>
#include <vector>

#include "bnineq/core.hpp"

namespace bnineq {

struct QuadratureResult {
  double mean;
  double err_estimate;  ///< |last level - previous level|
  std::size_t nodes;
};

struct TrapezoidOptions {
  std::size_t initial_nodes = 4096;
  std::size_t max_nodes = std::size_t{1} << 20;
  double rel_tol = 1e-9;
};

/// Periodic trapezoid rule with node doubling; each level reuses the
/// previous nodes.
template <class F>
QuadratureResult periodic_mean(F&& f, const TrapezoidOptions& opt = {}) {
  std::size_t n = opt.initial_nodes;
  double h = kTwoPi / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += f(h * static_cast<double>(i));
  double mean = sum / static_cast<double>(n);
  double err = std::abs(mean);
  while (n < opt.max_nodes) {
    double add = 0.0;
    for (std::size_t i = 0; i < n; ++i) add += f(h * (static_cast<double>(i) + 0.5));
    sum += add;
    n *= 2;
    h *= 0.5;
    const double next = sum / static_cast<double>(n);
    err = std::abs(next - mean);
    mean = next;
    if (err <= opt.rel_tol * std::abs(mean)) break;
  }
  return {mean, err, n};
}

namespace detail {

/// int_a^b f with tanh-sinh, halving the step in t until two levels agree.
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, double rel_tol, int max_level) {
  const double hw = 0.5 * (b - a);
  constexpr double kTMax = 3.5;  // weights fall below 1e-20 * hw beyond this
  const double halfpi = 0.5 * std::numbers::pi;
  auto contribution = [&](double t) {
    const double s = halfpi * std::sinh(t);
    const double ch = std::cosh(s);
    const double w = hw * halfpi * std::cosh(t) / (ch * ch);
    // distance from the nearer endpoint: hw (1 - tanh|s|) = 2 hw / (1 + e^{2|s|})
    const double off = 2.0 * hw / (1.0 + std::exp(2.0 * std::abs(s)));
    const double theta = s >= 0.0 ? b - off : a + off;
    return w * f(theta);
  };
  double step = 0.5;
  long count = static_cast<long>(kTMax / step);
  double sum = contribution(0.0);
  for (long k = 1; k <= count; ++k) sum += contribution(k * step) + contribution(-k * step);
  double integral = step * sum;
  double err = std::abs(integral);
  std::size_t nodes = 1 + 2 * static_cast<std::size_t>(count);
  for (int level = 1; level <= max_level; ++level) {
    step *= 0.5;
    count = static_cast<long>(kTMax / step);
    for (long k = 1; k <= count; k += 2) {
      sum += contribution(k * step) + contribution(-k * step);
      nodes += 2;
    }
    const double next = step * sum;
    err = std::abs(next - integral);
    integral = next;
    if (level >= 3 && err <= rel_tol * std::abs(integral)) break;
  }
  return {integral, err, nodes};
}

}  // namespace detail

/// Circle average of f with the circle cut at `cuts` (angles, any order).
template <class F>
QuadratureResult arc_mean(F&& f, std::vector<double> cuts, double rel_tol = 1e-12, int max_level = 9) {
  for (auto& c : cuts) c = std::fmod(std::fmod(c, kTwoPi) + kTwoPi, kTwoPi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double x, double y) { return y - x < 1e-13; }),
             cuts.end());
  if (cuts.size() > 1 && cuts.front() + kTwoPi - cuts.back() < 1e-13) cuts.pop_back();
  double total = 0.0, err = 0.0;
  std::size_t nodes = 0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = i + 1 < cuts.size() ? cuts[i + 1] : cuts.front() + kTwoPi;
    auto r = detail::tanh_sinh(f, a, b, rel_tol, max_level);
    total += r.mean;
    err += r.err_estimate;
    nodes += r.nodes;
  }
  return {total / kTwoPi, err / kTwoPi, nodes};
}

}  // namespace bnineq
