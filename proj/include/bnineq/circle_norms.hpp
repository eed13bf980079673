#pragma once

/**
 * @file circle_norms.hpp
 * @brief L^p means of polynomials on the unit circle, 0 <= p <= infinity.
 *
 *  - p = infinity: refined maximum modulus.
 *  - p = 0: geometric mean. Jensen's formula |lead| prod max(1, |z_k|) is the
 *    returned value; a quadrature of log|P| is computed alongside and their
 *    discrepancy is the error estimate.
 *  - 0 < p < infinity: quadrature of |P|^p. When P has zeros within 1e-2 of
 *    the circle (and p is not an even integer, where |P|^p is a trigonometric
 *    polynomial) the circle is cut at those zeros' angles and integrated
 *    with tanh-sinh; otherwise the periodic trapezoid rule with doubling.
 */

#include <cmath>
#include <vector>

#include "bnineq/circle_extrema.hpp"
#include "bnineq/polynomial.hpp"
#include "bnineq/quadrature.hpp"
#include "bnineq/roots.hpp"

namespace bnineq {

struct NormValue {
  double value = 0.0;
  double p = 0.0;
  double err_estimate = 0.0;

  /// err_estimate relative to value (0 for a zero value with zero error).
  double rel_err() const { return value > 0.0 ? err_estimate / value : err_estimate; }
};

namespace detail {

inline constexpr double kNearCircle = 1e-2;

inline bool is_even_integer(double p) {
  return p > 0.0 && p <= 64.0 && std::floor(p) == p && static_cast<long>(p) % 2 == 0;
}

inline std::vector<double> near_circle_angles(const Polynomial& p) {
  std::vector<double> angles;
  if (p.degree() < 1) return angles;
  for (const auto& c : root_clusters(p))
    if (std::abs(std::abs(c.center) - 1.0) < kNearCircle) angles.push_back(std::arg(c.center));
  return angles;
}

inline TrapezoidOptions trapezoid_options(const Polynomial& p) {
  TrapezoidOptions opt;
  opt.initial_nodes = 4096u * static_cast<std::size_t>(std::max(1, (p.degree() + 7) / 8));
  return opt;
}

/// (1/2pi) int |P(e^{i theta})|^p.
inline QuadratureResult power_mean(const Polynomial& poly, double p) {
  auto f = [&](double theta) -> double {
    const double sq = std::norm(poly(unit(theta)));
    if (p == 2.0) return sq;
    if (p == 1.0) return std::sqrt(sq);
    if (p == 4.0) return sq * sq;
    return sq == 0.0 ? 0.0 : std::exp(0.5 * p * std::log(sq));
  };
  if (!is_even_integer(p)) {
    auto cuts = near_circle_angles(poly);
    if (!cuts.empty()) return arc_mean(f, std::move(cuts));
  }
  return periodic_mean(f, trapezoid_options(poly));
}

/// (1/2pi) int log|P(e^{i theta})|.
inline QuadratureResult log_mean(const Polynomial& poly) {
  auto f = [&](double theta) { return 0.5 * std::log(std::max(std::norm(poly(unit(theta))), 1e-300)); };
  auto cuts = near_circle_angles(poly);
  if (!cuts.empty()) return arc_mean(f, std::move(cuts));
  auto opt = trapezoid_options(poly);
  opt.rel_tol = 1e-12;
  return periodic_mean(f, opt);
}

inline void check_norm_input(const Polynomial& poly, double p) {
  require(!poly.is_zero(), "lp_norm: zero polynomial");
  require(p >= 0.0, "lp_norm: p must be in [0, inf]");
}

}  // namespace detail

/// Mahler measure by Jensen's formula over the actual-degree zeros
/// (multiple zeros taken at their cluster centres).
inline double mahler_measure_jensen(const Polynomial& poly) {
  require(!poly.is_zero(), "mahler_measure: zero polynomial");
  double log_m = std::log(std::abs(poly.leading()));
  if (poly.degree() >= 1)
    for (const auto& c : root_clusters(poly))
      log_m += static_cast<double>(c.multiplicity) * std::max(0.0, std::log(std::abs(c.center)));
  return std::exp(log_m);
}

/// Mahler measure by quadrature of log|P|; independent of the zeros except
/// for where the circle is cut.
inline NormValue mahler_measure_quadrature(const Polynomial& poly) {
  detail::check_norm_input(poly, 0.0);
  auto q = detail::log_mean(poly);
  const double v = std::exp(q.mean);
  return {v, 0.0, v * q.err_estimate};
}

inline NormValue lp_norm(const Polynomial& poly, double p) {
  detail::check_norm_input(poly, p);
  if (std::isinf(p)) {
    auto m = max_modulus_at(poly, 1.0);
    return {m.value, p, m.err_estimate};
  }
  if (poly.degree() == 0) return {std::abs(poly[0]), p, 0.0};
  if (p == 0.0) {
    const double jensen = mahler_measure_jensen(poly);
    const double quad = mahler_measure_quadrature(poly).value;
    return {jensen, 0.0, std::abs(jensen - quad)};
  }
  auto q = detail::power_mean(poly, p);
  const double v = std::pow(q.mean, 1.0 / p);
  const double err = q.mean > 0.0 ? v * q.err_estimate / (p * q.mean) : 0.0;
  return {v, p, err};
}

/// ||A z^n + B||_p. Rotating z makes both coefficients nonnegative, and the
/// substitution theta -> n theta shows the value does not depend on n, so the
/// quadrature always runs on |A| z + |B|.
inline NormValue binomial_norm(cplx a, cplx b, double p, unsigned n_power = 1) {
  require(a != cplx{0.0} || b != cplx{0.0}, "binomial_norm: both coefficients are zero");
  require(p >= 0.0, "binomial_norm: p must be in [0, inf]");
  require(n_power >= 1, "binomial_norm: power must be positive");
  if (a == cplx{0.0}) return {std::abs(b), p, 0.0};
  if (b == cplx{0.0}) return {std::abs(a), p, 0.0};
  return lp_norm(Polynomial({cplx{std::abs(b)}, cplx{std::abs(a)}}), p);
}

/// ||1 + z||_p for p in (0, inf].
inline NormValue one_plus_z_norm(double p) {
  require(p > 0.0, "one_plus_z_norm: p must be positive (p = 0 is served by lp_norm)");
  return binomial_norm(1.0, 1.0, p, 1);
}

/// ||1 + z||_p by the Wallis-type closed form
/// [2^p Gamma((p+1)/2) / (sqrt(pi) Gamma(p/2 + 1))]^{1/p}.
inline double one_plus_z_norm_closed_form(double p) {
  require(p > 0.0 && std::isfinite(p), "one_plus_z_norm_closed_form: p must be finite and positive");
  const double log_mean =
      p * std::log(2.0) + std::lgamma(0.5 * (p + 1.0)) - 0.5 * std::log(std::numbers::pi) - std::lgamma(0.5 * p + 1.0);
  return std::exp(log_mean / p);
}

}  // namespace bnineq
