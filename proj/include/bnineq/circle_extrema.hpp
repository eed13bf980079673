#pragma once

// Extrema of |P| on a circle |z| = k: a uniform grid locates the basins, then
// golden-section search refines the best few of them.

#include <algorithm>
#include <cmath>
#include <vector>

#include "bnineq/polynomial.hpp"

namespace bnineq {

struct CircleExtremum {
  double value;
  double angle;
  double err_estimate;  ///< change over the last refinement step
};

namespace detail {

inline std::size_t extrema_grid_size(const Polynomial& p) {
  const int d = std::max(p.degree(), 0);
  return 4096u * static_cast<std::size_t>(std::max(1, (d + 7) / 8));
}

template <class F>
CircleExtremum golden_min(F&& f, double lo, double hi) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  double prev = std::min(fc, fd);
  double change = 0.0;
  while (b - a > 1e-14 * (1.0 + std::abs(a))) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    double cur = std::min(fc, fd);
    change = std::abs(prev - cur);
    prev = cur;
  }
  return fc <= fd ? CircleExtremum{fc, c, change} : CircleExtremum{fd, d, change};
}

/// Minimum over the circle of sign * |P(k e^{i theta})|.
inline CircleExtremum circle_min_signed(const Polynomial& p, double k, double sign) {
  require(k > 0.0, "circle extremum: radius must be positive");
  if (p.degree() <= 0) return {std::abs(p[0]), 0.0, 0.0};
  const std::size_t n = extrema_grid_size(p);
  const double h = kTwoPi / static_cast<double>(n);
  auto f = [&](double theta) { return sign * std::abs(p(k * unit(theta))); };
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = f(h * static_cast<double>(i));

  std::vector<std::size_t> basins;
  for (std::size_t i = 0; i < n; ++i) {
    const double l = v[(i + n - 1) % n], r = v[(i + 1) % n];
    if (v[i] <= l && v[i] <= r) basins.push_back(i);
  }
  // |P|^2 is a trigonometric polynomial of degree d: at most d true local minima
  const std::size_t keep = static_cast<std::size_t>(p.degree()) + 2;
  if (basins.size() > keep) {
    std::partial_sort(basins.begin(), basins.begin() + static_cast<long>(keep), basins.end(),
                      [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    basins.resize(keep);
  }
  CircleExtremum best{v[0], 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] < best.value) best = {v[i], h * static_cast<double>(i), 0.0};
  for (std::size_t i : basins) {
    const double t = h * static_cast<double>(i);
    CircleExtremum r = golden_min(f, t - h, t + h);
    if (r.value < best.value) best = r;
  }
  best.angle = std::fmod(best.angle + kTwoPi, kTwoPi);
  return best;
}

}  // namespace detail

/// m(P, k) = min over |z| = k of |P(z)|, with the angle where it is attained.
inline CircleExtremum min_modulus_at(const Polynomial& p, double k) {
  return detail::circle_min_signed(p, k, 1.0);
}

inline CircleExtremum max_modulus_at(const Polynomial& p, double k) {
  auto r = detail::circle_min_signed(p, k, -1.0);
  r.value = -r.value;
  return r;
}

inline double min_modulus(const Polynomial& p, double k) { return min_modulus_at(p, k).value; }
inline double max_modulus(const Polynomial& p, double k) { return max_modulus_at(p, k).value; }

}  // namespace bnineq
