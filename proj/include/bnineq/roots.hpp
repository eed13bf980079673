#pragma once

/**
 * @file roots.hpp
 * @brief Polynomial zeros by Aberth-Ehrlich simultaneous iteration, and
 *        zero-location classification relative to the unit circle.
 *
 * Starting points come from the Newton polygon of log|a_k| (one circle per
 * edge of the upper convex hull), which copes with widely spread root
 * moduli. A root is frozen once its residual falls under the rounding-error
 * bound of Horner's rule.
 */

#include <algorithm>
#include <cmath>
#include <vector>

#include "bnineq/polynomial.hpp"

namespace bnineq {

namespace detail {

inline std::vector<cplx> quadratic_roots(cplx a0, cplx a1, cplx a2) {
  const cplx disc = std::sqrt(a1 * a1 - 4.0 * a2 * a0);
  const cplx q = (std::real(std::conj(a1) * disc) >= 0.0) ? -0.5 * (a1 + disc) : -0.5 * (a1 - disc);
  return {q / a2, a0 / q};
}

/// Initial approximations on the Newton-polygon circles.
inline std::vector<cplx> newton_polygon_start(std::span<const cplx> a) {
  const int m = static_cast<int>(a.size()) - 1;
  std::vector<int> idx;
  std::vector<double> lg(a.size());
  for (int k = 0; k <= m; ++k) {
    lg[k] = a[k] == cplx{0.0} ? -kInf : std::log(std::abs(a[k]));
    if (!std::isfinite(lg[k])) continue;
    // upper hull: drop points that make a non-right turn
    while (idx.size() >= 2) {
      int i = idx[idx.size() - 2], j = idx.back();
      double cross = (j - i) * (lg[k] - lg[i]) - (k - i) * (lg[j] - lg[i]);
      if (cross >= 0.0)
        idx.pop_back();
      else
        break;
    }
    idx.push_back(k);
  }
  std::vector<cplx> z;
  z.reserve(static_cast<std::size_t>(m));
  for (std::size_t e = 0; e + 1 < idx.size(); ++e) {
    const int i = idx[e], j = idx[e + 1];
    const double radius = std::exp((lg[i] - lg[j]) / (j - i));
    for (int q = 0; q < j - i; ++q) {
      double ang = kTwoPi * q / (j - i) + kTwoPi * i / m + 0.4;
      z.push_back(radius * unit(ang));
    }
  }
  return z;
}

/// Newton correction p/p' with reversed evaluation outside the unit disk.
inline void newton_ratio(std::span<const cplx> a, cplx z, cplx& ratio, double& residual, double& bound) {
  const int m = static_cast<int>(a.size()) - 1;
  const double eps = std::numeric_limits<double>::epsilon();
  if (std::abs(z) <= 1.0) {
    cplx p = a[m], dp{0.0};
    double s = std::abs(a[m]);
    const double az = std::abs(z);
    for (int k = m - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + a[k];
      s = s * az + std::abs(a[k]);
    }
    residual = std::abs(p);
    bound = 4.0 * m * eps * s;
    // stationary point: nudge off it instead of dividing by zero
    ratio = dp == cplx{0.0} ? cplx{1e-8 * (1.0 + az)} : p / dp;
  } else {
    const cplx y = 1.0 / z;
    const double ay = std::abs(y);
    cplx r = a[0], dr{0.0};
    double s = std::abs(a[0]);
    for (int k = 1; k <= m; ++k) {
      dr = dr * y + r;
      r = r * y + a[k];
      s = s * ay + std::abs(a[k]);
    }
    residual = std::abs(r);
    bound = 4.0 * m * eps * s;
    const cplx denom = static_cast<double>(m) - y * dr / r;
    ratio = (r == cplx{0.0} || denom == cplx{0.0}) ? cplx{0.0} : z / denom;
  }
}

/// Roots of a polynomial with a[0] != 0 and a[m] != 0, m >= 3.
inline std::vector<cplx> aberth(std::span<const cplx> a) {
  const std::size_t m = a.size() - 1;
  std::vector<cplx> z = newton_polygon_start(a);
  std::vector<bool> done(m, false);
  constexpr int kMaxIter = 500;
  for (int it = 0; it < kMaxIter; ++it) {
    bool active = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (done[i]) continue;
      cplx ratio;
      double residual, bound;
      newton_ratio(a, z[i], ratio, residual, bound);
      if (residual <= bound) {
        done[i] = true;
        continue;
      }
      cplx sum{0.0};
      for (std::size_t j = 0; j < m; ++j)
        if (j != i && z[i] != z[j]) sum += 1.0 / (z[i] - z[j]);
      const cplx w = ratio / (1.0 - ratio * sum);
      z[i] -= w;
      if (std::abs(w) <= std::numeric_limits<double>::epsilon() * std::abs(z[i])) done[i] = true;
      active = true;
    }
    if (!active) break;
  }
  return z;
}

}  // namespace detail

/// All zeros of the actual-degree polynomial, with multiplicity.
/// Constants have no zeros; the zero polynomial is rejected.
inline std::vector<cplx> roots(const Polynomial& p) {
  const int d = p.degree();
  if (d < 0) throw PreconditionError("undefined roots: zero polynomial");
  auto c = p.coeffs().first(static_cast<std::size_t>(d) + 1);
  std::size_t k0 = 0;
  while (c[k0] == cplx{0.0}) ++k0;
  std::vector<cplx> out(k0, cplx{0.0});
  auto q = c.subspan(k0);
  const std::size_t m = q.size() - 1;
  std::vector<cplx> rest;
  if (m == 1)
    rest = {-q[0] / q[1]};
  else if (m == 2)
    rest = detail::quadratic_roots(q[0], q[1], q[2]);
  else if (m >= 3)
    rest = detail::aberth(q);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

/// A group of computed zeros treated as one zero of multiplicity m.
struct RootCluster {
  cplx center;
  std::size_t multiplicity;
};

/// Groups computed zeros that are numerically indistinguishable from a
/// multiple zero. An m-fold zero is scattered by about eps^(1/m) in double
/// precision. A group of size m whose radius is within that scale is replaced
/// by one centre, refined by Newton's method on P^(m-1) (which has a simple
/// zero there). Other zeros are returned singly.
inline std::vector<RootCluster> root_clusters(const Polynomial& p) {
  const auto z = roots(p);
  std::vector<RootCluster> out;
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    const double reach = 0.2 * (1.0 + std::abs(z[i]));
    std::vector<std::size_t> group{i};
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (!used[j] && std::abs(z[j] - z[i]) <= reach) group.push_back(j);
    cplx c{0.0};
    for (auto k : group) c += z[k];
    c /= static_cast<double>(group.size());
    double radius = 0.0;
    for (auto k : group) radius = std::max(radius, std::abs(z[k] - c));
    const double m = static_cast<double>(group.size());
    const double scale = 10.0 * std::pow(1e-15, 1.0 / m) * (1.0 + std::abs(c));
    if (group.size() == 1 || radius > scale) {
      used[i] = true;
      out.push_back({z[i], 1});
      continue;
    }
    Polynomial d = p;
    for (std::size_t k = 1; k < group.size(); ++k) d = derivative(d);
    const Polynomial dd = derivative(d);
    cplx refined = c;
    for (int it = 0; it < 8; ++it) {
      const cplx slope = dd(refined);
      if (slope == cplx{0.0}) break;
      const cplx step = d(refined) / slope;
      refined -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(refined)) break;
    }
    if (std::abs(refined - c) <= radius) c = refined;
    for (auto k : group) used[k] = true;
    out.push_back({c, group.size()});
  }
  return out;
}

enum class ZeroLocation {
  all_in_closed_disk,  ///< every zero has |z| <= 1
  none_in_open_disk,   ///< every zero has |z| >= 1
  all_on_circle,       ///< every zero on |z| = 1 (both of the above hold)
  mixed,
};

inline const char* to_string(ZeroLocation z) {
  switch (z) {
    case ZeroLocation::all_in_closed_disk: return "all_in_closed_disk";
    case ZeroLocation::none_in_open_disk: return "none_in_open_disk";
    case ZeroLocation::all_on_circle: return "all_on_circle";
    case ZeroLocation::mixed: return "mixed";
  }
  return "?";
}

inline constexpr double kBoundaryTol = 1e-9;

/// Classification inside the ambient space: when the actual degree is below
/// ambient_n the missing zeros sit at infinity and count as outside the disk.
inline ZeroLocation zero_location(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("zero_location: zero polynomial");
  bool inside = p.degree() == static_cast<int>(p.ambient_degree());  // no zeros at infinity
  bool outside = true;
  if (p.degree() == 0) return ZeroLocation::none_in_open_disk;
  for (const auto& c : root_clusters(p)) {
    const double r = std::abs(c.center);
    if (r > 1.0 + kBoundaryTol) inside = false;
    if (r < 1.0 - kBoundaryTol) outside = false;
  }
  if (inside && outside) return ZeroLocation::all_on_circle;
  if (inside) return ZeroLocation::all_in_closed_disk;
  if (outside) return ZeroLocation::none_in_open_disk;
  return ZeroLocation::mixed;
}

inline bool zeros_in_closed_disk(ZeroLocation z) {
  return z == ZeroLocation::all_in_closed_disk || z == ZeroLocation::all_on_circle;
}

inline bool no_zeros_in_open_disk(ZeroLocation z) {
  return z == ZeroLocation::none_in_open_disk || z == ZeroLocation::all_on_circle;
}

}  // namespace bnineq
