#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded generators for verification instances.
 *
 * Every sampler is a pure function of its seed. Zeros are drawn first and the
 * polynomial is built from them, so the zero location holds by construction.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "bnineq/bn_operator.hpp"
#include "bnineq/polynomial.hpp"
#include "bnineq/rng.hpp"

namespace bnineq {

inline constexpr std::size_t kMaxSampleDegree = 16;
inline constexpr double kOnCircleProbability = 0.2;

/// One fully specified test case.
struct InequalityInstance {
  Polynomial P;
  BnOperator op;
  PhiParams params;
  cplx delta{0.0};
  double p = 2.0;
  std::uint64_t seed = 0;
};

/// |P| <= |F| on the unit circle, all zeros of F in the closed disk.
struct DominatedPair {
  Polynomial P;
  Polynomial F;
};

namespace detail {

inline void check_sample_degree(std::size_t n) {
  require(n >= 1 && n <= kMaxSampleDegree, "sampler: degree must be in [1, 16] (got " + std::to_string(n) + ")");
}

inline cplx random_leading(Rng& rng) { return rng.uniform(0.5, 2.0) * rng.unimodular(); }

inline std::vector<cplx> zeros_in_disk(std::size_t n, Rng& rng) {
  std::vector<cplx> z(n);
  for (auto& w : z) w = rng.bernoulli(kOnCircleProbability) ? rng.unimodular() : rng.in_unit_disk();
  return z;
}

}  // namespace detail

/// Actual degree n, all zeros in |z| <= 1.
inline Polynomial sample_poly_zeros_in_disk(std::size_t n, std::uint64_t seed) {
  detail::check_sample_degree(n);
  Rng rng(seed);
  auto z = detail::zeros_in_disk(n, rng);
  return from_roots(z, detail::random_leading(rng), n);
}

/// Actual degree n, no zeros in |z| < 1 (moduli in [1, 3]). With `extremal`
/// the result is a z^n + b with |a| = |b| = 1 instead.
inline Polynomial sample_poly_nonvanishing(std::size_t n, std::uint64_t seed, bool extremal = false) {
  detail::check_sample_degree(n);
  Rng rng(seed);
  if (extremal) {
    Polynomial p = Polynomial::zero(n);
    p[n] = rng.unimodular();
    p[0] = rng.unimodular();
    return p;
  }
  std::vector<cplx> z(n);
  for (auto& w : z) {
    const double modulus = rng.bernoulli(kOnCircleProbability) ? 1.0 : rng.uniform(1.0, 3.0);
    w = modulus * rng.unimodular();
  }
  return from_roots(z, detail::random_leading(rng), n);
}

/// An admissible operator with the zeros of u it was built from.
struct OperatorSample {
  BnOperator op;
  std::vector<cplx> u_roots;
};

inline OperatorSample sample_operator_with_roots(std::size_t n, std::uint64_t seed) {
  detail::check_sample_degree(n);
  Rng rng(seed);
  const double nd = static_cast<double>(n);
  auto half_plane_point = [&] { return cplx{rng.uniform(nd / 4.0 - 4.0, nd / 4.0), rng.uniform(-4.0, 4.0)}; };
  long kind = rng.uniform_int(0, 2);
  if (kind == 0 && n == 1) kind = 1;  // C(1,2) = 0: no quadratic u
  const cplx c = rng.unimodular();
  OperatorSample s;
  s.op.n = n;
  if (kind == 0) {
    const cplx w1 = half_plane_point(), w2 = half_plane_point();
    s.op.lambda2 = c / (0.5 * nd * (nd - 1.0));
    s.op.lambda1 = -c * (w1 + w2) / nd;
    s.op.lambda0 = c * w1 * w2;
    s.u_roots = {w1, w2};
  } else if (kind == 1) {
    const cplx w = half_plane_point();
    s.op.lambda1 = c / nd;
    s.op.lambda0 = -c * w;
    s.u_roots = {w};
  } else {
    s.op.lambda0 = c;
  }
  return s;
}

inline BnOperator sample_admissible_operator(std::size_t n, std::uint64_t seed) {
  return sample_operator_with_roots(n, seed).op;
}

inline const std::vector<double>& default_p_grid() {
  static const std::vector<double> grid{0.0, 0.3, 0.5, 1.0, 1.7, 2.0, 4.0, kInf};
  return grid;
}

struct SampledParams {
  PhiParams params;
  cplx delta;
  double p;
};

/// r in [1, 2], R - r in (0.05, 3], alpha, beta, delta in the closed disk,
/// p from the grid.
inline SampledParams sample_params(std::uint64_t seed, const std::vector<double>& p_grid = default_p_grid()) {
  require(!p_grid.empty(), "sample_params: empty p grid");
  Rng rng(seed);
  SampledParams s;
  s.params.r = rng.uniform(1.0, 2.0);
  s.params.R = s.params.r + (3.0 - 2.95 * rng.uniform());
  s.params.alpha = rng.in_unit_disk();
  s.params.beta = rng.in_unit_disk();
  s.delta = rng.in_unit_disk();
  s.p = p_grid[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(p_grid.size()) - 1))];
  return s;
}

inline constexpr std::size_t kDominationGrid = 1024;
inline constexpr double kDominationTol = 1e-10;

/// |P| <= |F| (1 + tol) + tol max|F| on the grid.
inline bool dominated_on_grid(const Polynomial& p, const Polynomial& f) {
  std::vector<double> fa(kDominationGrid), pa(kDominationGrid);
  double scale = 0.0;
  for (std::size_t i = 0; i < kDominationGrid; ++i) {
    const cplx z = unit(kTwoPi * static_cast<double>(i) / kDominationGrid);
    fa[i] = std::abs(f(z));
    pa[i] = std::abs(p(z));
    scale = std::max(scale, fa[i]);
  }
  for (std::size_t i = 0; i < kDominationGrid; ++i)
    if (pa[i] > fa[i] * (1.0 + kDominationTol) + kDominationTol * scale) return false;
  return true;
}

/// F with zeros in the closed disk; P either c F, or c F1 F2* where F2 collects
/// a random subset of F's zeros strictly inside the disk. |c| <= 1.
inline DominatedPair sample_dominated_pair(std::size_t n, std::uint64_t seed) {
  detail::check_sample_degree(n);
  for (std::uint64_t attempt = 0; attempt < 10; ++attempt) {
    Rng rng(attempt == 0 ? seed : derive_seed(seed, attempt));
    auto zeros = detail::zeros_in_disk(n, rng);
    const cplx lead = detail::random_leading(rng);
    const cplx c = rng.in_unit_disk();
    Polynomial f = from_roots(zeros, lead, n);
    Polynomial p = Polynomial::zero(n);
    if (rng.bernoulli(0.5)) {
      p = c * f;
    } else {
      std::vector<cplx> kept, moved;
      for (const auto& w : zeros) {
        if (std::abs(w) < 1.0 - 1e-9 && rng.bernoulli(0.5))
          moved.push_back(w);
        else
          kept.push_back(w);
      }
      const Polynomial f1 = from_roots(kept, lead, kept.size());
      const Polynomial f2 = from_roots(moved, 1.0, moved.size());
      p = c * multiply(f1, conj_reciprocal(f2));
    }
    if (!p.is_zero() && dominated_on_grid(p, f)) return {std::move(p), std::move(f)};
  }
  throw std::runtime_error("sample_dominated_pair: domination check failed after 10 retries (seed " +
                           std::to_string(seed) + ")");
}

}  // namespace bnineq
