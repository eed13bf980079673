#pragma once

/**
 * @file bn_operator.hpp
 * @brief The operator family
 *
 *     B[P](z) = l0 P(z) + l1 (n z / 2) P'(z) + l2 (n z / 2)^2 P''(z) / 2
 *
 * acting on the space of polynomials of degree at most n, together with the
 * mixing factor phi_n(R, r, alpha, beta), the dilation combinations
 * B[P(R.)] + phi B[P(r.)] used throughout, and the coefficient multiplier
 * operators C_gamma.
 *
 * A triple is admissible when every zero of
 *     u(z) = l0 + C(n,1) l1 z + C(n,2) l2 z^2
 * satisfies |z| <= |z - n/2|. Squaring both sides, this is Re z <= n/4.
 */

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bnineq/polynomial.hpp"
#include "bnineq/roots.hpp"

namespace bnineq {

struct BnOperator {
  cplx lambda0{1.0};
  cplx lambda1{0.0};
  cplx lambda2{0.0};
  std::size_t n = 1;

  static BnOperator identity(std::size_t n) { return {1.0, 0.0, 0.0, n}; }

  friend bool operator==(const BnOperator&, const BnOperator&) = default;
};

struct PhiParams {
  double R = 2.0;
  double r = 1.0;
  cplx alpha{0.0};
  cplx beta{0.0};
};

inline constexpr double kAdmissibleTol = 1e-10;
inline constexpr double kUnitDiskTol = 1e-12;

/// R > r >= 1, |alpha| <= 1, |beta| <= 1. With allow_equal_radii, R >= r.
inline void validate(const PhiParams& q, bool allow_equal_radii = false) {
  require(q.r >= 1.0, "PhiParams: need r >= 1 (got r = " + std::to_string(q.r) + ")");
  require(allow_equal_radii ? q.R >= q.r : q.R > q.r,
          std::string("PhiParams: need R ") + (allow_equal_radii ? ">=" : ">") + " r (got R = " +
              std::to_string(q.R) + ", r = " + std::to_string(q.r) + ")");
  require(std::abs(q.alpha) <= 1.0 + kUnitDiskTol, "PhiParams: need |alpha| <= 1");
  require(std::abs(q.beta) <= 1.0 + kUnitDiskTol, "PhiParams: need |beta| <= 1");
}

inline Polynomial u_polynomial(const BnOperator& op) {
  const double n = static_cast<double>(op.n);
  return Polynomial({op.lambda0, n * op.lambda1, 0.5 * n * (n - 1.0) * op.lambda2}, 2);
}

inline bool is_admissible(const BnOperator& op) {
  require(op.lambda0 != cplx{0.0} || op.lambda1 != cplx{0.0} || op.lambda2 != cplx{0.0},
          "is_admissible: all-zero triple");
  const Polynomial u = u_polynomial(op);
  if (u.is_zero()) return false;  // n = 1 with only lambda2 set: the zero map
  const double bound = static_cast<double>(op.n) / 4.0 + kAdmissibleTol;
  for (const auto& z : roots(u))
    if (z.real() > bound) return false;
  return true;
}

inline void validate(const BnOperator& op) {
  require(op.n >= 1, "BnOperator: ambient degree must be positive");
  require(is_admissible(op), "BnOperator: triple is not admissible (a zero of u has Re z > n/4)");
}

/// B[z^n] = Lambda_n z^n.
inline cplx capital_lambda(const BnOperator& op) {
  const double n = static_cast<double>(op.n);
  return op.lambda0 + op.lambda1 * (n * n / 2.0) + op.lambda2 * (n * n * n * (n - 1.0) / 8.0);
}

inline Polynomial apply(const BnOperator& op, const Polynomial& p) {
  require(p.ambient_degree() == op.n, "apply: polynomial ambient degree " + std::to_string(p.ambient_degree()) +
                                          " does not match operator degree " + std::to_string(op.n));
  const double half_n = static_cast<double>(op.n) / 2.0;
  const Polynomial d1 = derivative(p);
  const Polynomial d2 = derivative(d1);
  // (nz/2) P' and (nz/2)^2 P''/2 stay of degree <= n
  Polynomial out = op.lambda0 * p;
  out += (op.lambda1 * half_n) * multiply_by_z(d1);
  out += (op.lambda2 * half_n * half_n * 0.5) * multiply_by_z(multiply_by_z(d2));
  return out;
}

/// beta {((R+1)/(r+1))^n - |alpha|} - alpha.
inline cplx phi_n(const PhiParams& q, std::size_t n) {
  const double k = std::pow((q.R + 1.0) / (q.r + 1.0), static_cast<double>(n));
  return q.beta * (k - std::abs(q.alpha)) - q.alpha;
}

/// B[P(R.)] + phi B[P(r.)] for an explicit mixing factor.
inline Polynomial dilation_combination(const BnOperator& op, const Polynomial& p, double big_r, double small_r,
                                       cplx phi) {
  return apply(op, scale_arg(p, big_r)) + phi * apply(op, scale_arg(p, small_r));
}

inline Polynomial lhs_combination(const BnOperator& op, const Polynomial& p, const PhiParams& q) {
  return dilation_combination(op, p, q.R, q.r, phi_n(q, op.n));
}

/// (B[P*(R.)] + phi B[P*(r.)])*, which equals
/// B[P*(R.)]* + phi_n(R, r, conj alpha, conj beta) B[P*(r.)]*.
inline Polynomial starred_combination(const BnOperator& op, const Polynomial& p, const PhiParams& q) {
  return conj_reciprocal(lhs_combination(op, conj_reciprocal(p), q));
}

/// (R^n + phi r^n) Lambda_n and (1 + phi) lambda0: the coefficients of the
/// extremal binomial that bounds the combination.
struct BinomialBound {
  cplx lead;
  cplx constant;
};

inline BinomialBound binomial_bound(const BnOperator& op, double big_r, double small_r, cplx phi) {
  const double n = static_cast<double>(op.n);
  return {(std::pow(big_r, n) + phi * std::pow(small_r, n)) * capital_lambda(op), (1.0 + phi) * op.lambda0};
}

/// |R^n + phi r^n| |Lambda_n| - |1 + phi| |lambda0|.
inline double m_coefficient(const BnOperator& op, double big_r, double small_r, cplx phi) {
  auto b = binomial_bound(op, big_r, small_r, phi);
  return std::abs(b.lead) - std::abs(b.constant);
}

// ---------------------------------------------------------------------------
// Coefficient multipliers C_gamma P = sum gamma_j a_j z^j

enum class GammaFamily {
  custom,             ///< no zero-location preservation is certified
  identity,           ///< gamma_j = 1
  dilation,           ///< gamma_j = delta^j, |delta| <= 1: keeps "no zeros in |z| < 1"
  reversed_dilation,  ///< gamma_j = delta^(n-j), |delta| <= 1: keeps "all zeros in |z| <= 1"
};

inline const char* to_string(GammaFamily f) {
  switch (f) {
    case GammaFamily::custom: return "custom";
    case GammaFamily::identity: return "identity";
    case GammaFamily::dilation: return "dilation";
    case GammaFamily::reversed_dilation: return "reversed_dilation";
  }
  return "?";
}

struct GammaOperator {
  std::vector<cplx> gamma;
  GammaFamily family = GammaFamily::custom;
  cplx delta{1.0};

  std::size_t ambient_degree() const { return gamma.size() - 1; }

  static GammaOperator custom(std::vector<cplx> g) {
    require(!g.empty(), "GammaOperator: empty multiplier sequence");
    return {std::move(g), GammaFamily::custom, 1.0};
  }

  static GammaOperator identity(std::size_t n) { return {std::vector<cplx>(n + 1, 1.0), GammaFamily::identity, 1.0}; }

  static GammaOperator dilation(cplx delta, std::size_t n) {
    require(std::abs(delta) <= 1.0 + kUnitDiskTol, "GammaOperator::dilation: need |delta| <= 1");
    std::vector<cplx> g(n + 1);
    cplx power{1.0};
    for (auto& x : g) {
      x = power;
      power *= delta;
    }
    return {std::move(g), GammaFamily::dilation, delta};
  }

  static GammaOperator reversed_dilation(cplx delta, std::size_t n) {
    auto op = dilation(delta, n);
    std::reverse(op.gamma.begin(), op.gamma.end());
    op.family = GammaFamily::reversed_dilation;
    return op;
  }
};

inline Polynomial c_gamma_apply(const GammaOperator& g, const Polynomial& p) {
  require(g.gamma.size() == p.ambient_degree() + 1, "c_gamma_apply: multiplier length " +
                                                        std::to_string(g.gamma.size()) +
                                                        " does not match ambient degree " +
                                                        std::to_string(p.ambient_degree()));
  Polynomial out = p;
  for (std::size_t j = 0; j < g.gamma.size(); ++j) out[j] *= g.gamma[j];
  return out;
}

/// c(gamma, n) = max(|gamma_0|, |gamma_n|).
inline double c_gamma_bound(const GammaOperator& g) {
  return std::max(std::abs(g.gamma.front()), std::abs(g.gamma.back()));
}

}  // namespace bnineq
