#pragma once

/**
 * @file polynomial.hpp
 * @brief Complex polynomials living in a space of fixed ambient degree.
 *
 * A Polynomial stores coefficients a_0..a_n of sum a_j z^j together with the
 * ambient degree n of the space it belongs to. The actual degree may be lower
 * (trailing zeros are kept). Derivative, argument scaling and the
 * conjugate-reciprocal all stay inside the same space, because the operator
 * family and the conjugate-reciprocal depend on n rather than on the actual
 * degree.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bnineq/core.hpp"

namespace bnineq {

class Polynomial {
 public:
  /// The zero polynomial of the space of constants.
  Polynomial() : coeffs_(1, cplx{0.0}) {}

  /// Coefficients in ascending powers; padded with zeros up to ambient_n.
  Polynomial(std::vector<cplx> coeffs, std::size_t ambient_n) : coeffs_(std::move(coeffs)) {
    require(coeffs_.size() <= ambient_n + 1,
            "Polynomial: " + std::to_string(coeffs_.size()) + " coefficients exceed ambient degree " +
                std::to_string(ambient_n));
    coeffs_.resize(ambient_n + 1, cplx{0.0});
  }

  /// Ambient degree taken from the coefficient count.
  explicit Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx{0.0});
  }

  static Polynomial zero(std::size_t ambient_n) { return Polynomial({}, ambient_n); }

  static Polynomial monomial(cplx a, std::size_t power, std::size_t ambient_n) {
    require(power <= ambient_n, "Polynomial::monomial: power exceeds ambient degree");
    Polynomial p = zero(ambient_n);
    p.coeffs_[power] = a;
    return p;
  }

  std::size_t ambient_degree() const { return coeffs_.size() - 1; }

  /// Highest index with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const {
    for (std::size_t j = coeffs_.size(); j-- > 0;)
      if (coeffs_[j] != cplx{0.0}) return static_cast<int>(j);
    return -1;
  }

  bool is_zero() const { return degree() < 0; }

  std::span<const cplx> coeffs() const { return coeffs_; }
  cplx operator[](std::size_t j) const { return coeffs_[j]; }
  cplx& operator[](std::size_t j) { return coeffs_[j]; }

  /// Coefficient of the actual degree (0 for the zero polynomial).
  cplx leading() const {
    int d = degree();
    return d < 0 ? cplx{0.0} : coeffs_[static_cast<std::size_t>(d)];
  }

  double max_coeff_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  /// Horner evaluation.
  cplx operator()(cplx z) const {
    cplx acc{0.0};
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * z + coeffs_[j];
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    check_same_space(rhs, "addition");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    check_same_space(rhs, "subtraction");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
  }

  Polynomial& operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, cplx s) { return a *= s; }
  friend Polynomial operator*(cplx s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_same_space(const Polynomial& rhs, const char* op) const {
    require(rhs.ambient_degree() == ambient_degree(),
            std::string("Polynomial ") + op + ": ambient degree mismatch (" +
                std::to_string(ambient_degree()) + " vs " + std::to_string(rhs.ambient_degree()) + ")");
  }

  std::vector<cplx> coeffs_;
};

/// A point k e^{i theta} on a circle centred at the origin.
struct CirclePoint {
  double radius;
  double angle;

  CirclePoint(double k, double theta) : radius(k), angle(theta) {
    require(k > 0.0, "CirclePoint: radius must be positive");
  }

  cplx z() const { return radius * unit(angle); }
};

inline cplx eval(const Polynomial& p, cplx z) { return p(z); }

inline Polynomial derivative(const Polynomial& p) {
  Polynomial d = Polynomial::zero(p.ambient_degree());
  for (std::size_t j = 0; j + 1 <= p.ambient_degree(); ++j)
    d[j] = static_cast<double>(j + 1) * p[j + 1];
  return d;
}

/// P(cz).
inline Polynomial scale_arg(const Polynomial& p, cplx c) {
  Polynomial out = p;
  cplx power{1.0};
  for (std::size_t j = 0; j <= p.ambient_degree(); ++j) {
    out[j] *= power;
    power *= c;
  }
  return out;
}

/// z^n conj(P(1/conj z)) at the ambient degree n: coefficient j is conj(a_{n-j}).
inline Polynomial conj_reciprocal(const Polynomial& p) {
  const std::size_t n = p.ambient_degree();
  Polynomial out = Polynomial::zero(n);
  for (std::size_t j = 0; j <= n; ++j) out[j] = std::conj(p[n - j]);
  return out;
}

/// z P(z); the caller guarantees the top coefficient is zero.
inline Polynomial multiply_by_z(const Polynomial& p) {
  const std::size_t n = p.ambient_degree();
  require(n == 0 ? p[0] == cplx{0.0} : p[n] == cplx{0.0},
          "multiply_by_z: result leaves the ambient space");
  Polynomial out = Polynomial::zero(n);
  for (std::size_t j = 1; j <= n; ++j) out[j] = p[j - 1];
  return out;
}

/// Product; ambient degree is the sum of the factors' ambient degrees.
inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out = Polynomial::zero(a.ambient_degree() + b.ambient_degree());
  for (std::size_t i = 0; i <= a.ambient_degree(); ++i)
    for (std::size_t j = 0; j <= b.ambient_degree(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Same coefficients in a larger space.
inline Polynomial embed(const Polynomial& p, std::size_t ambient_n) {
  require(p.degree() <= static_cast<int>(ambient_n), "embed: degree exceeds target ambient degree");
  std::vector<cplx> c(p.coeffs().begin(), p.coeffs().end());
  c.resize(ambient_n + 1, cplx{0.0});
  return Polynomial(std::move(c), ambient_n);
}

/// leading * prod (z - z_k), embedded in the space of degree ambient_n.
inline Polynomial from_roots(std::span<const cplx> zeros, cplx leading, std::size_t ambient_n) {
  require(leading != cplx{0.0}, "from_roots: leading coefficient must be nonzero");
  require(zeros.size() <= ambient_n, "from_roots: " + std::to_string(zeros.size()) +
                                         " zeros do not fit ambient degree " + std::to_string(ambient_n));
  std::vector<cplx> c{leading};
  for (const auto& w : zeros) {
    c.push_back(cplx{0.0});
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - w * c[j];
    c[0] = -w * c[0];
  }
  return Polynomial(std::move(c), ambient_n);
}

}  // namespace bnineq
