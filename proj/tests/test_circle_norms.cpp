#include <gtest/gtest.h>

#include "bnineq/bnineq.hpp"

using namespace bnineq;
using namespace std::complex_literals;

TEST(LpNorm, UnimodularMonomial) {
  for (double p : {0.0, 0.3, 1.0, 2.0, 4.5, kInf})
    EXPECT_NEAR(lp_norm(Polynomial::monomial(unit(0.7), 6, 6), p).value, 1.0, 1e-12) << "p=" << p;
}

TEST(LpNorm, BinomialGeometricMean) {
  // Jensen: the geometric mean of a z^n + b is max(|a|, |b|)
  for (auto [a, b] : {std::pair<cplx, cplx>{2.0, 1.0}, {0.5i, 3.0}, {1.0, -1.0}}) {
    Polynomial P = Polynomial::monomial(a, 3, 3);
    P[0] = b;
    EXPECT_NEAR(lp_norm(P, 0.0).value, std::max(std::abs(a), std::abs(b)), 1e-12);
  }
}

TEST(LpNorm, OnePlusZ) {
  const Polynomial P({1.0, 1.0});
  EXPECT_NEAR(lp_norm(P, 2.0).value, std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(lp_norm(P, kInf).value, 2.0, 1e-12);
  EXPECT_NEAR(lp_norm(P, 0.0).value, 1.0, 1e-12);
  EXPECT_NEAR(one_plus_z_norm(2.0).value, std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(one_plus_z_norm_closed_form(2.0), std::sqrt(2.0), 1e-14);
}

TEST(LpNorm, Errors) {
  EXPECT_THROW(lp_norm(Polynomial::zero(2), 2.0), PreconditionError);
  EXPECT_THROW(lp_norm(Polynomial({1.0, 1.0}), -1.0), PreconditionError);
  EXPECT_THROW(one_plus_z_norm(0.0), PreconditionError);
}

TEST(LpNorm, WallisClosedForm) {
  for (double p : {0.5, 1.0, 2.0, 3.0, 4.0, 0.1, 7.3})
    EXPECT_NEAR(one_plus_z_norm(p).value / one_plus_z_norm_closed_form(p), 1.0, 1e-9) << "p=" << p;
}

TEST(LpNorm, MonotoneInPAndBelowSup) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 16));
    const Polynomial P = sample_poly_zeros_in_disk(n, rng.next());
    double prev = 0.0;
    for (double p : {0.0, 0.5, 1.0, 2.0, 4.0, 16.0}) {
      const double v = lp_norm(P, p).value;
      EXPECT_GE(v, prev * (1.0 - 1e-10));
      prev = v;
    }
    const double sup = lp_norm(P, kInf).value;
    EXPECT_LE(prev, sup * (1.0 + 1e-10));
    EXPECT_LE(sup, 1.5 * prev);
  }
}

TEST(LpNorm, NearCircleZeroFractionalP) {
  // zero at distance 1e-7 from the circle: the integrand has a cusp
  const Polynomial P = from_roots(std::vector<cplx>{(1.0 + 1e-7) * unit(1.0), 0.3}, 1.0, 2);
  const Polynomial Q = from_roots(std::vector<cplx>{unit(1.0), 0.3}, 1.0, 2);
  const NormValue a = lp_norm(P, 0.5), b = lp_norm(Q, 0.5);
  EXPECT_NEAR(a.value, b.value, 1e-6);
  EXPECT_LT(a.err_estimate, 1e-8);
}

TEST(BinomialNorm, Examples) {
  EXPECT_NEAR(binomial_norm(0.0, 2.0 - 1i, 1.5).value, std::abs(2.0 - 1i), 1e-14);
  EXPECT_NEAR(binomial_norm(1.0, 1.0, 2.0).value, std::sqrt(2.0), 1e-14);
  EXPECT_THROW(binomial_norm(0.0, 0.0, 2.0), PreconditionError);
}

TEST(BinomialNorm, DegreeCollapse) {
  Rng rng(23);
  const auto& grid = default_p_grid();
  for (int t = 0; t < 50; ++t) {
    const cplx a = rng.uniform(0.1, 3.0) * rng.unimodular();
    const cplx b = rng.uniform(0.1, 3.0) * rng.unimodular();
    const auto n = static_cast<unsigned>(rng.uniform_int(1, 8));
    const double p = grid[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(grid.size()) - 1))];
    Polynomial full = Polynomial::monomial(a, n, n);
    full[0] = b;
    const double direct = lp_norm(full, p).value;
    EXPECT_NEAR(binomial_norm(a, b, p, n).value / direct, 1.0, 1e-8) << "p=" << p << " n=" << n;
  }
}

TEST(Jensen, MatchesQuadratureAwayFromCircle) {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 12));
    const Polynomial P = detail::random_poly_off_circle(n, rng, 1e-3);
    EXPECT_NEAR(mahler_measure_quadrature(P).value / mahler_measure_jensen(P), 1.0, 1e-4);
  }
}

TEST(OracleBattery, AllLinesPass) {
  for (const auto& l : oracle_battery(0)) EXPECT_TRUE(l.pass) << l.name << " discrepancy " << l.discrepancy;
}

TEST(Quadrature, TrapezoidSpectralOnTrigPolynomial) {
  // exact for trigonometric polynomials of degree below the node count
  auto f = [](double t) { return 1.0 + std::cos(5.0 * t) + std::sin(3.0 * t); };
  const auto r = periodic_mean(f);
  EXPECT_NEAR(r.mean, 1.0, 1e-14);
}
