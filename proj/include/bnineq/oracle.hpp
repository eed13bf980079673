#pragma once

// Cross-checks of the norm machinery against independent closed forms:
// Wallis, Parseval, Jensen, degree collapse and the star modulus identity.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bnineq/circle_norms.hpp"
#include "bnineq/rng.hpp"
#include "bnineq/sampling.hpp"

namespace bnineq {

struct OracleLine {
  std::string name;
  double value;
  double reference;
  double discrepancy;  ///< relative unless the name says otherwise
  double tolerance;
  bool pass;
};

namespace detail {

inline OracleLine oracle_line(std::string name, double value, double reference, double tol) {
  const double d = std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
  return {std::move(name), value, reference, d, tol, d <= tol};
}

/// Random polynomial of degree n whose zeros keep at least `gap` from the circle.
inline Polynomial random_poly_off_circle(std::size_t n, Rng& rng, double gap) {
  std::vector<cplx> z(n);
  for (auto& w : z) {
    const double m = rng.bernoulli(0.5) ? rng.uniform(0.1, 1.0 - gap) : rng.uniform(1.0 + gap, 3.0);
    w = m * rng.unimodular();
  }
  return from_roots(z, rng.uniform(0.5, 2.0) * rng.unimodular(), n);
}

}  // namespace detail

inline std::vector<OracleLine> oracle_battery(std::uint64_t seed = 0) {
  std::vector<OracleLine> out;
  for (double p : {0.5, 1.0, 2.0, 3.0, 4.0})
    out.push_back(detail::oracle_line("wallis ||1+z||_" + std::to_string(p).substr(0, 3), one_plus_z_norm(p).value,
                                      one_plus_z_norm_closed_form(p), 1e-9));
  out.push_back(detail::oracle_line("parseval ||1+z||_2", lp_norm(Polynomial({1.0, 1.0}), 2.0).value,
                                    std::sqrt(2.0), 1e-10));
  out.push_back(detail::oracle_line("jensen ||z+2||_0", lp_norm(Polynomial({2.0, 1.0}), 0.0).value, 2.0, 1e-10));
  out.push_back(detail::oracle_line("jensen ||1+z||_0", lp_norm(Polynomial({1.0, 1.0}), 0.0).value, 1.0, 1e-10));
  out.push_back(detail::oracle_line("max ||1+z||_inf", lp_norm(Polynomial({1.0, 1.0}), kInf).value, 2.0, 1e-10));

  Rng rng(derive_seed(seed, 11));
  {
    double worst = 0.0;
    OracleLine w{};
    for (int i = 0; i < 50; ++i) {
      const auto n = static_cast<std::size_t>(rng.uniform_int(1, 12));
      const Polynomial P = detail::random_poly_off_circle(n, rng, 1e-3);
      const auto line = detail::oracle_line("", mahler_measure_quadrature(P).value, mahler_measure_jensen(P), 1e-4);
      if (line.discrepancy >= worst) worst = line.discrepancy, w = line;
    }
    w.name = "jensen vs quadrature (50 random, worst)";
    out.push_back(w);
  }
  {
    double worst = 0.0;
    OracleLine w{};
    for (int i = 0; i < 20; ++i) {
      const auto n = static_cast<std::size_t>(rng.uniform_int(1, 16));
      std::vector<cplx> c(n + 1);
      double sum = 0.0;
      for (auto& a : c) {
        a = {rng.normal(), rng.normal()};
        sum += std::norm(a);
      }
      const Polynomial P(c, n);
      const double q = lp_norm(P, 2.0).value;
      const auto line = detail::oracle_line("", q * q, sum, 1e-10);
      if (line.discrepancy >= worst) worst = line.discrepancy, w = line;
    }
    w.name = "parseval (20 random, worst)";
    out.push_back(w);
  }
  {
    double worst = 0.0;
    OracleLine w{};
    const std::vector<double> grid{0.0, 0.3, 0.5, 1.0, 1.7, 2.0, 4.0};
    for (int i = 0; i < 50; ++i) {
      const cplx a = rng.uniform(0.1, 3.0) * rng.unimodular();
      const cplx b = rng.uniform(0.1, 3.0) * rng.unimodular();
      const auto n = static_cast<std::size_t>(rng.uniform_int(1, 8));
      const double p = grid[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(grid.size()) - 1))];
      Polynomial full = Polynomial::zero(n);
      full[0] = b;
      full[n] = a;
      const auto line =
          detail::oracle_line("", lp_norm(full, p).value, lp_norm(Polynomial({b, a}), p).value, 1e-8);
      if (line.discrepancy >= worst) worst = line.discrepancy, w = line;
    }
    w.name = "degree collapse ||Az^n+B|| vs ||Az+B|| (50 random, worst)";
    out.push_back(w);
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto n = static_cast<std::size_t>(rng.uniform_int(1, 16));
      const Polynomial P = sample_poly_nonvanishing(n, rng.next());
      const Polynomial S = conj_reciprocal(P);
      double scale = 0.0, diff = 0.0;
      for (int k = 0; k < 512; ++k) {
        const cplx z = unit(kTwoPi * k / 512.0);
        scale = std::max(scale, std::abs(P(z)));
        diff = std::max(diff, std::abs(std::abs(S(z)) - std::abs(P(z))));
      }
      worst = std::max(worst, diff / scale);
    }
    out.push_back({"star modulus |P*| = |P| on circle (20 random, worst scaled)", worst, 0.0, worst, 1e-11,
                   worst <= 1e-11});
  }
  return out;
}

}  // namespace bnineq
