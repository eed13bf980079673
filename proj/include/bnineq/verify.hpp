#pragma once

/**
 * @file verify.hpp
 * @brief One checker per inequality. Each computes the left and right sides
 *        as displayed and returns a SlackReport.
 *
 * Norm inequalities pass when rel_slack >= -(base + err_factor * norm_err),
 * where norm_err sums the relative error estimates of every norm involved.
 * Pointwise inequalities are sampled on circle grids and pass when the
 * smallest margin rhs - lhs is >= -pointwise * scale, scale being the
 * largest value of either side over the grid; lhs and rhs are then the
 * values at the worst grid point.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnineq/bn_operator.hpp"
#include "bnineq/circle_extrema.hpp"
#include "bnineq/circle_norms.hpp"
#include "bnineq/sampling.hpp"
#include "bnineq/serialize.hpp"

namespace bnineq {

struct Tolerances {
  double base = 1e-7;
  double err_factor = 10.0;
  double pointwise = 1e-9;
  double root_modulus = 1e-8;
};

struct SlackReport {
  std::string statement_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_slack = 0.0;
  double norm_err = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  json instance = json::object();
  json extra = json::object();
};

inline double relative_slack(double lhs, double rhs) { return (rhs - lhs) / std::max(rhs, 1e-300); }

inline json to_json(const SlackReport& r) {
  json j = {{"statement_id", r.statement_id},
            {"seed", r.seed},
            {"instance", r.instance},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"rel_slack", r.rel_slack},
            {"norm_err", r.norm_err},
            {"pass", r.pass}};
  if (!r.extra.empty()) j["extra"] = r.extra;
  return j;
}

/// Everything a checker may need; unused fields are ignored.
struct CheckInput {
  InequalityInstance inst;
  std::optional<Polynomial> F;            // l3
  double eta = 0.0;                       // l6
  std::optional<GammaOperator> gamma;     // arestov
  std::array<double, 4> abc{0, 0, 0, 0};  // A, B, C, gamma for abc
};

namespace detail {

inline void require_nonvanishing(const Polynomial& P, const std::string& who) {
  require(!P.is_zero(), who + ": zero polynomial");
  const auto loc = zero_location(P);
  require(no_zeros_in_open_disk(loc),
          who + ": P must not vanish in |z| < 1 (zero location " + to_string(loc) + ")");
}

inline void require_zeros_in_disk(const Polynomial& P, const std::string& who) {
  require(!P.is_zero(), who + ": zero polynomial");
  const auto loc = zero_location(P);
  require(zeros_in_closed_disk(loc), who + ": P must have all zeros in |z| <= 1 with degree n (zero location " +
                                         to_string(loc) + ")");
}

inline void require_same_space(const Polynomial& P, const BnOperator& op, const std::string& who) {
  require(P.ambient_degree() == op.n, who + ": P has ambient degree " + std::to_string(P.ambient_degree()) +
                                          " but the operator has n = " + std::to_string(op.n));
}

inline void require_finite_p(double p, const std::string& who) {
  require(p >= 0.0 && std::isfinite(p), who + ": p must be finite and >= 0");
}

inline void require_positive_p(double p, const std::string& who) {
  require(p > 0.0 && std::isfinite(p), who + ": p must be finite and > 0");
}

inline void require_delta(cplx delta, const std::string& who) {
  require(std::abs(delta) <= 1.0 + kUnitDiskTol, who + ": need |delta| <= 1");
}

inline NormValue norm_or_zero(const Polynomial& q, double p) {
  return q.is_zero() ? NormValue{0.0, p, 0.0} : lp_norm(q, p);
}

/// ||1 + z||_p, memoised per thread (p = 0 gives the Mahler measure 1).
inline NormValue unit_binomial_norm(double p) {
  thread_local std::map<double, NormValue> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  NormValue v = p == 0.0 ? lp_norm(Polynomial({1.0, 1.0}), 0.0) : one_plus_z_norm(p);
  cache.emplace(p, v);
  return v;
}

inline SlackReport integral_report(std::string id, double lhs, double rhs, double norm_err, const Tolerances& tol) {
  SlackReport r;
  r.statement_id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.norm_err = norm_err;
  r.rel_slack = relative_slack(lhs, rhs);
  r.pass = r.rel_slack >= -(tol.base + tol.err_factor * norm_err);
  return r;
}

/// ||combo||_p against ||A z + B||_p / ||1 + z||_p * ||P||_p.
inline SlackReport bound_report(std::string id, const Polynomial& combo, cplx a, cplx b, const Polynomial& P,
                                double p, const Tolerances& tol) {
  const NormValue l = norm_or_zero(combo, p);
  const NormValue num = binomial_norm(a, b, p);
  const NormValue den = unit_binomial_norm(p);
  const NormValue pn = lp_norm(P, p);
  const double rhs = num.value / den.value * pn.value;
  const double err = l.rel_err() + num.rel_err() + den.rel_err() + pn.rel_err();
  return integral_report(std::move(id), l.value, rhs, err, tol);
}

struct PointwiseResult {
  double lhs = 0.0, rhs = 0.0;
  double margin = kInf;
  double scale = 0.0;
  double radius = 1.0, angle = 0.0;
  std::size_t grid = 0;
};

inline constexpr std::size_t kPointwiseGrid = 1024;

/// Smallest rhs - lhs over circle grids at the given radii. `sides(z)`
/// returns {lhs, rhs} at z. The grid is doubled once when the smallest
/// margin is within ten times the tolerance.
template <class F>
PointwiseResult pointwise_min(F&& sides, const std::vector<double>& radii, double tol) {
  PointwiseResult res;
  for (std::size_t grid = kPointwiseGrid;; grid *= 2) {
    res = PointwiseResult{};
    res.grid = grid;
    for (double k : radii) {
      for (std::size_t i = 0; i < grid; ++i) {
        const double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(grid);
        const auto [l, r] = sides(k * unit(theta));
        res.scale = std::max({res.scale, l, r});
        if (r - l < res.margin) {
          res.margin = r - l;
          res.lhs = l;
          res.rhs = r;
          res.radius = k;
          res.angle = theta;
        }
      }
    }
    if (res.margin >= 10.0 * tol * res.scale || grid > kPointwiseGrid) return res;
  }
}

inline SlackReport pointwise_report(std::string id, const PointwiseResult& pr, const Tolerances& tol) {
  SlackReport r;
  r.statement_id = std::move(id);
  r.lhs = pr.lhs;
  r.rhs = pr.rhs;
  r.rel_slack = relative_slack(pr.lhs, pr.rhs);
  r.norm_err = 0.0;
  const double scaled = pr.scale > 0.0 ? pr.margin / pr.scale : 0.0;
  r.pass = scaled >= -tol.pointwise;
  r.extra = {{"margin", pr.margin}, {"scale", pr.scale},  {"scaled_margin", scaled},
             {"radius", pr.radius}, {"angle", pr.angle}, {"grid", pr.grid}};
  return r;
}

inline void check_theorem_inputs(const InequalityInstance& inst, const std::string& who) {
  validate(inst.params);
  validate(inst.op);
  require_same_space(inst.P, inst.op, who);
  require_finite_p(inst.p, who);
  require_delta(inst.delta, who);
  require_nonvanishing(inst.P, who);
}

inline void check_lemma_inputs(const InequalityInstance& inst, const std::string& who) {
  validate(inst.params);
  validate(inst.op);
  require_same_space(inst.P, inst.op, who);
}

inline SlackReport stamp(SlackReport r, const InequalityInstance& inst) {
  r.seed = inst.seed;
  r.instance = to_json(inst);
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Norm inequalities

inline SlackReport check_theorem1(const InequalityInstance& inst, const Tolerances& tol = {}) {
  detail::check_theorem_inputs(inst, "t1");
  const auto& q = inst.params;
  const cplx phi = phi_n(q, inst.op.n);
  const Polynomial combo = dilation_combination(inst.op, inst.P, q.R, q.r, phi);
  const auto bb = binomial_bound(inst.op, q.R, q.r, phi);
  return detail::stamp(detail::bound_report("t1", combo, bb.lead, bb.constant, inst.P, inst.p, tol), inst);
}

inline SlackReport check_theorem2(const InequalityInstance& inst, const Tolerances& tol = {}) {
  detail::check_theorem_inputs(inst, "t2");
  const auto& q = inst.params;
  const cplx phi = phi_n(q, inst.op.n);
  Polynomial combo = dilation_combination(inst.op, inst.P, q.R, q.r, phi);
  const double m = min_modulus(inst.P, 1.0);
  const double mc = m_coefficient(inst.op, q.R, q.r, phi);
  combo[0] += inst.delta * mc * m / 2.0;
  const auto bb = binomial_bound(inst.op, q.R, q.r, phi);
  auto r = detail::stamp(detail::bound_report("t2", combo, bb.lead, bb.constant, inst.P, inst.p, tol), inst);
  r.extra = {{"m", m}, {"m_coefficient", mc}};
  return r;
}

/// Theorem 1 with beta = 0, written with -alpha as displayed.
inline SlackReport check_corollary1(InequalityInstance inst, const Tolerances& tol = {}) {
  inst.params.beta = 0.0;
  detail::check_theorem_inputs(inst, "c1");
  const auto& q = inst.params;
  const auto& op = inst.op;
  const double n = static_cast<double>(op.n);
  const Polynomial combo = apply(op, scale_arg(inst.P, q.R)) - q.alpha * apply(op, scale_arg(inst.P, q.r));
  const cplx lam = capital_lambda(op);
  const cplx a = (std::pow(q.R, n) - q.alpha * std::pow(q.r, n)) * lam;
  const cplx b = (1.0 - q.alpha) * op.lambda0;
  return detail::stamp(detail::bound_report("c1", combo, a, b, inst.P, inst.p, tol), inst);
}

/// Theorem 2 for the identity operator, written as displayed (the
/// m-coefficient is |R^n + phi r^n| - |1 + phi|).
inline SlackReport check_corollary2(InequalityInstance inst, const Tolerances& tol = {}) {
  inst.op = BnOperator::identity(inst.P.ambient_degree());
  detail::check_theorem_inputs(inst, "c2");
  const auto& q = inst.params;
  const double n = static_cast<double>(inst.op.n);
  const cplx phi = phi_n(q, inst.op.n);
  Polynomial combo = scale_arg(inst.P, q.R) + phi * scale_arg(inst.P, q.r);
  const cplx a = std::pow(q.R, n) + phi * std::pow(q.r, n);
  const cplx b = 1.0 + phi;
  const double m = min_modulus(inst.P, 1.0);
  const double mc = std::abs(a) - std::abs(b);
  combo[0] += inst.delta * mc * m / 2.0;
  auto r = detail::stamp(detail::bound_report("c2", combo, a, b, inst.P, inst.p, tol), inst);
  r.extra = {{"m", m}, {"m_coefficient", mc}};
  return r;
}

/// ||B[P(R.)]||_p <= ||R^n Lambda_n z + lambda0||_p / ||1 + z||_p ||P||_p.
inline SlackReport check_theorem_a(InequalityInstance inst, const Tolerances& tol = {}) {
  inst.params.alpha = 0.0;
  inst.params.beta = 0.0;
  detail::check_theorem_inputs(inst, "ta");
  const auto& op = inst.op;
  const double rn = std::pow(inst.params.R, static_cast<double>(op.n));
  const Polynomial combo = apply(op, scale_arg(inst.P, inst.params.R));
  return detail::stamp(
      detail::bound_report("ta", combo, rn * capital_lambda(op), op.lambda0, inst.P, inst.p, tol), inst);
}

/// ||B[P(R.)] - alpha B[P]||_p <= ||(R^n - alpha) Lambda_n z + (1 - alpha) lambda0||_p / ||1 + z||_p ||P||_p.
inline SlackReport check_theorem_b(InequalityInstance inst, const Tolerances& tol = {}) {
  inst.params.r = 1.0;
  inst.params.beta = 0.0;
  detail::check_theorem_inputs(inst, "tb");
  const auto& op = inst.op;
  const cplx alpha = inst.params.alpha;
  const double rn = std::pow(inst.params.R, static_cast<double>(op.n));
  const Polynomial combo = apply(op, scale_arg(inst.P, inst.params.R)) - alpha * apply(op, inst.P);
  const cplx a = (rn - alpha) * capital_lambda(op);
  const cplx b = (1.0 - alpha) * op.lambda0;
  return detail::stamp(detail::bound_report("tb", combo, a, b, inst.P, inst.p, tol), inst);
}

// ---------------------------------------------------------------------------
// Lemmas

/// |P(Rz)| >= ((R+1)/(r+1))^n |P(rz)| on |z| = 1; R = r is allowed.
inline SlackReport check_lemma1(const InequalityInstance& inst, const Tolerances& tol = {}) {
  validate(inst.params, /*allow_equal_radii=*/true);
  detail::require_zeros_in_disk(inst.P, "l1");
  const auto& q = inst.params;
  const double k = std::pow((q.R + 1.0) / (q.r + 1.0), static_cast<double>(inst.P.ambient_degree()));
  const auto& P = inst.P;
  auto pr = detail::pointwise_min(
      [&](cplx z) { return std::pair{k * std::abs(P(q.r * z)), std::abs(P(q.R * z))}; }, {1.0}, tol.pointwise);
  auto r = detail::stamp(detail::pointwise_report("l1", pr, tol), inst);
  if (q.R > q.r) r.extra["strict"] = pr.margin > 0.0;
  return r;
}

/// Zeros of B[P] stay in |z| <= 1 when those of P do.
inline SlackReport check_lemma2(const InequalityInstance& inst, const Tolerances& tol = {}) {
  validate(inst.op);
  detail::require_same_space(inst.P, inst.op, "l2");
  detail::require_zeros_in_disk(inst.P, "l2");
  const Polynomial b = apply(inst.op, inst.P);
  require(!b.is_zero(), "l2: B[P] is identically zero");
  double max_mod = 0.0;
  if (b.degree() >= 1)
    for (const auto& c : root_clusters(b)) max_mod = std::max(max_mod, std::abs(c.center));
  SlackReport r;
  r.statement_id = "l2";
  r.lhs = max_mod;
  r.rhs = 1.0;
  r.rel_slack = relative_slack(r.lhs, r.rhs);
  r.pass = max_mod <= 1.0 + tol.root_modulus;
  r.extra = {{"degree", b.degree()}};
  return detail::stamp(std::move(r), inst);
}

/// |comb(P)| <= |comb(F)| for |z| >= 1 (radii 1, 1.25, 2).
inline SlackReport check_lemma3(const InequalityInstance& inst, const Polynomial& F, const Tolerances& tol = {}) {
  detail::check_lemma_inputs(inst, "l3");
  detail::require_same_space(F, inst.op, "l3");
  detail::require_zeros_in_disk(F, "l3 (F)");
  require(!inst.P.is_zero(), "l3: zero polynomial");
  require(dominated_on_grid(inst.P, F), "l3: |P| <= |F| fails on the unit circle");
  const Polynomial cp = lhs_combination(inst.op, inst.P, inst.params);
  const Polynomial cf = lhs_combination(inst.op, F, inst.params);
  auto pr = detail::pointwise_min([&](cplx z) { return std::pair{std::abs(cp(z)), std::abs(cf(z))}; },
                                  {1.0, 1.25, 2.0}, tol.pointwise);
  auto r = detail::stamp(detail::pointwise_report("l3", pr, tol), inst);
  r.instance["F"] = to_json(F);
  return r;
}

/// |comb(P)(z)| >= |R^n + phi r^n| |Lambda_n| |z|^n m for |z| >= 1 (radii 1, 1.5).
inline SlackReport check_lemma2prime(const InequalityInstance& inst, const Tolerances& tol = {}) {
  detail::check_lemma_inputs(inst, "l2p");
  detail::require_zeros_in_disk(inst.P, "l2p");
  const auto& q = inst.params;
  const std::size_t n = inst.op.n;
  const cplx phi = phi_n(q, n);
  const Polynomial comb = dilation_combination(inst.op, inst.P, q.R, q.r, phi);
  const double m = min_modulus(inst.P, 1.0);
  const double c = std::abs(std::pow(q.R, static_cast<double>(n)) + phi * std::pow(q.r, static_cast<double>(n))) *
                   std::abs(capital_lambda(inst.op));
  auto pr = detail::pointwise_min(
      [&](cplx z) {
        return std::pair{c * std::pow(std::abs(z), static_cast<double>(n)) * m, std::abs(comb(z))};
      },
      {1.0, 1.5}, tol.pointwise);
  auto r = detail::stamp(detail::pointwise_report("l2p", pr, tol), inst);
  r.extra["m"] = m;
  return r;
}

/// |comb(P)| <= |comb(P*)| for |z| >= 1 (radii 1, 1.5).
inline SlackReport check_lemma4(const InequalityInstance& inst, const Tolerances& tol = {}) {
  detail::check_lemma_inputs(inst, "l4");
  detail::require_nonvanishing(inst.P, "l4");
  const Polynomial cp = lhs_combination(inst.op, inst.P, inst.params);
  const Polynomial cs = lhs_combination(inst.op, conj_reciprocal(inst.P), inst.params);
  auto pr = detail::pointwise_min([&](cplx z) { return std::pair{std::abs(cp(z)), std::abs(cs(z))}; },
                                  {1.0, 1.5}, tol.pointwise);
  return detail::stamp(detail::pointwise_report("l4", pr, tol), inst);
}

/// |comb(P)| <= |comb(P*)| - (|R^n + phi r^n||Lambda_n| - |1 + phi||lambda0|) m on |z| = 1.
/// The m-term is moved to whichever side keeps both sides nonnegative.
inline SlackReport check_lemma3prime(const InequalityInstance& inst, const Tolerances& tol = {}) {
  detail::check_lemma_inputs(inst, "l3p");
  detail::require_nonvanishing(inst.P, "l3p");
  const auto& q = inst.params;
  const cplx phi = phi_n(q, inst.op.n);
  const Polynomial cp = dilation_combination(inst.op, inst.P, q.R, q.r, phi);
  const Polynomial cs = dilation_combination(inst.op, conj_reciprocal(inst.P), q.R, q.r, phi);
  const double m = min_modulus(inst.P, 1.0);
  const double mc = m_coefficient(inst.op, q.R, q.r, phi);
  const double shift = mc * m;
  auto pr = detail::pointwise_min(
      [&](cplx z) {
        const double a = std::abs(cp(z)), b = std::abs(cs(z));
        return shift >= 0.0 ? std::pair{a + shift, b} : std::pair{a, b - shift};
      },
      {1.0}, tol.pointwise);
  auto r = detail::stamp(detail::pointwise_report("l3p", pr, tol), inst);
  r.extra["m"] = m;
  r.extra["m_coefficient"] = mc;
  r.extra["m_coefficient_negative"] = mc < 0.0;
  return r;
}

/// Circle means of the p-th powers:
///   mean |e^{i eta} comb(P) + comb*(P)|^p <= |(R^n + phi r^n) Lambda_n e^{i eta} + (1 + phi') conj(lambda0)|^p mean |P|^p
/// with phi' = phi_n(R, r, conj alpha, conj beta).
inline SlackReport check_lemma6(const InequalityInstance& inst, double eta, const Tolerances& tol = {}) {
  detail::check_lemma_inputs(inst, "l6");
  detail::require_positive_p(inst.p, "l6");
  detail::require_nonvanishing(inst.P, "l6");
  const auto& q = inst.params;
  const std::size_t n = inst.op.n;
  const double nd = static_cast<double>(n);
  const cplx phi = phi_n(q, n);
  const cplx phi_conj = phi_n({q.R, q.r, std::conj(q.alpha), std::conj(q.beta)}, n);
  const cplx rot = unit(eta);
  const Polynomial lhs_poly = rot * lhs_combination(inst.op, inst.P, q) + starred_combination(inst.op, inst.P, q);
  const cplx c = (std::pow(q.R, nd) + phi * std::pow(q.r, nd)) * capital_lambda(inst.op) * rot +
                 (1.0 + phi_conj) * std::conj(inst.op.lambda0);
  const auto l = lhs_poly.is_zero() ? QuadratureResult{0.0, 0.0, 0} : detail::power_mean(lhs_poly, inst.p);
  const auto pm = detail::power_mean(inst.P, inst.p);
  const double lhs = l.mean;
  const double rhs = std::pow(std::abs(c), inst.p) * pm.mean;
  const double err = (l.mean > 0.0 ? l.err_estimate / l.mean : 0.0) + (pm.mean > 0.0 ? pm.err_estimate / pm.mean : 0.0);
  auto r = detail::stamp(detail::integral_report("l6", lhs, rhs, err, tol), inst);
  r.instance["eta"] = eta;
  return r;
}

/// ||C_gamma P||_p <= c(gamma, n) ||P||_p for the built-in admissible families.
inline SlackReport check_arestov(const InequalityInstance& inst, const GammaOperator& g, const Tolerances& tol = {}) {
  require(g.family != GammaFamily::custom, "arestov: admissibility not certified for a custom gamma");
  detail::require_positive_p(inst.p, "arestov");
  require(!inst.P.is_zero(), "arestov: zero polynomial");
  if (g.family == GammaFamily::dilation) detail::require_nonvanishing(inst.P, "arestov (dilation)");
  if (g.family == GammaFamily::reversed_dilation) detail::require_zeros_in_disk(inst.P, "arestov (reversed dilation)");
  const Polynomial cp = c_gamma_apply(g, inst.P);
  const NormValue l = detail::norm_or_zero(cp, inst.p);
  const NormValue pn = lp_norm(inst.P, inst.p);
  auto r = detail::stamp(
      detail::integral_report("arestov", l.value, c_gamma_bound(g) * pn.value, l.rel_err() + pn.rel_err(), tol),
      inst);
  r.instance["gamma"] = to_json(g);
  return r;
}

/// |(A - C) e^{i gamma} + (B + C)| <= |A e^{i gamma} + B| when B + C <= A.
inline SlackReport check_lemma_abc(double a, double b, double c, double gamma, std::uint64_t seed = 0) {
  require(a >= 0.0 && b >= 0.0 && c >= 0.0, "abc: A, B, C must be nonnegative");
  require(b + c <= a, "abc: need B + C <= A");
  const cplx e = unit(gamma);
  SlackReport r;
  r.statement_id = "abc";
  r.lhs = std::abs((a - c) * e + (b + c));
  r.rhs = std::abs(a * e + b);
  r.rel_slack = relative_slack(r.lhs, r.rhs);
  r.pass = r.lhs <= r.rhs + 1e-12 * std::max(1.0, a + b);
  r.seed = seed;
  r.instance = {{"abc", json::array({a, b, c, gamma})}, {"seed", seed}};
  return r;
}

// ---------------------------------------------------------------------------
// Classical special cases

inline const std::vector<std::string>& classical_ids() {
  static const std::vector<std::string> ids{"zygmund_1",    "hardy_2",      "debruijn_3",
                                            "boasrahman_4", "azizrather_5", "rahman_11"};
  return ids;
}

inline SlackReport check_classical(const std::string& which, const InequalityInstance& inst,
                                   const Tolerances& tol = {}) {
  const std::string id = "classical:" + which;
  const Polynomial& P = inst.P;
  require(!P.is_zero(), id + ": zero polynomial");
  const std::size_t n = P.ambient_degree();
  const double nd = static_cast<double>(n);
  const double p = inst.p;
  const auto& q = inst.params;
  SlackReport r;
  if (which == "zygmund_1" || which == "debruijn_3") {
    const bool sharp = which == "debruijn_3";
    if (sharp) {
      require(p >= 0.0, id + ": need p >= 0");
      detail::require_nonvanishing(P, id);
    } else {
      require(p > 0.0, id + ": need p > 0");
    }
    const NormValue l = detail::norm_or_zero(derivative(P), p);
    const NormValue pn = lp_norm(P, p);
    const NormValue den = sharp ? detail::unit_binomial_norm(p) : NormValue{1.0, p, 0.0};
    r = detail::integral_report(id, l.value, nd * pn.value / den.value, l.rel_err() + pn.rel_err() + den.rel_err(),
                                tol);
  } else if (which == "hardy_2" || which == "boasrahman_4") {
    const bool sharp = which == "boasrahman_4";
    require(q.R > 1.0, id + ": need R > 1");
    const double rn = std::pow(q.R, nd);
    if (sharp) {
      require(p >= 0.0, id + ": need p >= 0");
      detail::require_nonvanishing(P, id);
      r = detail::bound_report(id, scale_arg(P, q.R), rn, 1.0, P, p, tol);
    } else {
      require(p > 0.0, id + ": need p > 0");
      const NormValue l = lp_norm(scale_arg(P, q.R), p);
      const NormValue pn = lp_norm(P, p);
      r = detail::integral_report(id, l.value, rn * pn.value, l.rel_err() + pn.rel_err(), tol);
    }
  } else if (which == "azizrather_5") {
    validate(q);
    require(p >= 0.0, id + ": need p >= 0");
    detail::require_nonvanishing(P, id);
    const cplx phi = phi_n(q, n);
    const Polynomial combo = scale_arg(P, q.R) + phi * scale_arg(P, q.r);
    r = detail::bound_report(id, combo, std::pow(q.R, nd) + phi * std::pow(q.r, nd), 1.0 + phi, P, p, tol);
  } else if (which == "rahman_11") {
    require(q.R >= 1.0, id + ": need R >= 1");
    validate(inst.op);
    detail::require_same_space(P, inst.op, id);
    detail::require_nonvanishing(P, id);
    const auto l = max_modulus_at(apply(inst.op, scale_arg(P, q.R)), 1.0);
    const auto pm = max_modulus_at(P, 1.0);
    const double c = 0.5 * (std::pow(q.R, nd) * std::abs(capital_lambda(inst.op)) + std::abs(inst.op.lambda0));
    const double err = (l.value > 0.0 ? l.err_estimate / l.value : 0.0) + pm.err_estimate / pm.value;
    r = detail::integral_report(id, l.value, c * pm.value, err, tol);
  } else {
    throw PreconditionError("unknown classical inequality '" + which + "'");
  }
  return detail::stamp(std::move(r), inst);
}

// ---------------------------------------------------------------------------
// Dispatch by statement identifier

inline const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v{"t1", "t2", "c1", "c2", "ta", "tb", "l1", "l2", "l3", "l2p", "l4", "l3p", "l6",
                               "arestov", "abc"};
    for (const auto& c : classical_ids()) v.push_back("classical:" + c);
    return v;
  }();
  return ids;
}

inline bool is_known_statement(const std::string& id) {
  const auto& ids = statement_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

inline SlackReport dispatch(const std::string& id, const CheckInput& in, const Tolerances& tol = {}) {
  const auto& inst = in.inst;
  if (id == "t1") return check_theorem1(inst, tol);
  if (id == "t2") return check_theorem2(inst, tol);
  if (id == "c1") return check_corollary1(inst, tol);
  if (id == "c2") return check_corollary2(inst, tol);
  if (id == "ta") return check_theorem_a(inst, tol);
  if (id == "tb") return check_theorem_b(inst, tol);
  if (id == "l1") return check_lemma1(inst, tol);
  if (id == "l2") return check_lemma2(inst, tol);
  if (id == "l3") {
    require(in.F.has_value(), "l3: dominating polynomial F missing");
    return check_lemma3(inst, *in.F, tol);
  }
  if (id == "l2p") return check_lemma2prime(inst, tol);
  if (id == "l4") return check_lemma4(inst, tol);
  if (id == "l3p") return check_lemma3prime(inst, tol);
  if (id == "l6") return check_lemma6(inst, in.eta, tol);
  if (id == "arestov") {
    require(in.gamma.has_value(), "arestov: gamma missing");
    return check_arestov(inst, *in.gamma, tol);
  }
  if (id == "abc") return check_lemma_abc(in.abc[0], in.abc[1], in.abc[2], in.abc[3], inst.seed);
  if (id.rfind("classical:", 0) == 0) return check_classical(id.substr(10), inst, tol);
  throw PreconditionError("unknown statement id '" + id + "'");
}

inline CheckInput check_input_from_json(const json& instance) {
  CheckInput in;
  if (instance.contains("abc")) {
    const auto& v = instance.at("abc");
    require(v.is_array() && v.size() == 4, "json: abc needs [A, B, C, gamma]");
    for (std::size_t i = 0; i < 4; ++i) in.abc[i] = v[i].get<double>();
    in.inst.seed = instance.at("seed").get<std::uint64_t>();
    return in;
  }
  in.inst = instance_from_json(instance);
  if (instance.contains("F")) in.F = polynomial_from_json(instance.at("F"));
  if (instance.contains("eta")) in.eta = instance.at("eta").get<double>();
  if (instance.contains("gamma")) in.gamma = gamma_from_json(instance.at("gamma"));
  return in;
}

/// Re-runs the checker recorded in one JSONL report line.
inline SlackReport rerun(const std::string& line, const Tolerances& tol = {}) {
  const json j = json::parse(line);
  return dispatch(j.at("statement_id").get<std::string>(), check_input_from_json(j.at("instance")), tol);
}

}  // namespace bnineq
