#pragma once

/**
 * @file search.hpp
 * @brief Derivative-free maximisation of lhs / rhs over instance space.
 *
 * Points live in unconstrained coordinates that decode to valid instances:
 * zero moduli 1 + |t|, zeros of u at n/4 - |x| + i y, disk parameters
 * w / max(1, |w|), r = 1 + |r_base| and R = r + 1e-6 + |R_gap|. The search is
 * a random-perturbation hill climb with step halving.
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "bnineq/verify.hpp"

namespace bnineq {

inline constexpr double kFindingThreshold = 1e-6;

struct SearchSpacePoint {
  std::vector<double> zero_t;      // modulus 1 + |t|
  std::vector<double> zero_angle;
  double leading_phase = 0.0;
  int op_kind = 0;  // 0: constant u, 1: linear u, 2: quadratic u (fixed during a search)
  double op_phase = 0.0;
  std::array<double, 4> op_root{0, 0, 0, 0};  // (x1, y1, x2, y2)
  cplx alpha_w{0.0}, beta_w{0.0}, delta_w{0.0};
  double r_base = 0.0;
  double R_gap = 1.0;

  std::size_t degree() const { return zero_t.size(); }
};

namespace detail {

inline cplx disk_map(cplx w) { return w / std::max(1.0, std::abs(w)); }

/// Every real coordinate except op_kind, in a fixed order.
inline std::vector<double*> coordinates(SearchSpacePoint& x) {
  std::vector<double*> c;
  for (auto& t : x.zero_t) c.push_back(&t);
  for (auto& a : x.zero_angle) c.push_back(&a);
  c.push_back(&x.leading_phase);
  c.push_back(&x.op_phase);
  for (auto& v : x.op_root) c.push_back(&v);
  for (cplx* w : {&x.alpha_w, &x.beta_w, &x.delta_w}) {
    c.push_back(&reinterpret_cast<double(&)[2]>(*w)[0]);
    c.push_back(&reinterpret_cast<double(&)[2]>(*w)[1]);
  }
  c.push_back(&x.r_base);
  c.push_back(&x.R_gap);
  return c;
}

inline SearchSpacePoint perturb(SearchSpacePoint x, double step, Rng& rng) {
  for (double* c : coordinates(x)) *c += step * rng.normal();
  return x;
}

}  // namespace detail

inline InequalityInstance decode(const SearchSpacePoint& x, double p) {
  const std::size_t n = x.degree();
  require(n >= 1 && x.zero_angle.size() == n, "decode: malformed search point");
  require(x.op_kind >= 0 && x.op_kind <= 2 && !(x.op_kind == 2 && n == 1), "decode: bad operator kind");
  InequalityInstance inst;
  std::vector<cplx> zeros(n);
  for (std::size_t k = 0; k < n; ++k) zeros[k] = (1.0 + std::abs(x.zero_t[k])) * unit(x.zero_angle[k]);
  inst.P = from_roots(zeros, unit(x.leading_phase), n);

  const double nd = static_cast<double>(n);
  const cplx c = unit(x.op_phase);
  const cplx w1{nd / 4.0 - std::abs(x.op_root[0]), x.op_root[1]};
  const cplx w2{nd / 4.0 - std::abs(x.op_root[2]), x.op_root[3]};
  inst.op.n = n;
  inst.op.lambda0 = c;
  inst.op.lambda1 = 0.0;
  inst.op.lambda2 = 0.0;
  if (x.op_kind == 1) {
    inst.op.lambda1 = c / nd;
    inst.op.lambda0 = -c * w1;
  } else if (x.op_kind == 2) {
    inst.op.lambda2 = c / (0.5 * nd * (nd - 1.0));
    inst.op.lambda1 = -c * (w1 + w2) / nd;
    inst.op.lambda0 = c * w1 * w2;
  }
  inst.params.alpha = detail::disk_map(x.alpha_w);
  inst.params.beta = detail::disk_map(x.beta_w);
  inst.delta = detail::disk_map(x.delta_w);
  inst.params.r = 1.0 + std::abs(x.r_base);
  inst.params.R = inst.params.r + 1e-6 + std::abs(x.R_gap);
  inst.p = p;
  return inst;
}

inline bool is_search_statement(const std::string& id) { return id == "t1" || id == "t2" || id == "c1" || id == "c2"; }

/// lhs / rhs of the statement's checker at the decoded instance.
inline double ratio_objective(const std::string& id, const SearchSpacePoint& x, double p) {
  require(is_search_statement(id), "ratio_objective: statement must be one of t1, t2, c1, c2");
  const SlackReport r = dispatch(id, CheckInput{decode(x, p)});
  return r.lhs / r.rhs;
}

/// z^n + 1 with the identity operator.
inline SearchSpacePoint equality_point(std::size_t n) {
  SearchSpacePoint x;
  x.zero_t.assign(n, 0.0);
  x.zero_angle.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    x.zero_angle[k] = std::numbers::pi * (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
  return x;
}

inline SearchSpacePoint random_point(std::size_t n, Rng& rng) {
  SearchSpacePoint x;
  x.zero_t.resize(n);
  x.zero_angle.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    x.zero_t[k] = 0.5 * std::abs(rng.normal());
    x.zero_angle[k] = rng.angle();
  }
  x.leading_phase = rng.angle();
  x.op_kind = static_cast<int>(rng.uniform_int(0, n == 1 ? 1 : 2));
  x.op_phase = rng.angle();
  x.op_root = {rng.uniform(0.0, 4.0), rng.uniform(-4.0, 4.0), rng.uniform(0.0, 4.0), rng.uniform(-4.0, 4.0)};
  x.alpha_w = rng.in_unit_disk();
  x.beta_w = rng.in_unit_disk();
  x.delta_w = rng.in_unit_disk();
  x.r_base = rng.uniform();
  x.R_gap = rng.uniform(0.05, 3.0);
  return x;
}

struct TracePoint {
  std::size_t eval;
  double ratio;
};

struct SearchResult {
  std::string statement_id;
  double p = 0.0;
  double best_ratio = -kInf;
  SearchSpacePoint best_point;
  InequalityInstance best_instance;
  std::size_t evals = 0;
  std::vector<TracePoint> trace;  ///< improvements only, so ratios increase
};

/// Hill climb: perturb every coordinate by N(0, step^2), keep strict
/// improvements, halve the step after 20 rejections in a row.
inline SearchResult local_search(const std::string& id, const SearchSpacePoint& start, std::size_t budget,
                                 double step0, std::uint64_t seed, double p) {
  require(budget >= 1, "local_search: budget must be >= 1");
  auto objective = [&](const SearchSpacePoint& x) {
    try {
      const double v = ratio_objective(id, x, p);
      return std::isfinite(v) ? v : -kInf;
    } catch (const PreconditionError&) {
      return -kInf;
    }
  };
  Rng rng(seed);
  SearchResult res;
  res.statement_id = id;
  res.p = p;
  res.best_point = start;
  res.best_ratio = objective(start);
  res.evals = 1;
  res.trace.push_back({1, res.best_ratio});
  double step = step0;
  int rejections = 0;
  while (res.evals < budget && step >= 1e-6) {
    SearchSpacePoint cand = detail::perturb(res.best_point, step, rng);
    const double v = objective(cand);
    ++res.evals;
    if (v > res.best_ratio) {
      res.best_ratio = v;
      res.best_point = std::move(cand);
      res.trace.push_back({res.evals, v});
      rejections = 0;
    } else if (++rejections >= 20) {
      step *= 0.5;
      rejections = 0;
    }
  }
  res.best_instance = decode(res.best_point, p);
  res.best_instance.seed = seed;
  return res;
}

struct SharpnessRun {
  double p;
  std::size_t restart;  ///< 0 is the equality-family start
  SearchResult result;
};

struct SharpnessReport {
  SearchResult best;
  std::vector<SharpnessRun> runs;
  std::size_t total_evals = 0;

  bool finding() const { return best.best_ratio > 1.0 + kFindingThreshold; }
};

/// For each p: one search from z^n + 1 with the identity operator plus
/// `restarts` searches from random points. Runs may execute in parallel; the
/// merge picks the largest ratio, ties broken by (p index, restart index).
inline SharpnessReport sharpness_certify(const std::string& id, std::size_t n, const std::vector<double>& p_grid,
                                         std::size_t restarts, std::size_t budget, std::uint64_t seed,
                                         std::size_t workers = 1, double step0 = 0.3) {
  require(is_search_statement(id), "sharpness_certify: statement must be one of t1, t2, c1, c2");
  require(restarts >= 1, "sharpness_certify: restarts must be >= 1");
  require(n >= 1 && n <= kMaxSampleDegree, "sharpness_certify: degree must be in [1, 16]");
  require(!p_grid.empty(), "sharpness_certify: empty p grid");
  for (double p : p_grid) require(p >= 0.0 && std::isfinite(p), "sharpness_certify: p must be finite and >= 0");

  const std::size_t per_p = restarts + 1;
  const std::size_t total = p_grid.size() * per_p;
  SharpnessReport rep;
  rep.runs.resize(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < total;) {
      const std::size_t pi = t / per_p, k = t % per_p;
      const std::uint64_t s = trial_seed(derive_seed(seed, pi), k);
      Rng start_rng(derive_seed(s, 7));
      const SearchSpacePoint start = k == 0 ? equality_point(n) : random_point(n, start_rng);
      rep.runs[t] = {p_grid[pi], k, local_search(id, start, budget, step0, s, p_grid[pi])};
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(workers, total); ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::size_t best = 0;
  for (std::size_t t = 0; t < total; ++t) {
    rep.total_evals += rep.runs[t].result.evals;
    if (rep.runs[t].result.best_ratio > rep.runs[best].result.best_ratio) best = t;
  }
  rep.best = rep.runs[best].result;
  return rep;
}

inline json to_json(const SearchResult& r) {
  json trace = json::array();
  for (const auto& t : r.trace) trace.push_back({t.eval, t.ratio});
  return {{"statement_id", r.statement_id}, {"p", p_to_json(r.p)},          {"best_ratio", r.best_ratio},
          {"evals", r.evals},               {"instance", to_json(r.best_instance)}, {"trace", trace}};
}

}  // namespace bnineq
