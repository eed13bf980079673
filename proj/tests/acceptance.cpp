// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bnineq/bnineq.hpp"

using namespace bnineq;

namespace {

constexpr std::uint64_t kSeed = 20261015;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunConfig suite(std::vector<std::string> ids, std::size_t trials, std::vector<double> grid = {0.0, 0.5, 1.0, 2.0, 4.0}) {
  RunConfig cfg;
  cfg.statements = std::move(ids);
  cfg.trials = trials;
  cfg.min_degree = 1;
  cfg.max_degree = 8;
  cfg.p_grid = std::move(grid);
  cfg.seed = kSeed;
  return cfg;
}

std::string first_failure(const RunOutcome& out) {
  for (const auto& r : out.records)
    if (!r.pass) return r.line.substr(0, 300);
  return "";
}

bool same_report(const SlackReport& a, const SlackReport& b, double tol, double* worst) {
  auto rel = [](double x, double y) { return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300}); };
  const double d = std::max(rel(a.lhs, b.lhs), rel(a.rhs, b.rhs));
  *worst = std::max(*worst, d);
  return d <= tol;
}

bool has_zero_on_circle(const Polynomial& P) {
  for (const auto& c : root_clusters(P))
    if (std::abs(std::abs(c.center) - 1.0) <= 1e-9) return true;
  return false;
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto out = run_verification(suite({"t1"}, 500));
  const double secs = seconds_since(t0);
  const auto& s = out.summary[0];
  const bool ok = out.all_pass && secs <= 120.0;
  return {ok, fmt("t1: %zu/%zu pass, min rel_slack %.3e, %.1f s", s.passed, s.trials, s.min_slack, secs) +
                  (ok ? "" : " first failure: " + first_failure(out))};
}

Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = suite({"t2"}, 500);
  const auto out = run_verification(cfg);
  const double secs = seconds_since(t0);
  std::size_t on_circle = 0, mismatched = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const CheckInput in = build_input("t2", cfg, i);
    if (!has_zero_on_circle(in.inst.P)) continue;
    ++on_circle;
    if (!same_report(check_theorem2(in.inst), check_theorem1(in.inst), 1e-9, &worst)) ++mismatched;
  }
  const auto& s = out.summary[0];
  const bool ok = out.all_pass && on_circle > 0 && mismatched == 0 && secs <= 120.0;
  return {ok, fmt("t2: %zu/%zu pass, min rel_slack %.3e, %.1f s; m=0 reduction on %zu instances with a zero on "
                  "the circle, worst difference %.2e",
                  s.passed, s.trials, s.min_slack, secs, on_circle, worst) +
                  (out.all_pass ? "" : " first failure: " + first_failure(out))};
}

Outcome criterion3() {
  RunConfig cfg = suite({"t1"}, 50);
  cfg.extremal = true;
  std::vector<double> grid;
  for (double p : default_p_grid())
    if (std::isfinite(p)) grid.push_back(p);
  double worst = 0.0;
  std::size_t checks = 0, bad = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    CheckInput in = build_input("t1", cfg, i);
    for (double p : grid) {
      in.inst.p = p;
      for (const char* id : {"t1", "c1", "c2"}) {
        const double s = std::abs(dispatch(id, in).rel_slack);
        worst = std::max(worst, s);
        ++checks;
        if (s > 1e-6) ++bad;
      }
    }
  }
  return {bad == 0, fmt("%zu checks (50 instances x %zu p values x t1,c1,c2), worst |rel_slack| %.3e", checks,
                        grid.size(), worst)};
}

Outcome criterion4() {
  const std::vector<std::string> ids{"l1", "l2", "l3", "l2p", "l4", "l3p", "l6", "abc", "arestov"};
  RunConfig cfg = suite(ids, 200, default_p_grid());
  const auto out = run_verification(cfg);
  RunConfig deep = suite({"l2"}, 200);
  deep.min_degree = 9;
  deep.max_degree = 16;
  const auto out16 = run_verification(deep);
  double max_mod = 0.0;
  for (const auto& r : out16.records) max_mod = std::max(max_mod, json::parse(r.line).value("lhs", kInf));
  std::string detail;
  for (const auto& s : out.summary) detail += fmt("%s %zu/%zu, ", s.statement_id.c_str(), s.passed, s.trials);
  detail += fmt("l2 at n in [9,16] %zu/%zu with max root modulus %.12f", out16.summary[0].passed,
                out16.summary[0].trials, max_mod);
  const bool ok = out.all_pass && out16.all_pass && max_mod <= 1.0 + 1e-8;
  if (!ok) detail += " first failure: " + first_failure(out.all_pass ? out16 : out);
  return {ok, detail};
}

Outcome criterion5() {
  bool ok = true;
  double worst_z = 0.0, worst_db = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (double p : {0.3, 0.5, 1.0, 1.7, 2.0, 4.0}) {
      InequalityInstance inst;
      inst.P = Polynomial::monomial(1.0, n, n);
      inst.op = BnOperator::identity(n);
      inst.p = p;
      const auto z = check_classical("zygmund_1", inst);
      const double nd = static_cast<double>(n);
      worst_z = std::max({worst_z, std::abs(z.lhs - nd), std::abs(z.rhs - nd)});
      inst.P[0] = 1.0;
      worst_db = std::max(worst_db, std::abs(check_classical("debruijn_3", inst).rel_slack));
    }
  }
  ok = worst_z <= 1e-9 && worst_db <= 1e-6;
  RunConfig cfg = suite({"classical:boasrahman_4", "classical:azizrather_5", "classical:rahman_11"}, 200,
                        default_p_grid());
  const auto out = run_verification(cfg);
  std::string detail = fmt("Eq1 at z^n max |side - n| %.2e; Eq3 at z^n+1 max |slack| %.2e; ", worst_z, worst_db);
  for (const auto& s : out.summary) {
    // stricter than the checker: no quadrature error allowance
    const bool strict = s.min_slack >= -1e-7;
    ok = ok && strict && s.passed == s.trials;
    detail += fmt("%s %zu/%zu min %.2e, ", s.statement_id.c_str(), s.passed, s.trials, s.min_slack);
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome criterion6() {
  bool ok = true;
  std::string detail;
  for (const auto& l : oracle_battery(kSeed)) {
    ok = ok && l.pass;
    if (!l.pass) detail += "FAILED " + l.name + fmt(" (%.2e > %.0e); ", l.discrepancy, l.tolerance);
  }
  double worst_wallis = 0.0;
  for (double p : {0.5, 1.0, 2.0, 3.0, 4.0})
    worst_wallis = std::max(worst_wallis,
                            std::abs(one_plus_z_norm(p).value / one_plus_z_norm_closed_form(p) - 1.0));
  ok = ok && worst_wallis <= 1e-9;
  return {ok, detail + fmt("all oracle lines pass; worst Wallis discrepancy %.2e", worst_wallis)};
}

Outcome criterion7() {
  const RunConfig cfg = suite({"t2"}, 50);
  double worst = 0.0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const InequalityInstance base = build_input("t2", cfg, i).inst;
    auto with = [&](auto edit) {
      InequalityInstance x = base;
      edit(x);
      return x;
    };
    const auto no_delta = with([](auto& x) { x.delta = 0.0; });
    const auto no_beta = with([](auto& x) { x.delta = 0.0, x.params.beta = 0.0; });
    const auto no_alpha = with([](auto& x) { x.delta = 0.0, x.params.beta = 0.0, x.params.alpha = 0.0; });
    const auto unit_r = with([](auto& x) { x.delta = 0.0, x.params.beta = 0.0, x.params.r = 1.0; });
    const auto ident = with([](auto& x) { x.op = BnOperator::identity(x.op.n); });
    const auto ident0 = with([](auto& x) { x.op = BnOperator::identity(x.op.n), x.delta = 0.0; });
    const std::pair<SlackReport, SlackReport> links[] = {
        {check_theorem2(no_delta), check_theorem1(no_delta)},
        {check_theorem1(no_beta), check_corollary1(no_beta)},
        {check_corollary1(no_alpha), check_theorem_a(no_alpha)},
        {check_corollary1(unit_r), check_theorem_b(unit_r)},
        {check_theorem2(ident), check_corollary2(ident)},
        {check_corollary2(ident0), check_classical("azizrather_5", ident0)},
    };
    for (const auto& [a, b] : links)
      if (!same_report(a, b, 1e-12, &worst)) ++bad;
  }
  return {bad == 0, fmt("300 links on 50 shared instances, %zu above 1e-12, worst relative difference %.2e", bad,
                        worst)};
}

Outcome criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (const char* id : {"t1", "t2"}) {
    const auto rep = sharpness_certify(id, 4, {1.0, 2.0}, 50, 2000, kSeed, workers);
    const double b = rep.best.best_ratio;
    ok = ok && !rep.finding() && b >= 1.0 - 1e-3 && b <= 1.0 + 1e-6;
    detail += fmt("%s best_ratio %.12f (%zu evals), ", id, b, rep.total_evals);
  }
  const double secs = seconds_since(t0);
  ok = ok && secs <= 600.0;
  return {ok, detail + fmt("%.1f s on %zu worker(s)", secs, workers)};
}

Outcome criterion9() {
  RunConfig cfg;
  cfg.statements = statement_ids();
  cfg.trials = 25;
  cfg.seed = kSeed;
  auto jsonl = [&](std::size_t workers) {
    cfg.workers = workers;
    std::ostringstream os;
    write_jsonl(os, run_verification(cfg));
    return os.str();
  };
  const std::string one = jsonl(1), again = jsonl(1), four = jsonl(4), seven = jsonl(7);
  const bool ok = one == again && one == four && one == seven && !one.empty();
  return {ok, fmt("%zu statements x 25 trials, %zu bytes; workers 1, 1, 4, 7 %s", cfg.statements.size(),
                  one.size(), ok ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"theorem 1 suite (500 instances)", criterion1},
      {"theorem 2 suite (500 instances) and m = 0 reduction", criterion2},
      {"equality certification on a z^n + b", criterion3},
      {"lemma suites (200 each) and lemma 2 up to n = 16", criterion4},
      {"classical regressions", criterion5},
      {"oracle battery", criterion6},
      {"specialization chain", criterion7},
      {"sharpness search t1, t2 at n = 4", criterion8},
      {"determinism across worker counts", criterion9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
