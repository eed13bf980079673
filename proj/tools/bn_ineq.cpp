// bn_ineq: verify, probe and stress the B_n operator inequalities.
//
// Exit codes: 0 all checks pass, 1 a violation or finding, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "bnineq/bnineq.hpp"

namespace {

using namespace bnineq;

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::size_t workers = 0;  // 0: take BN_INEQ_WORKERS, else 1
  double tol = -1.0;        // negative: keep the default
};

std::size_t resolve_workers(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("BN_INEQ_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    require(end != env && *end == '\0' && v >= 1, "BN_INEQ_WORKERS must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return 1;
}

Tolerances resolve_tol(double flag) {
  Tolerances t;
  if (flag >= 0.0) t.base = flag;
  return t;
}

int cmd_verify(const Globals& g, const std::string& statements, std::size_t trials, const std::string& degrees,
               const std::string& p_list, bool extremal) {
  RunConfig cfg;
  if (statements == "all") {
    cfg.statements = statement_ids();
  } else {
    cfg.statements = split_list(statements);
  }
  cfg.trials = trials;
  const auto colon = degrees.find(':');
  try {
    cfg.min_degree = std::stoul(degrees.substr(0, colon));
    cfg.max_degree = colon == std::string::npos ? cfg.min_degree : std::stoul(degrees.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw PreconditionError("cannot parse degree range '" + degrees + "' (expected lo:hi)");
  }
  if (!p_list.empty()) cfg.p_grid = parse_p_list(p_list);
  cfg.seed = g.seed;
  cfg.workers = resolve_workers(g.workers);
  cfg.tol = resolve_tol(g.tol);
  cfg.extremal = extremal;
  validate(cfg);

  const RunOutcome out = run_verification(cfg);
  if (g.out.empty()) {
    write_jsonl(std::cout, out);
    print_summary(stderr, out);
  } else {
    std::ofstream f(g.out);
    require(f.good(), "cannot open output file '" + g.out + "'");
    write_jsonl(f, out);
    print_summary(stdout, out);
  }
  return out.all_pass ? 0 : 1;
}

int cmd_case(const Globals& g, const std::string& poly, const std::string& lambda, double R, double r,
             const std::string& alpha, const std::string& beta, const std::string& delta, const std::string& p) {
  InequalityInstance inst;
  const auto coeffs = parse_complex_list(poly);
  require(coeffs.size() >= 2, "--poly needs at least two coefficients (degree n >= 1)");
  inst.P = Polynomial(coeffs);
  const auto lam = parse_complex_list(lambda);
  require(lam.size() == 3, "--lambda needs exactly three values l0,l1,l2");
  inst.op = {lam[0], lam[1], lam[2], inst.P.ambient_degree()};
  inst.params = {R, r, parse_complex(alpha), parse_complex(beta)};
  inst.delta = parse_complex(delta);
  inst.p = parse_p(p);
  inst.seed = g.seed;
  const Tolerances tol = resolve_tol(g.tol);

  const SlackReport t1 = check_theorem1(inst, tol);
  const SlackReport t2 = check_theorem2(inst, tol);
  const json doc = {{"t1", to_json(t1)}, {"t2", to_json(t2)}};
  if (g.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream f(g.out);
    require(f.good(), "cannot open output file '" + g.out + "'");
    f << doc.dump(2) << '\n';
  }
  return t1.pass && t2.pass ? 0 : 1;
}

int cmd_oracle(const Globals& g) {
  bool ok = true;
  std::printf("%-60s %22s %22s %11s %9s  %s\n", "oracle", "value", "reference", "discrepancy", "tolerance",
              "result");
  for (const auto& l : oracle_battery(g.seed)) {
    std::printf("%-60s %22.16g %22.16g %11.3e %9.1e  %s\n", l.name.c_str(), l.value, l.reference, l.discrepancy,
                l.tolerance, l.pass ? "PASS" : "FAIL");
    ok = ok && l.pass;
  }
  return ok ? 0 : 1;
}

int cmd_search(const Globals& g, const std::string& statement, std::size_t degree, std::size_t restarts,
               std::size_t budget, const std::string& p_list, const std::string& trace_path) {
  const auto grid = parse_p_list(p_list);
  const SharpnessReport rep =
      sharpness_certify(statement, degree, grid, restarts, budget, g.seed, resolve_workers(g.workers));

  json runs = json::array();
  for (const auto& run : rep.runs)
    runs.push_back({{"p", p_to_json(run.p)},
                    {"restart", run.restart},
                    {"best_ratio", run.result.best_ratio},
                    {"evals", run.result.evals}});
  json doc = to_json(rep.best);
  doc.erase("trace");
  doc["seed"] = g.seed;
  doc["total_evals"] = rep.total_evals;
  doc["finding"] = rep.finding();
  doc["runs"] = runs;
  if (g.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream f(g.out);
    require(f.good(), "cannot open output file '" + g.out + "'");
    f << doc.dump(2) << '\n';
  }
  if (!trace_path.empty()) {
    std::ofstream f(trace_path);
    require(f.good(), "cannot open trace file '" + trace_path + "'");
    for (const auto& run : rep.runs)
      for (const auto& t : run.result.trace)
        f << json{{"p", p_to_json(run.p)}, {"restart", run.restart}, {"eval", t.eval}, {"ratio", t.ratio}}.dump()
          << '\n';
  }
  std::fprintf(stderr, "%s: best_ratio %.12f over %zu evaluations%s\n", statement.c_str(), rep.best.best_ratio,
               rep.total_evals, rep.finding() ? "  FINDING" : "");
  return rep.finding() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of B_n operator polynomial inequalities"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--out", g.out, "output path (stdout when omitted)");
  app.add_option("--workers", g.workers, "worker threads (fallback: BN_INEQ_WORKERS)")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "relative slack tolerance for integral checks")->check(CLI::NonNegativeNumber);

  std::string statements = "t1,t2", degrees = "1:8", p_list;
  std::size_t trials = 100;
  bool extremal = false;
  auto* verify = app.add_subcommand("verify", "run checkers over seeded random instances");
  verify->add_option("--statements", statements, "comma-separated ids, or 'all'");
  verify->add_option("--trials", trials, "trials per statement");
  verify->add_option("--degrees", degrees, "degree range lo:hi");
  verify->add_option("--p", p_list, "comma-separated p grid ('inf' allowed)");
  verify->add_flag("--extremal", extremal, "sample a z^n + b with |a| = |b| = 1 for nonvanishing P");

  std::string poly, lambda = "1,0,0", alpha = "0", beta = "0", delta = "0", p_case = "2";
  double R = 2.0, r = 1.0;
  auto* kase = app.add_subcommand("case", "check one explicit instance against t1 and t2");
  kase->add_option("--poly", poly, "coefficients, ascending powers, e.g. 1,0,1+2i")->required();
  kase->add_option("--lambda", lambda, "operator coefficients l0,l1,l2");
  kase->add_option("--R", R);
  kase->add_option("--r", r);
  kase->add_option("--alpha", alpha);
  kase->add_option("--beta", beta);
  kase->add_option("--delta", delta);
  kase->add_option("--p", p_case);

  auto* oracle = app.add_subcommand("oracle", "cross-check the norm machinery against closed forms");

  std::string statement = "t1", p_search = "1,2", trace_path;
  std::size_t degree = 4, restarts = 50, budget = 2000;
  auto* search = app.add_subcommand("search", "hill-climb lhs/rhs looking for counterexamples");
  search->add_option("--statement", statement, "t1, t2, c1 or c2");
  search->add_option("--degree", degree);
  search->add_option("--restarts", restarts);
  search->add_option("--budget", budget, "evaluations per restart");
  search->add_option("--p", p_search, "comma-separated finite p values");
  search->add_option("--trace", trace_path, "JSONL file of improvements per run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(g, statements, trials, degrees, p_list, extremal);
    if (kase->parsed()) return cmd_case(g, poly, lambda, R, r, alpha, beta, delta, p_case);
    if (oracle->parsed()) return cmd_oracle(g);
    if (search->parsed()) return cmd_search(g, statement, degree, restarts, budget, p_search, trace_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
