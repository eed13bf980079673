#include <gtest/gtest.h>

#include "bnineq/bnineq.hpp"

using namespace bnineq;
using namespace std::complex_literals;
using std::numbers::pi;

namespace {

Polynomial binomial(cplx a, cplx b, std::size_t n) {
  Polynomial p = Polynomial::monomial(a, n, n);
  p[0] += b;
  return p;
}

InequalityInstance instance(Polynomial P, BnOperator op, PhiParams q, cplx delta, double p) {
  InequalityInstance inst;
  inst.P = std::move(P);
  inst.op = op;
  inst.params = q;
  inst.delta = delta;
  inst.p = p;
  return inst;
}

}  // namespace

TEST(Theorem1, EqualityFamily) {
  for (std::size_t n : {1u, 2u, 5u, 8u}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto sp = sample_params(derive_seed(s, n));
      if (std::isinf(sp.p)) continue;
      const auto inst = instance(binomial(1.0, 1.0, n), sample_admissible_operator(n, s), sp.params, 0.0, sp.p);
      const auto r = check_theorem1(inst);
      EXPECT_LE(std::abs(r.rel_slack), 1e-6) << "n=" << n << " seed=" << s;
      EXPECT_TRUE(r.pass);
    }
  }
}

TEST(Theorem1, IdentityOperatorReducesToDilationBound) {
  const Polynomial P = sample_poly_nonvanishing(5, 99);
  const auto inst = instance(P, BnOperator::identity(5), {2.2, 1.0, 0.0, 0.0}, 0.0, 1.5);
  const auto t1 = check_theorem1(inst);
  const auto br = check_classical("boasrahman_4", inst);
  EXPECT_EQ(t1.lhs, br.lhs);
  EXPECT_EQ(t1.rhs, br.rhs);
}

TEST(Theorem1, Preconditions) {
  const auto good = instance(binomial(1.0, 2.0, 3), BnOperator::identity(3), {2.0, 1.0, 0.0, 0.0}, 0.0, 2.0);
  EXPECT_NO_THROW(check_theorem1(good));
  auto bad = good;
  bad.P = Polynomial({-0.5, 1.0, 0.0, 0.0});
  EXPECT_THROW(check_theorem1(bad), PreconditionError);
  bad = good;
  bad.params.R = 1.0;
  EXPECT_THROW(check_theorem1(bad), PreconditionError);
  bad = good;
  bad.op = {-10.0, 1.0, 0.0, 3};
  EXPECT_THROW(check_theorem1(bad), PreconditionError);
  bad = good;
  bad.p = kInf;
  EXPECT_THROW(check_theorem1(bad), PreconditionError);
}

TEST(Theorem2, DeltaZeroMatchesTheorem1) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::size_t n = 1 + s % 6;
    const auto sp = sample_params(s, {0.0, 0.5, 2.0});
    const auto inst = instance(sample_poly_nonvanishing(n, s), sample_admissible_operator(n, s), sp.params, 0.0, sp.p);
    const auto a = check_theorem1(inst), b = check_theorem2(inst);
    EXPECT_EQ(a.lhs, b.lhs);
    EXPECT_EQ(a.rhs, b.rhs);
  }
}

TEST(Theorem2, ZeroOnCircleGivesTheorem1Report) {
  const auto inst = instance(binomial(unit(0.4), unit(2.0), 4), sample_admissible_operator(4, 1),
                             {1.8, 1.2, 0.3, 0.5i}, 0.7 - 0.2i, 1.0);
  const auto a = check_theorem1(inst), b = check_theorem2(inst);
  EXPECT_NEAR(b.lhs, a.lhs, 1e-9 * a.lhs);
  EXPECT_NEAR(b.rhs, a.rhs, 1e-9 * a.rhs);
}

TEST(Theorem2, RandomWithDelta) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::size_t n = 1 + s % 8;
    const auto sp = sample_params(s, {0.0, 0.5, 1.0, 2.0, 4.0});
    const auto inst =
        instance(sample_poly_nonvanishing(n, s), sample_admissible_operator(n, s), sp.params, sp.delta, sp.p);
    EXPECT_TRUE(check_theorem2(inst).pass) << "seed " << s;
  }
}

TEST(Corollaries, EqualityFamily) {
  const auto inst = instance(binomial(unit(1.0), unit(-0.4), 6), sample_admissible_operator(6, 4),
                             {2.5, 1.5, 0.5, 0.3i}, 0.0, 0.5);
  EXPECT_LE(std::abs(check_corollary1(inst).rel_slack), 1e-6);
  EXPECT_LE(std::abs(check_corollary2(inst).rel_slack), 1e-6);
}

TEST(Corollaries, SpecialisationsAreBitwise) {
  const auto inst = instance(sample_poly_nonvanishing(5, 8), sample_admissible_operator(5, 8), {2.0, 1.0, 0.4, 0.6},
                             0.0, 2.0);
  auto c1_in = inst;
  c1_in.params.alpha = 0.0;
  const auto ta = check_theorem_a(inst);
  const auto c1 = check_corollary1(c1_in);
  EXPECT_EQ(ta.lhs, c1.lhs);
  EXPECT_EQ(ta.rhs, c1.rhs);
  const auto tb = check_theorem_b(inst);
  const auto c1b = check_corollary1(inst);  // r is already 1
  EXPECT_EQ(tb.lhs, c1b.lhs);
  EXPECT_EQ(tb.rhs, c1b.rhs);
  const auto c2 = check_corollary2(inst);
  const auto ar = check_classical("azizrather_5", inst);
  EXPECT_EQ(c2.lhs, ar.lhs);
  EXPECT_EQ(c2.rhs, ar.rhs);
}

TEST(Lemma1, EqualRadiiIsIdentity) {
  const auto inst = instance(sample_poly_zeros_in_disk(4, 2), BnOperator::identity(4), {1.3, 1.3, 0.0, 0.0}, 0.0, 2);
  const auto r = check_lemma1(inst);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.extra["scaled_margin"].get<double>(), 0.0, 1e-15);
}

TEST(Lemma2, IdentityAndMonomial) {
  const Polynomial P = sample_poly_zeros_in_disk(6, 12);
  auto inst = instance(P, BnOperator::identity(6), {2.0, 1.0, 0.0, 0.0}, 0.0, 2);
  const auto r = check_lemma2(inst);
  double max_mod = 0.0;
  for (const auto& c : root_clusters(P)) max_mod = std::max(max_mod, std::abs(c.center));
  EXPECT_NEAR(r.lhs, max_mod, 1e-12);
  inst.P = Polynomial::monomial(1.0, 6, 6);
  inst.op = sample_admissible_operator(6, 3);
  EXPECT_LE(check_lemma2(inst).lhs, 1e-12);
}

TEST(Lemma2, UpToDegreeSixteen) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t n = 9 + s % 8;
    const auto inst = instance(sample_poly_zeros_in_disk(n, s), sample_admissible_operator(n, s + 1000),
                               {2.0, 1.0, 0.0, 0.0}, 0.0, 2);
    EXPECT_TRUE(check_lemma2(inst).pass) << "n=" << n << " seed " << s;
  }
}

TEST(Lemma3, SelfAndHalf) {
  const Polynomial F = sample_poly_zeros_in_disk(5, 6);
  const BnOperator op = sample_admissible_operator(5, 6);
  auto inst = instance(F, op, {2.0, 1.2, 0.5, 0.5}, 0.0, 2);
  auto r = check_lemma3(inst, F);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.extra["scaled_margin"].get<double>(), 0.0, 1e-15);
  inst.P = F * cplx(0.3, 0.4);
  r = check_lemma3(inst, F);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.lhs / r.rhs, 0.5, 1e-12);
}

TEST(Lemma3, RejectsUndominatedPair) {
  const Polynomial F = sample_poly_zeros_in_disk(3, 6);
  auto inst = instance(F * cplx(2.0), BnOperator::identity(3), {2.0, 1.0, 0.0, 0.0}, 0.0, 2);
  EXPECT_THROW(check_lemma3(inst, F), PreconditionError);
}

TEST(Lemma3prime, EqualityFamilyHasZeroM) {
  const auto inst = instance(binomial(unit(0.3), unit(1.1), 5), sample_admissible_operator(5, 2),
                             {2.0, 1.1, 0.2, 0.4}, 0.0, 2);
  const auto r = check_lemma3prime(inst);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.extra["m"].get<double>(), 0.0, 1e-9);
}

TEST(Lemma6, EtaSweepOnEqualityFamily) {
  for (double eta : {0.0, pi / 2, pi, 3 * pi / 2}) {
    const auto inst = instance(binomial(1.0, 1.0, 4), sample_admissible_operator(4, 9), {1.9, 1.3, 0.4i, 0.2},
                               0.0, 1.5);
    const auto r = check_lemma6(inst, eta);
    EXPECT_LE(std::abs(r.rel_slack), 1e-6) << "eta " << eta;
  }
}

TEST(Arestov, Examples) {
  auto inst = instance(Polynomial({2.0, 1.0}), BnOperator::identity(1), {2.0, 1.0, 0.0, 0.0}, 0.0, 2.0);
  const auto id = check_arestov(inst, GammaOperator::identity(1));
  EXPECT_NEAR(id.rel_slack, 0.0, 1e-14);
  const auto r = check_arestov(inst, GammaOperator::dilation(0.5, 1));
  EXPECT_NEAR(r.lhs, std::sqrt(4.25), 1e-12);
  EXPECT_NEAR(r.rhs, std::sqrt(5.0), 1e-12);
  try {
    check_arestov(inst, GammaOperator::custom({1.0, 0.5}));
    FAIL() << "custom gamma accepted";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("admissibility not certified"), std::string::npos);
  }
}

TEST(LemmaAbc, Examples) {
  auto r = check_lemma_abc(2.0, 0.5, 1.0, 0.0);
  EXPECT_EQ(r.lhs, r.rhs);
  r = check_lemma_abc(2.0, 1.0, 1.0, pi);
  EXPECT_NEAR(r.lhs, 1.0, 1e-15);
  EXPECT_NEAR(r.rhs, 1.0, 1e-15);
  EXPECT_TRUE(r.pass);
  r = check_lemma_abc(3.0, 1.0, 1.0, pi / 2);
  EXPECT_NEAR(r.lhs, 2 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(r.rhs, std::sqrt(10.0), 1e-14);
  EXPECT_THROW(check_lemma_abc(1.0, 1.0, 1.0, 0.0), PreconditionError);
}

TEST(Classical, ZygmundEqualityAtMonomial) {
  for (std::size_t n : {1u, 3u, 8u}) {
    const auto inst = instance(Polynomial::monomial(1.0, n, n), BnOperator::identity(n), {}, 0.0, 1.3);
    const auto r = check_classical("zygmund_1", inst);
    EXPECT_NEAR(r.lhs, static_cast<double>(n), 1e-9);
    EXPECT_NEAR(r.rhs, static_cast<double>(n), 1e-9);
  }
}

TEST(Classical, DeBruijnEqualityAtBinomial) {
  const auto inst = instance(binomial(1.0, 1.0, 7), BnOperator::identity(7), {}, 0.0, 2.0);
  EXPECT_LE(std::abs(check_classical("debruijn_3", inst).rel_slack), 1e-6);
}

TEST(Classical, UnknownId) {
  const auto inst = instance(binomial(1.0, 1.0, 2), BnOperator::identity(2), {}, 0.0, 2.0);
  EXPECT_THROW(check_classical("nope", inst), PreconditionError);
}

TEST(Dispatch, KnowsEveryStatement) {
  EXPECT_EQ(statement_ids().size(), 21u);
  EXPECT_TRUE(is_known_statement("classical:rahman_11"));
  EXPECT_FALSE(is_known_statement("t3"));
}

TEST(Rerun, ReproducesReportFromJson) {
  RunConfig cfg;
  cfg.seed = 5;
  for (const auto& id : statement_ids()) {
    for (std::size_t i = 0; i < 5; ++i) {
      const auto rec = run_trial(id, cfg, i);
      ASSERT_TRUE(rec.pass) << rec.line;
      const json j = json::parse(rec.line);
      const auto again = rerun(rec.line);
      EXPECT_NEAR(again.lhs, j["lhs"].get<double>(), 1e-9 * std::max(1.0, std::abs(again.lhs))) << id;
      EXPECT_NEAR(again.rhs, j["rhs"].get<double>(), 1e-9 * std::max(1.0, std::abs(again.rhs))) << id;
    }
  }
}
