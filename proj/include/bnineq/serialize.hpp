#pragma once

// JSON encoding of polynomials, operators and instances. Complex numbers are
// [re, im] pairs; p = infinity is the string "inf" (JSON has no infinities).

#include <cmath>
#include <string>

#include <json.hpp>

#include "bnineq/bn_operator.hpp"
#include "bnineq/sampling.hpp"

namespace bnineq {

using json = nlohmann::json;

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          "json: complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json p_to_json(double p) { return std::isinf(p) ? json("inf") : json(p); }

inline double p_from_json(const json& j) {
  if (j.is_string()) {
    require(j.get<std::string>() == "inf", "json: p must be a number or \"inf\"");
    return kInf;
  }
  require(j.is_number(), "json: p must be a number or \"inf\"");
  return j.get<double>();
}

inline json to_json(const Polynomial& p) {
  json c = json::array();
  for (const auto& a : p.coeffs()) c.push_back(to_json(a));
  return {{"coeffs", c}, {"n", p.ambient_degree()}};
}

inline Polynomial polynomial_from_json(const json& j) {
  std::vector<cplx> c;
  for (const auto& a : j.at("coeffs")) c.push_back(complex_from_json(a));
  return Polynomial(std::move(c), j.at("n").get<std::size_t>());
}

inline json to_json(const BnOperator& op) {
  return {{"lambda", json::array({to_json(op.lambda0), to_json(op.lambda1), to_json(op.lambda2)})}, {"n", op.n}};
}

inline BnOperator operator_from_json(const json& j) {
  const auto& l = j.at("lambda");
  require(l.is_array() && l.size() == 3, "json: operator needs three lambda values");
  return {complex_from_json(l[0]), complex_from_json(l[1]), complex_from_json(l[2]), j.at("n").get<std::size_t>()};
}

inline json to_json(const GammaOperator& g) {
  json c = json::array();
  for (const auto& x : g.gamma) c.push_back(to_json(x));
  return {{"family", to_string(g.family)}, {"delta", to_json(g.delta)}, {"gamma", c}};
}

inline GammaOperator gamma_from_json(const json& j) {
  const auto family = j.at("family").get<std::string>();
  std::vector<cplx> g;
  for (const auto& x : j.at("gamma")) g.push_back(complex_from_json(x));
  require(!g.empty(), "json: empty gamma");
  const std::size_t n = g.size() - 1;
  const cplx delta = complex_from_json(j.at("delta"));
  if (family == "identity") return GammaOperator::identity(n);
  if (family == "dilation") return GammaOperator::dilation(delta, n);
  if (family == "reversed_dilation") return GammaOperator::reversed_dilation(delta, n);
  return GammaOperator::custom(std::move(g));
}

inline json to_json(const InequalityInstance& inst) {
  return {{"P", to_json(inst.P)},
          {"op", to_json(inst.op)},
          {"R", inst.params.R},
          {"r", inst.params.r},
          {"alpha", to_json(inst.params.alpha)},
          {"beta", to_json(inst.params.beta)},
          {"delta", to_json(inst.delta)},
          {"p", p_to_json(inst.p)},
          {"seed", inst.seed}};
}

inline InequalityInstance instance_from_json(const json& j) {
  InequalityInstance inst;
  inst.P = polynomial_from_json(j.at("P"));
  inst.op = operator_from_json(j.at("op"));
  inst.params.R = j.at("R").get<double>();
  inst.params.r = j.at("r").get<double>();
  inst.params.alpha = complex_from_json(j.at("alpha"));
  inst.params.beta = complex_from_json(j.at("beta"));
  inst.delta = complex_from_json(j.at("delta"));
  inst.p = p_from_json(j.at("p"));
  inst.seed = j.at("seed").get<std::uint64_t>();
  return inst;
}

}  // namespace bnineq
