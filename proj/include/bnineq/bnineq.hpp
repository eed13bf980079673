#pragma once

#include "bnineq/core.hpp"
#include "bnineq/rng.hpp"
#include "bnineq/polynomial.hpp"
#include "bnineq/roots.hpp"
#include "bnineq/quadrature.hpp"
#include "bnineq/circle_extrema.hpp"
#include "bnineq/circle_norms.hpp"
#include "bnineq/bn_operator.hpp"
#include "bnineq/sampling.hpp"
#include "bnineq/serialize.hpp"
#include "bnineq/verify.hpp"
#include "bnineq/harness.hpp"
#include "bnineq/search.hpp"
#include "bnineq/oracle.hpp"
#include "bnineq/parse.hpp"
