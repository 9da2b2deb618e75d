// SPDX-License-Identifier: MIT
#ifndef XOP_QUADRATURE_HPP
#define XOP_QUADRATURE_HPP

#include <vector>

#include "xop/diffop.hpp"
#include "xop/quasirational.hpp"

namespace xop {

// Gauss rule matched to a classical weight; nodes ascending.
struct QuadRule {
  std::vector<MPFloat> nodes;
  std::vector<MPFloat> weights;
};

// Rules are cached per (exponents, size); references stay valid for the
// lifetime of the program.
const QuadRule& gauss_jacobi_rule(const Rat& alpha, const Rat& beta, int n);
const QuadRule& gauss_laguerre_rule(const Rat& k, int n);

// A family weight split into its classical factor and the remaining smooth
// rational part, which must be positive and pole-free on the closed interval.
struct WeightedInterval {
  enum class Kind { jacobi, laguerre };
  Kind kind = Kind::jacobi;
  QuasiRational weight;
  Interval interval;
  Rat alpha;  // (1-x)^alpha, Kind::jacobi
  Rat beta;   // (1+x)^beta, Kind::jacobi
  Rat k;      // x^k e^{-x}, Kind::laguerre
  RationalFunc smooth = RationalFunc(Rat(1));
};

WeightedInterval analyze_weight(const QuasiRational& weight, const Interval& interval);

// Integral of f*g against the weight, by node doubling from 32 up to 4096
// points until two successive estimates agree to target_rel_err/10 relative
// to the L1 mass of the integrand.
MPFloat inner_product(const RationalFunc& f, const RationalFunc& g,
                      const WeightedInterval& wi, double target_rel_err = 1e-12);

using FloatPoly = std::vector<MPFloat>;  // coefficients, ascending

MPFloat eval_float_poly(const FloatPoly& c, const MPFloat& x);

enum class Normalization { value_at_one, monic };

// Orthogonalizes u_1, ..., u_{n_max} of the flag against the weight.  All
// arithmetic runs in extended precision; the whole pass is repeated with the
// rule size doubled until the coefficients settle to target_rel_err/10.
std::vector<FloatPoly> gram_schmidt(const Flag& flag, const WeightedInterval& wi,
                                    int n_max, Normalization rule,
                                    double target_rel_err = 1e-10);

}  // namespace xop

#endif
