// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xop/classical.hpp"
#include "xop/quadrature.hpp"

using namespace xop;

namespace {

RationalPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("explicit sum basics") {
  CHECK(jacobi(0, {Rat(5), Rat(-7, 3)}) == RationalPoly(Rat(1)));
  CHECK(jacobi(2, {Rat(0), Rat(0)}) == poly({-1, 0, 3}) / Rat(2));

  // value at 1
  JacobiParams prm{Rat(5, 4), Rat(1, 2)};
  for (int n = 0; n <= 8; ++n)
    CHECK(jacobi(n, prm).eval(Rat(1)) == gen_binomial(prm.alpha + n, n));

  // P_1 at the shifted parameters vanishes at b = (beta+alpha)/(beta-alpha)
  Rat a(1), b(2);
  CHECK(jacobi(1, {-a - 1, b - 1}).eval((b + a) / (b - a)) == 0);

  CHECK_THROWS_AS(jacobi(-1, prm), ParameterError);
}

TEST_CASE("eigenrelation of the classical operator") {
  for (const JacobiParams& prm :
       {JacobiParams{Rat(0), Rat(0)}, JacobiParams{Rat(1), Rat(2)},
        JacobiParams{Rat(1, 3), Rat(-1, 2)}, JacobiParams{Rat(5, 4), Rat(1, 2)},
        JacobiParams{Rat(-2, 7), Rat(9, 5)}}) {
    DiffOp2 t = classical_jacobi_op(prm);
    for (int n = 0; n <= 12; ++n) {
      RationalPoly pn = jacobi(n, prm);
      CHECK(t.apply(pn) == RationalFunc(pn * jacobi_eigenvalue(n, prm)));
    }
  }
  CHECK(jacobi_eigenvalue(2, {Rat(0), Rat(0)}) == -6);
  CHECK(jacobi_eigenvalue(3, {Rat(1), Rat(2)}) == -21);

  JacobiParams deep{Rat(1, 3), Rat(2, 5)};
  RationalPoly p30 = jacobi(30, deep);
  CHECK(classical_jacobi_op(deep).apply(p30) ==
        RationalFunc(p30 * jacobi_eigenvalue(30, deep)));
}

TEST_CASE("identity suite vanishes at generic parameters") {
  for (const JacobiParams& prm : {JacobiParams{Rat(1, 3), Rat(-1, 2)},
                                  JacobiParams{Rat(-5, 3), Rat(7, 4)}}) {
    for (int n = 0; n <= 10; ++n) {
      auto res = identity_suite(prm, n / 2, n);
      for (const RationalPoly& r : res) CHECK(r.is_zero());
    }
  }
}

TEST_CASE("three-term recurrence cross-check") {
  JacobiParams prm{Rat(1, 2), Rat(3, 2)};
  const Rat &a = prm.alpha, &b = prm.beta;
  for (int n = 2; n <= 15; ++n) {
    Rat s = 2 * n + a + b;
    RationalPoly lhs = jacobi(n, prm) * (2 * n * (n + a + b) * (s - 2));
    RationalPoly mid = RationalPoly(std::vector<Rat>{a * a - b * b, s * (s - 2)}) *
                       jacobi(n - 1, prm) * (s - 1);
    RationalPoly low = jacobi(n - 2, prm) * (2 * (n + a - 1) * (n + b - 1) * s);
    CHECK(lhs == mid - low);
  }
}

TEST_CASE("norms") {
  CHECK(classical_norm_exact(0, {Rat(0), Rat(0)}) == 2);
  CHECK(classical_norm_exact(1, {Rat(0), Rat(0)}) == Rat(2, 3));
  CHECK(classical_norm_exact(0, {Rat(1), Rat(0)}) == 2);
  CHECK_THROWS_AS(classical_norm_exact(0, {Rat(1, 2), Rat(0)}), DomainError);
  CHECK_THROWS_AS(classical_norm(0, {Rat(-3, 2), Rat(0)}), DomainError);

  // against quadrature at fractional parameters
  JacobiParams prm{Rat(1, 2), Rat(1, 3)};
  WeightedInterval wi =
      analyze_weight(classical_weight(prm), Interval::open(Rat(-1), Rat(1)));
  for (int n = 0; n <= 4; ++n) {
    MPFloat direct = inner_product(jacobi(n, prm), jacobi(n, prm), wi);
    CHECK(static_cast<double>(abs(direct / classical_norm(n, prm) - 1)) < 1e-30);
  }

  // alpha + beta = -1 at n = 0: the formula continues to Gamma(alpha+beta+2)
  MPFloat n0 = classical_norm(0, {Rat(-1, 2), Rat(-1, 2)});
  CHECK(static_cast<double>(abs(n0 - boost::math::constants::pi<MPFloat>())) < 1e-40);
}

TEST_CASE("orthogonality by quadrature") {
  for (const JacobiParams& prm : {JacobiParams{Rat(0), Rat(0)},
                                  JacobiParams{Rat(1, 2), Rat(3, 2)},
                                  JacobiParams{Rat(1), Rat(2)}}) {
    WeightedInterval wi =
        analyze_weight(classical_weight(prm), Interval::open(Rat(-1), Rat(1)));
    std::vector<MPFloat> norms;
    for (int n = 0; n <= 6; ++n)
      norms.push_back(sqrt(inner_product(jacobi(n, prm), jacobi(n, prm), wi)));
    for (int m = 0; m <= 6; ++m)
      for (int n = m + 1; n <= 6; ++n) {
        MPFloat off = inner_product(jacobi(m, prm), jacobi(n, prm), wi);
        CHECK(static_cast<double>(abs(off) / static_cast<double>(norms[m] * norms[n])) <
              1e-10);
      }
  }
}

TEST_CASE("ladder and Rodrigues iteration") {
  JacobiParams prm{Rat(1, 3), Rat(-1, 2)};
  const Rat &a = prm.alpha, &b = prm.beta;
  for (int n = 0; n <= 8; ++n) {
    CHECK(raise(prm, jacobi(n, {a + 1, b + 1})) == jacobi(n + 1, prm) * Rat(-2 * (n + 1)));
    if (n >= 1)
      CHECK(lower(jacobi(n, prm)) == jacobi(n - 1, {a + 1, b + 1}) * ((1 + a + b + n) / 2));
  }

  // B A = T and A B = T_{+1} - (a+b+2) acting on eigenpolynomials
  for (int n = 1; n <= 5; ++n) {
    CHECK(raise(prm, lower(jacobi(n, prm))) == jacobi(n, prm) * jacobi_eigenvalue(n, prm));
    RationalPoly up = jacobi(n, {a + 1, b + 1});
    CHECK(lower(raise(prm, up)) ==
          up * (jacobi_eigenvalue(n, {a + 1, b + 1}) - (a + b + 2)));
  }

  CHECK(rodrigues(0, prm) == RationalPoly(Rat(1)));
  CHECK(rodrigues(3, {Rat(0), Rat(0)}) == jacobi(3, {Rat(0), Rat(0)}));
  CHECK(rodrigues(5, prm) == jacobi(5, prm));
}

TEST_CASE("quasi-rational seeds") {
  JacobiParams prm{Rat(1, 2), Rat(1, 3)};
  auto seeds = quasi_rational_seeds(prm, 2);

  CHECK(seeds[0].phi.is_polynomial());
  CHECK(seeds[0].phi.as_polynomial() == jacobi(2, prm));
  CHECK(seeds[0].lambda == jacobi_eigenvalue(2, prm));
  CHECK(seeds[1].lambda == 3 * (prm.alpha + prm.beta - 2));
  CHECK(seeds[2].lambda == (1 + prm.beta + 2) * (prm.alpha - 2));
  CHECK(seeds[3].lambda == (1 + prm.alpha + 2) * (prm.beta - 2));

  // the phi_3 seed carries the (1-x)^{-alpha} factor
  QuasiRational expect = QuasiRational::from_poly(jacobi(2, {-prm.alpha, prm.beta}))
                             .mul_power(Rat(1), -prm.alpha, true);
  CHECK(seeds[2].phi.proportional_to(expect));

  auto trivial = quasi_rational_seeds(prm, 0);
  CHECK(trivial[0].phi.is_constant());
  CHECK(trivial[0].lambda == 0);
  CHECK(trivial[1].lambda == prm.alpha + prm.beta);
}
