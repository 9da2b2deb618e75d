// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "xop/factorization.hpp"

using namespace xop;

namespace {

const Rat al(1, 2), be(1, 3);

DiffOp2 jacobi_op(const Rat& a, const Rat& b) {
  return {RationalFunc(RationalPoly(std::vector<Rat>{1, 0, -1})),
          RationalFunc(RationalPoly(std::vector<Rat>{b - a, -(a + b + 2)})),
          RationalFunc()};
}

QuasiRational jacobi_weight(const Rat& a, const Rat& b) {
  QuasiRational w;
  w.mul_power(Rat(1), a, true).mul_power(Rat(-1), b);
  return w;
}

RationalPoly jacobi_p1(const Rat& a, const Rat& b) {
  return RationalPoly(std::vector<Rat>{(a - b) / 2, (a + b + 2) / 2});
}

RationalPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, max_deg);
  std::vector<Rat> c(deg(rng) + 1);
  for (auto& v : c) v = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("state-deleting ladder factorization of the Jacobi operator") {
  DiffOp2 t = jacobi_op(al, be);
  FactorizationData f = factorize(t, QuasiRational(), RationalFunc(Rat(1)), Rat(0));

  CHECK(f.kind == FactorizationKind::state_deleting);
  CHECK(f.w.is_zero());
  CHECK(f.A.apply(RationalPoly::x()) == RationalFunc(Rat(1)));
  CHECK(f.b_hat == t.p);
  // B(y) = p y' + q y
  CHECK(f.B.apply(RationalPoly::x()) == t.p + t.q * RationalFunc(RationalPoly::x()));
  // the partner is the parameter-shifted operator minus alpha+beta+2
  CHECK(f.partner.shift(RationalFunc(al + be + 2)) == jacobi_op(al + 1, be + 1));

  // intertwining partner(A(y)) = A(T(y))
  std::mt19937 rng(42);
  for (int i = 0; i < 10; ++i) {
    RationalPoly y = random_poly(rng, 10);
    CHECK(f.partner.apply(f.A.apply(y)) == f.A.apply(t.apply(y)));
  }

  auto [w_hat, phi_hat] = dual_data(f, jacobi_weight(al, be));
  CHECK(w_hat.ratio_to(jacobi_weight(al + 1, be + 1)) == Rat(1));
  QuasiRational expect_dual;
  expect_dual.mul_power(Rat(1), -al - 1).mul_power(Rat(-1), -be - 1);
  CHECK(phi_hat.proportional_to(expect_dual));
  CHECK(f.phi_hat.proportional_to(expect_dual));

  // wrong spectral shift and degenerate inputs
  CHECK_THROWS_AS(factorize(t, QuasiRational(), RationalFunc(Rat(1)), Rat(1)),
                  EigenfunctionError);
  CHECK_THROWS_AS(factorize(t, QuasiRational(), RationalFunc(), Rat(0)), GaugeError);
  CHECK_THROWS_AS(factorize(t, QuasiRational::constant(Rat(0)), RationalFunc(Rat(1)),
                            Rat(0)),
                  EigenfunctionError);
}

TEST_CASE("polynomial eigenfunction and the Wronskian form of A") {
  DiffOp2 t = jacobi_op(al, be);
  RationalPoly p1 = jacobi_p1(al, be);
  Rat lambda1 = -(al + be + 2);
  FactorizationData f =
      factorize(t, QuasiRational::from_poly(p1), RationalFunc(Rat(1)), lambda1);
  CHECK(f.kind == FactorizationKind::state_deleting);
  CHECK(f.A.apply(p1).is_zero());

  std::mt19937 rng(7);
  for (int i = 0; i < 5; ++i) {
    RationalPoly y = random_poly(rng, 8);
    CHECK(apply_wronskian_form(f, y) == f.A.apply(y));
  }

  QuasiRational phi2;
  phi2.mul_power(Rat(1), -al, true).mul_power(Rat(-1), -be);
  FactorizationData adding = factorize(
      t, phi2, RationalFunc(RationalPoly(std::vector<Rat>{1, 0, -1})), al + be);
  CHECK_THROWS_AS(apply_wronskian_form(adding, RationalPoly::x()), RepresentationError);
}

TEST_CASE("state-adding factorization from the inverted-weight eigenfunction") {
  DiffOp2 t = jacobi_op(al, be);
  QuasiRational phi2;
  phi2.mul_power(Rat(1), -al, true).mul_power(Rat(-1), -be);
  RationalFunc b(RationalPoly(std::vector<Rat>{1, 0, -1}));
  FactorizationData f = factorize(t, phi2, b, al + be);

  CHECK(f.w_hat.is_zero());
  CHECK(f.b_hat == RationalFunc(Rat(1)));
  CHECK(f.phi_hat.is_constant());
  CHECK(f.kind == FactorizationKind::state_adding);
}

TEST_CASE("isospectral factorization seeded at m = 1") {
  DiffOp2 t = jacobi_op(al, be);
  // xi = P_1^(-alpha, beta)
  RationalPoly xi = jacobi_p1(-al, be);
  QuasiRational phi3 = QuasiRational::from_poly(xi).mul_power(Rat(1), -al, true);
  RationalFunc b(RationalPoly(std::vector<Rat>{1, -1}) * xi);
  Rat lambda0 = -(1 - al) * (1 + be + 1);
  FactorizationData f = factorize(t, phi3, b, lambda0);

  CHECK(f.kind == FactorizationKind::isospectral);
  QuasiRational expect_dual;
  expect_dual.mul_power(Rat(-1), -1 - be);
  CHECK(f.phi_hat.proportional_to(expect_dual));

  auto [w_hat, phi_hat] = dual_data(f, jacobi_weight(al, be));
  QuasiRational expect_w = jacobi_weight(al - 1, be + 1).mul(
      QuasiRational::from_rational(RationalFunc(xi * xi)).reciprocal());
  CHECK(w_hat.ratio_to(expect_w) == Rat(1));
  CHECK(phi_hat.proportional_to(expect_dual));

  // a wrong weight is rejected
  CHECK_THROWS_AS(dual_data(f, jacobi_weight(al + 1, be)), ShapeError);
}

TEST_CASE("norm relation by quadrature") {
  DiffOp2 t = jacobi_op(al, be);
  FactorizationData f = factorize(t, QuasiRational(), RationalFunc(Rat(1)), Rat(0));
  QuasiRational w = jacobi_weight(al, be);
  QuasiRational w_hat = dual_data(f, w).first;
  Interval iv = Interval::open(Rat(-1), Rat(1));

  RationalPoly p1 = jacobi_p1(al, be);
  Rat lambda1 = -(al + be + 2);
  auto [lhs, rhs] = norm_relation_check(f, p1, lambda1, w, w_hat, iv);
  CHECK(static_cast<double>(abs(lhs / rhs - 1)) < 1e-8);

  auto [zl, zr] = norm_relation_check(f, RationalPoly(Rat(1)), Rat(0), w, w_hat, iv);
  CHECK(static_cast<double>(abs(zl)) == 0);
  CHECK(static_cast<double>(abs(zr)) == 0);
}

TEST_CASE("shape gauge square roots") {
  RationalFunc p(RationalPoly(std::vector<Rat>{1, 0, -1}));
  QuasiRational pk, phk;
  pk.mul_power(Rat(1), al + 1, true).mul_power(Rat(-1), be + 1);
  phk.mul_power(Rat(1), al + 2, true).mul_power(Rat(-1), be + 2);
  CHECK(shape_gauge(p, pk, phk) == RationalFunc(Rat(1)));

  // b^2 = x^2 (x+1)^2 / (x-2)^2
  RationalPoly num = RationalPoly::x() * RationalPoly(std::vector<Rat>{1, 1});
  RationalPoly den(std::vector<Rat>{-2, 1});
  QuasiRational ratio = QuasiRational::from_rational(RationalFunc(num * num, den * den));
  CHECK(shape_gauge(RationalFunc(Rat(1)), ratio, QuasiRational()) ==
        RationalFunc(num, den));

  CHECK_THROWS_AS(shape_gauge(RationalFunc(Rat(1)),
                              QuasiRational::from_poly(RationalPoly::x()),
                              QuasiRational()),
                  ShapeError);
  QuasiRational nonrat;
  nonrat.mul_power(Rat(1), Rat(1, 2), true);
  CHECK_THROWS_AS(shape_gauge(RationalFunc(Rat(1)), nonrat, QuasiRational()), ShapeError);
}
