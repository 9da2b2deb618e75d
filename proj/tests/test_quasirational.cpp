// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "xop/quasirational.hpp"

using namespace xop;
using MP50 = boost::multiprecision::cpp_bin_float_50;

namespace {

RationalPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("intervals") {
  Interval iv = Interval::open(Rat(-1), Rat(1));
  CHECK(iv.midpoint() == Rat(0));
  CHECK(iv.contains(Rat(1, 2)));
  CHECK_FALSE(iv.contains(Rat(1)));
  CHECK(Interval::right_ray(Rat(0)).midpoint() == Rat(1));
  CHECK(Interval::right_ray(Rat(0)).contains(Rat(100)));
  CHECK(Interval::real_line().contains(Rat(-999)));
  CHECK_THROWS_AS(Interval::open(Rat(1), Rat(1)), DomainError);
}

TEST_CASE("construction and canonical form") {
  // x^2 (x - 3/2) with the rational roots pulled out of the polynomial part
  QuasiRational q = QuasiRational::from_poly(poly({0, 0, -3}) * Rat(1, 2) + poly({0, 0, 0, 1}));
  REQUIRE(q.factors().size() == 2);
  CHECK(q.factors()[0].root == Rat(0));
  CHECK(q.factors()[0].exponent == Rat(2));
  CHECK(q.factors()[1].root == Rat(3, 2));
  CHECK(q.is_polynomial());
  CHECK(q.as_polynomial() == poly({0, 0, -3}) * Rat(1, 2) + poly({0, 0, 0, 1}));

  // merging exponents at a shared root
  QuasiRational w;
  w.mul_power(Rat(1), Rat(1, 3), true).mul_power(Rat(1), Rat(2, 3), true);
  REQUIRE(w.factors().size() == 1);
  CHECK(w.factors()[0].exponent == Rat(1));
  CHECK_FALSE(w.factors()[0].flipped);  // integer exponents flip back, picking up the sign
  CHECK(w.constant() == Rat(-1));

  QuasiRational bad;
  bad.mul_power(Rat(1), Rat(1, 2), true);
  CHECK_THROWS_AS(bad.mul_power(Rat(1), Rat(1, 3), false), RepresentationError);

  CHECK(QuasiRational::constant(Rat(0)).is_zero());
  CHECK(QuasiRational::from_poly(RationalPoly()).is_zero());
}

TEST_CASE("logarithmic derivatives") {
  // (1-x)^a (1+x)^b  ->  -a/(1-x)... expressed over x^2 - 1
  Rat a(1, 3), b(-1, 2);
  QuasiRational w;
  w.mul_power(Rat(1), a, true).mul_power(Rat(-1), b, false);
  RationalFunc expect =
      RationalFunc(RationalPoly(a), poly({-1, 1})) + RationalFunc(RationalPoly(b), poly({1, 1}));
  CHECK(w.log_derivative() == expect);

  CHECK(QuasiRational().log_derivative().is_zero());
  QuasiRational c = QuasiRational::constant(Rat(7));
  CHECK(c.log_derivative().is_zero());

  QuasiRational lag;
  lag.mul_exp(-RationalPoly::x()).mul_power(Rat(0), Rat(2)).mul_rational(
      RationalFunc(RationalPoly(Rat(1)), poly({2, 1}) * poly({2, 1})));
  // w = -1 + 2/x - 2/(x+2)
  RationalFunc wlag = RationalFunc(RationalPoly(Rat(-1))) +
                      RationalFunc(RationalPoly(Rat(2)), RationalPoly::x()) -
                      RationalFunc(RationalPoly(Rat(2)), poly({2, 1}));
  CHECK(lag.log_derivative() == wlag);
}

TEST_CASE("reconstruction from a logarithmic derivative") {
  // k/x - 1 -> x^k exp(-x)
  RationalFunc w = RationalFunc(RationalPoly(Rat(2)), RationalPoly::x()) -
                   RationalFunc(RationalPoly(Rat(1)));
  QuasiRational f = QuasiRational::from_log_derivative(w);
  REQUIRE(f.factors().size() == 1);
  CHECK(f.factors()[0].root == Rat(0));
  CHECK(f.factors()[0].exponent == Rat(2));
  CHECK(f.exp_part() == -RationalPoly::x());
  CHECK(f.log_derivative() == w);

  // -2/(x-3) -> (x-3)^{-2}
  QuasiRational g = QuasiRational::from_log_derivative(
      RationalFunc(RationalPoly(Rat(-2)), poly({-3, 1})));
  REQUIRE(g.factors().size() == 1);
  CHECK(g.factors()[0].exponent == Rat(-2));

  CHECK(QuasiRational::from_log_derivative(RationalFunc()).as_constant() == Rat(1));

  // irreducible quadratic carrying an integer power
  RationalPoly u = poly({2, 0, 1});  // x^2 + 2
  RationalFunc wu = RationalFunc(u.derivative() * Rat(3), u);
  QuasiRational h = QuasiRational::from_log_derivative(wu);
  CHECK(h.rational_part() == RationalFunc(u * u * u));
  CHECK(h.log_derivative() == wu);

  // 1/(x^2+2) is not a logarithmic derivative of a quasi-rational
  CHECK_THROWS_AS(QuasiRational::from_log_derivative(
                      RationalFunc(RationalPoly(Rat(1)), u)),
                  RepresentationError);
  // double pole
  CHECK_THROWS_AS(QuasiRational::from_log_derivative(
                      RationalFunc(RationalPoly(Rat(1)), poly({0, 0, 1}))),
                  RepresentationError);

  // fractional exponents round-trip up to a constant
  Rat al(1, 3), be(-1, 2);
  QuasiRational weight;
  weight.mul_const(Rat(5)).mul_power(Rat(1), al, true).mul_power(Rat(-1), be);
  QuasiRational back = QuasiRational::from_log_derivative(weight.log_derivative());
  CHECK(back.proportional_to(weight));
  CHECK_FALSE(back.proportional_to(QuasiRational()));
}

TEST_CASE("multiplication, division and ratios") {
  QuasiRational a;
  a.mul_const(Rat(6)).mul_power(Rat(1), Rat(1, 2), true).mul_rational(
      RationalFunc(poly({2, 0, 1})));
  QuasiRational b;
  b.mul_const(Rat(2)).mul_power(Rat(1), Rat(1, 2), true);

  QuasiRational q = a.div(b);
  CHECK(q.factors().empty());
  CHECK(q.rational_part() == RationalFunc(poly({2, 0, 1})));
  CHECK(a.ratio_to(a.mul(QuasiRational::constant(Rat(1, 3)))) == Rat(3));
  CHECK(a.proportional_to(a.mul(QuasiRational::constant(Rat(-4)))));
  CHECK_THROWS_AS(a.ratio_to(b), RepresentationError);

  QuasiRational prod = a.mul(b);
  CHECK(prod.log_derivative() == a.log_derivative() + b.log_derivative());
  CHECK(a.div(a).as_constant() == Rat(1));

  // (1-x)/(x-1) collapses to the constant -1
  QuasiRational top;
  top.mul_power(Rat(1), Rat(1), true);
  QuasiRational bot;
  bot.mul_power(Rat(1), Rat(1), false);
  CHECK(top.ratio_to(bot) == Rat(-1));
}

TEST_CASE("evaluation and signs") {
  // e^{-x} x^2 / (x+2)^2 at x = 2: e^{-2}/4
  QuasiRational w;
  w.mul_exp(-RationalPoly::x()).mul_power(Rat(0), Rat(2)).mul_power(Rat(-2), Rat(-2));
  double v = w.eval_f<double>(2.0);
  CHECK(v == doctest::Approx(std::exp(-2.0) / 4).epsilon(1e-14));
  MP50 vmp = w.eval_f<MP50>(MP50(2));
  CHECK(static_cast<double>(vmp) == doctest::Approx(std::exp(-2.0) / 4).epsilon(1e-14));

  // 288^2 (1-x)^{1/3} (1+x)^{-1/2} / (7x^2+2x-41)^2 at 0: 288^2/1681
  QuasiRational wx;
  wx.mul_const(Rat(288 * 288))
      .mul_power(Rat(1), Rat(1, 3), true)
      .mul_power(Rat(-1), Rat(-1, 2))
      .mul_rational(RationalFunc(RationalPoly(Rat(1)), poly({-41, 2, 7}) * poly({-41, 2, 7})));
  CHECK(wx.eval_f<double>(0.0) == doctest::Approx(288.0 * 288.0 / 1681.0).epsilon(1e-14));
  CHECK(wx.sign_at(Rat(0)) == 1);
  CHECK(wx.sign_at(Rat(1, 2)) == 1);
  CHECK_THROWS_AS(wx.sign_at(Rat(2)), DomainError);   // negative base under 1/3 power
  CHECK_THROWS_AS(wx.eval_f<double>(2.0), DomainError);

  QuasiRational s = QuasiRational::from_poly(poly({0, 1}));
  CHECK(s.sign_at(Rat(-3)) == -1);
  CHECK(s.sign_at(Rat(0)) == 0);
  QuasiRational pole;
  pole.mul_power(Rat(0), Rat(-1));
  CHECK_THROWS_AS(pole.sign_at(Rat(0)), DomainError);
}

TEST_CASE("orientation for an interval") {
  QuasiRational w;
  w.mul_power(Rat(1), Rat(1, 3), false).mul_power(Rat(-1), Rat(-1, 2), true);
  w.orient(Interval::open(Rat(-1), Rat(1)));
  CHECK(w.factors()[0].root == Rat(-1));
  CHECK_FALSE(w.factors()[0].flipped);
  CHECK(w.factors()[1].root == Rat(1));
  CHECK(w.factors()[1].flipped);
  CHECK(w.sign_at(Rat(0)) == 1);
  CHECK(w.eval_f<double>(0.5) > 0);

  QuasiRational neg = QuasiRational::constant(Rat(-2));
  neg.orient(Interval::open(Rat(-1), Rat(1)));
  CHECK(neg.as_constant() == Rat(2));
}
