// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xop/diffop.hpp"

using namespace xop;

namespace {

RationalPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

RationalFunc rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RationalFunc(poly(num), poly(den));
}

// y'' - 2y'/x, preserving 1, x^2, x^3, ...
DiffOp2 half_harmonic() { return {RationalFunc(Rat(1)), rf({-2}, {0, 1}), RationalFunc()}; }

// y'' - 2(1 + 1/x)y' + (2/x)y, preserving x+1, x^2, x^3, ...
DiffOp2 shifted_codim1() {
  return {RationalFunc(Rat(1)), rf({-2, -2}, {0, 1}), rf({2}, {0, 1})};
}

Flag standard_flag() {
  return Flag{[](int k) { return RationalPoly::monomial(k - 1); }};
}

Flag hermite_flag() {
  return Flag{[](int k) {
    RationalPoly prev(Rat(1)), cur = RationalPoly::x();
    for (int n = 1; n < k; ++n) {
      RationalPoly next = RationalPoly::x() * cur - prev * Rat(n);
      prev = cur;
      cur = next;
    }
    return cur;
  }};
}

Flag codim2_flag() {
  return Flag{[](int k) {
    if (k == 1) return RationalPoly(Rat(1));
    int n = k + 1;
    if (n % 2 == 1) return RationalPoly::monomial(n) - RationalPoly::monomial(1, Rat(n));
    return RationalPoly::monomial(n) - RationalPoly::monomial(2, Rat(n / 2));
  }};
}

}  // namespace

TEST_CASE("application of second-order operators") {
  // Legendre operator on P2 = (3x^2-1)/2
  DiffOp2 legendre{RationalFunc(poly({1, 0, -1})), RationalFunc(poly({0, -2})),
                   RationalFunc()};
  RationalPoly p2 = poly({-1, 0, 3}) / Rat(2);
  CHECK(legendre.apply(p2) == RationalFunc(p2 * Rat(-6)));

  DiffOp2 t = half_harmonic();
  CHECK(t.apply(poly({0, 0, 1})) == RationalFunc(Rat(-2)));
  CHECK(t.apply(poly({0, 0, 0, 1})).is_zero());
  CHECK(t.apply(RationalPoly(Rat(1))).is_zero());

  CHECK((t - t).is_zero());
  CHECK(t.shift(RationalFunc(Rat(5))).apply(RationalPoly(Rat(1))) == RationalFunc(Rat(5)));
  CHECK((Rat(2) * t).apply(poly({0, 0, 1})) == RationalFunc(Rat(-4)));
}

TEST_CASE("first-order factors and composition") {
  FirstOrderOp outer{RationalFunc(RationalPoly::x()), RationalFunc(Rat(1))};
  FirstOrderOp inner{RationalFunc(Rat(1)), RationalFunc(RationalPoly::x())};

  DiffOp2 t = compose(outer, inner);
  CHECK(t.p == RationalFunc(RationalPoly::x()));
  CHECK(t.q == RationalFunc(poly({0, -1, -1})));
  CHECK(t.r == RationalFunc(poly({0, -1, 1})));

  RationalPoly y = poly({0, 2, 0, 1});
  CHECK(t.apply(y) == outer.apply(inner.apply(y)));

  CHECK(wronskian2(RationalFunc(RationalPoly::x()), RationalFunc(poly({0, 0, 1}))) ==
        RationalFunc(poly({0, 0, 1})));
}

TEST_CASE("gauge and affine transforms") {
  DiffOp2 d2{RationalFunc(Rat(1)), RationalFunc(), RationalFunc()};
  DiffOp2 conj = gauge_transform(d2, RationalFunc(RationalPoly::x()));
  CHECK(conj.p == RationalFunc(Rat(1)));
  CHECK(conj.q == rf({-2}, {0, 1}));
  CHECK(conj.r == rf({2}, {0, 0, 1}));

  // conjugation is consistent with application: (g T g^{-1})(y) = g T(y/g)
  RationalFunc g(RationalPoly::x());
  RationalPoly y = poly({1, 0, 2, 1});
  CHECK(conj.apply(y) == g * d2.apply(RationalFunc(y) / g));
  // and inverts
  CHECK(gauge_transform(conj, RationalFunc(Rat(1)) / g) == d2);
  CHECK_THROWS_AS(gauge_transform(d2, RationalFunc()), GaugeError);

  CHECK(affine_transform(d2, Rat(2), Rat(1)).p == RationalFunc(Rat(1, 4)));
  // x -> -x maps the Jacobi operator at (a, b) to the one at (b, a)
  Rat a(1, 2), b(-1, 3);
  auto jac = [](const Rat& al, const Rat& be) {
    return DiffOp2{RationalFunc(poly({1, 0, -1})),
                   RationalFunc(RationalPoly(std::vector<Rat>{be - al, -(al + be + 2)})),
                   RationalFunc()};
  };
  CHECK(affine_transform(jac(a, b), Rat(-1), Rat(0)) == jac(b, a));
}

TEST_CASE("pole reports") {
  CHECK(poles(shifted_codim1()).rational_poles == std::vector<Rat>{Rat(0)});
  CHECK(poles(shifted_codim1()).irreducible.empty());
  CHECK(poles(shifted_codim1()).real_pole_count() == 1);

  DiffOp2 legendre{RationalFunc(poly({1, 0, -1})), RationalFunc(poly({0, -2})),
                   RationalFunc()};
  CHECK(poles(legendre).polynomial_coefficients());

  // x y'' - 2(1 + 2/(x^2-1)) y'
  DiffOp2 t2{RationalFunc(RationalPoly::x()), rf({-2, 0, -2}, {-1, 0, 1}), RationalFunc()};
  CHECK(poles(t2).rational_poles == std::vector<Rat>{Rat(-1), Rat(1)});

  DiffOp2 irr{RationalFunc(Rat(1)), rf({1}, {2, 0, 1}), rf({1}, {-2, 0, 1})};
  PoleReport rep = poles(irr);
  CHECK(rep.rational_poles.empty());
  REQUIRE(rep.irreducible.size() == 2);
  CHECK(rep.irreducible[0].second == 0);  // x^2 + 2
  CHECK(rep.irreducible[1].second == 2);  // x^2 - 2
  CHECK(rep.real_pole_count() == 2);
}

TEST_CASE("degree decomposition") {
  DiffOp2 hermite{RationalFunc(Rat(1)), RationalFunc(-RationalPoly::x()), RationalFunc()};
  auto terms = degree_decomposition(hermite);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].d == -2);
  CHECK(terms[0].alpha == Rat(1));
  CHECK(terms[0].beta == Rat(0));
  CHECK(terms[1].d == 0);
  CHECK(terms[1].beta == Rat(-1));

  DiffOp2 sum;
  for (const auto& term : terms) sum = sum + term_operator(term);
  CHECK(sum == hermite);

  // a degree-homogeneous term sends x^n to a multiple of x^{n+d}
  DegreeTerm lower{-2, Rat(1), Rat(0), Rat(0)};
  CHECK(term_operator(lower).apply(RationalPoly::monomial(5)) ==
        RationalFunc(RationalPoly::monomial(3, Rat(20))));

  auto mixed = degree_decomposition(half_harmonic());
  REQUIRE(mixed.size() == 1);
  CHECK(mixed[0].d == -2);
  CHECK(mixed[0].alpha == Rat(1));
  CHECK(mixed[0].beta == Rat(-2));

  CHECK(degree_decomposition(DiffOp2{}).empty());
  DiffOp2 bad{rf({1}, {-1, 1}), RationalFunc(), RationalFunc()};
  CHECK_THROWS_AS(degree_decomposition(bad), DecompositionError);
}

TEST_CASE("flag invariance certificates") {
  // semi-stable codimension-1 flag 1, x^2, x^3, ...
  Flag gapped{[](int k) { return RationalPoly::monomial(k == 1 ? 0 : k); }};
  CHECK(gapped.codim(1) == 0);
  CHECK(gapped.codim(2) == 1);
  CHECK(gapped.codim(5) == 1);
  auto cert = preserves_flag(half_harmonic(), gapped, 12);
  CHECK(cert.ok);
  CHECK(cert.checked_up_to == 12);
  CHECK(cert.failing_k == 0);

  // the same operator does not act on the standard flag
  auto fail = preserves_flag(half_harmonic(), standard_flag(), 12);
  CHECK_FALSE(fail.ok);
  CHECK(fail.failing_k == 2);
  CHECK_FALSE(fail.residual.is_polynomial());

  // stable codimension-1 flag x+1, x^2, x^3, ...
  Flag shifted{[](int k) {
    return k == 1 ? poly({1, 1}) : RationalPoly::monomial(k);
  }};
  CHECK(shifted.codim(1) == 1);
  CHECK(shifted.codim(7) == 1);
  CHECK(preserves_flag(shifted_codim1(), shifted, 12).ok);

  // Hermite flag: preserved, but so is the standard flag
  DiffOp2 hermite{RationalFunc(Rat(1)), RationalFunc(-RationalPoly::x()), RationalFunc()};
  CHECK(preserves_flag(hermite, hermite_flag(), 10).ok);
  CHECK(preserves_flag(hermite, standard_flag(), 10).ok);
  CHECK(hermite_flag().codim(4) == 1);

  // imprimitive flag x, x^2, ... as a conjugation of the free operator
  DiffOp2 d2{RationalFunc(Rat(1)), RationalFunc(), RationalFunc()};
  DiffOp2 conj = gauge_transform(d2, RationalFunc(RationalPoly::x()));
  Flag primitive_less{[](int k) { return RationalPoly::monomial(k); }};
  CHECK(preserves_flag(conj, primitive_less, 12).ok);

  // polynomial image outside the span
  auto off = preserves_flag(d2, primitive_less, 12);
  CHECK_FALSE(off.ok);
  CHECK(off.failing_k == 2);
  CHECK(off.residual == RationalFunc(Rat(2)));

  Flag bad_degrees{[](int k) { return poly({1, 1}) * Rat(k); }};
  CHECK_THROWS_AS(preserves_flag(d2, bad_degrees, 3), ShapeError);
}

TEST_CASE("codimension-2 flag of the three commuting operators") {
  Flag flag = codim2_flag();
  CHECK(flag.degree_sequence(4) == std::vector<int>{0, 3, 4, 5});
  CHECK(flag.codim(1) == 0);
  CHECK(flag.codim(2) == 2);
  CHECK(flag.codim(6) == 2);

  DiffOp2 t3{RationalFunc(poly({-1, 0, 1})), RationalFunc(poly({0, -2})), RationalFunc()};
  DiffOp2 t2{RationalFunc(RationalPoly::x()), rf({-2, 0, -2}, {-1, 0, 1}), RationalFunc()};
  DiffOp2 t1{RationalFunc(Rat(1)), rf({0, -5, 0, 1}, {-1, 0, 1}), RationalFunc()};

  CHECK(preserves_flag(t3, flag, 12).ok);
  CHECK(preserves_flag(t2, flag, 12).ok);
  CHECK(preserves_flag(t1, flag, 12).ok);

  // T1 and T2 do not preserve the standard flag
  CHECK_FALSE(preserves_flag(t1, standard_flag(), 12).ok);
  CHECK_FALSE(preserves_flag(t2, standard_flag(), 12).ok);
  CHECK(preserves_flag(t3, standard_flag(), 12).ok);
}

TEST_CASE("operator reconstruction by Cramer's rule") {
  std::array<RationalPoly, 3> basis{RationalPoly(Rat(1)), RationalPoly::x(),
                                    RationalPoly::monomial(2)};
  DiffOp2 rec = reconstruct_operator(
      basis, {RationalPoly(), RationalPoly(), RationalPoly(Rat(2))});
  CHECK(rec == DiffOp2{RationalFunc(Rat(1)), RationalFunc(), RationalFunc()});

  DiffOp2 t{RationalFunc(poly({-1, 0, 1})), RationalFunc(RationalPoly::x()),
            RationalFunc(Rat(3))};
  std::array<RationalPoly, 3> images;
  for (int i = 0; i < 3; ++i) images[i] = t.apply(basis[i]).as_polynomial();
  CHECK(reconstruct_operator(basis, images) == t);

  // shifted basis, rational coefficient operator
  std::array<RationalPoly, 3> shifted{poly({1, 1}), RationalPoly::monomial(2),
                                      RationalPoly::monomial(3)};
  DiffOp2 s = shifted_codim1();
  std::array<RationalPoly, 3> simages;
  for (int i = 0; i < 3; ++i) simages[i] = s.apply(shifted[i]).as_polynomial();
  CHECK(reconstruct_operator(shifted, simages) == s);

  CHECK_THROWS_AS(reconstruct_operator({RationalPoly(Rat(1)), RationalPoly::x(), poly({1, 1})},
                                       {RationalPoly(), RationalPoly(), RationalPoly()}),
                  SingularSystemError);
}

TEST_CASE("order-reduced bases") {
  std::vector<RationalPoly> span{poly({1, 1}), RationalPoly::monomial(2),
                                 RationalPoly::monomial(3), RationalPoly::monomial(4),
                                 RationalPoly::monomial(5)};
  OrderReducedBasis basis = order_reduced_basis(span, 5);
  CHECK(basis.n == 5);
  CHECK(basis.gap == 1);
  REQUIRE(basis.corrections.size() == 5);
  CHECK(basis.corrections[0] == std::make_pair(0, Rat(1)));
  CHECK(basis.corrections[1] == std::make_pair(2, Rat(0)));

  std::vector<RationalPoly> low{RationalPoly::x(), RationalPoly::monomial(2),
                                RationalPoly::monomial(3), RationalPoly::monomial(4),
                                RationalPoly::monomial(5)};
  CHECK(order_reduced_basis(low, 5).gap == 0);

  std::vector<RationalPoly> top{RationalPoly(Rat(1)), RationalPoly::x(),
                                RationalPoly::monomial(2), RationalPoly::monomial(3),
                                RationalPoly::monomial(4)};
  CHECK(order_reduced_basis(top, 5).gap == 5);

  std::vector<RationalPoly> dep{poly({1, 1}), poly({2, 2}), RationalPoly::monomial(2),
                                RationalPoly::monomial(3), RationalPoly::monomial(4)};
  CHECK_THROWS_AS(order_reduced_basis(dep, 5), ShapeError);
  CHECK_THROWS_AS(order_reduced_basis(span, 4), ShapeError);
}

TEST_CASE("Sturm-Liouville data") {
  // Jacobi operator at (1/2, 1/3)
  Rat al(1, 2), be(1, 3);
  DiffOp2 jac{RationalFunc(poly({1, 0, -1})),
              RationalFunc(RationalPoly(std::vector<Rat>{be - al, -(al + be + 2)})),
              RationalFunc()};
  PSLPData slp = pslp_data(jac, Interval::open(Rat(-1), Rat(1)));
  CHECK_FALSE(slp.sign_flipped);
  CHECK(slp.R.is_zero());

  QuasiRational w_expect;
  w_expect.mul_power(Rat(1), al, true).mul_power(Rat(-1), be);
  CHECK(slp.W.ratio_to(w_expect) == Rat(1));
  QuasiRational p_expect;
  p_expect.mul_power(Rat(1), al + 1, true).mul_power(Rat(-1), be + 1);
  CHECK(slp.P.ratio_to(p_expect) == Rat(1));
  CHECK(slp.P.sign_at(Rat(0)) == 1);
  CHECK(slp.W.sign_at(Rat(1, 2)) == 1);
  // W * p = P with the sign-normalized leading coefficient
  CHECK(slp.W.mul(QuasiRational::from_rational(jac.p)).ratio_to(slp.P) == Rat(1));

  // X1-Laguerre operator at k = 2: the leading coefficient -x is negative
  Rat k(2);
  RationalPoly xk = poly({2, 1});
  DiffOp2 lag{RationalFunc(-RationalPoly::x()),
              RationalFunc(poly({-2, 1}) * poly({3, 1}), xk),
              RationalFunc(-poly({-2, 1}), xk)};
  PSLPData lslp = pslp_data(lag, Interval::right_ray(Rat(0)));
  CHECK(lslp.sign_flipped);
  QuasiRational lw;
  lw.mul_exp(-RationalPoly::x()).mul_power(Rat(0), k).mul_power(Rat(-2), Rat(-2));
  CHECK(lslp.W.ratio_to(lw) == Rat(1));
  CHECK(lslp.W.mul(QuasiRational::from_rational(-lag.p)).ratio_to(lslp.P) == Rat(1));
  CHECK(lslp.R.ratio_to(lslp.W.mul(QuasiRational::from_rational(
            RationalFunc(-poly({-2, 1}), xk)))) == Rat(1));

  DiffOp2 vanishing{RationalFunc(RationalPoly::x()), RationalFunc(), RationalFunc()};
  CHECK_THROWS_AS(pslp_data(vanishing, Interval::open(Rat(-1), Rat(1))), DomainError);
}
