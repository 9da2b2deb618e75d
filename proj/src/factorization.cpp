// SPDX-License-Identifier: MIT

#include "xop/factorization.hpp"

namespace xop {

FactorizationData factorize(const DiffOp2& t, const QuasiRational& phi,
                            const RationalFunc& b, const Rat& lambda0) {
  if (t.p.is_zero()) throw DomainError("operator must have order two");
  if (b.is_zero()) throw GaugeError("factorization gauge must be nonzero");
  if (phi.is_zero())
    throw EigenfunctionError("factorization eigenfunction must be nonzero");

  FactorizationData f;
  f.T = t;
  f.lambda0 = lambda0;
  f.phi = phi;
  f.b = b;
  f.w = phi.log_derivative();

  RationalFunc residual =
      t.p * (f.w.derivative() + f.w * f.w) + t.q * f.w + t.r - RationalFunc(lambda0);
  if (!residual.is_zero())
    throw EigenfunctionError("T(phi) - lambda0 phi has residual (" + residual.str() +
                             ") phi");

  f.b_hat = t.p / b;
  f.w_hat = -f.w - t.q / t.p + b.derivative() / b;
  f.A = FirstOrderOp{f.b, f.w};
  f.B = FirstOrderOp{f.b_hat, f.w_hat};
  if (!(compose(f.B, f.A).shift(RationalFunc(lambda0)) == t))
    throw ShapeError("factorization identity B A + lambda0 = T failed");
  f.partner = compose(f.A, f.B).shift(RationalFunc(lambda0));
  f.phi_hat = QuasiRational::from_log_derivative(f.w_hat);
  f.kind = classify(f);
  return f;
}

FactorizationKind classify(const FactorizationData& f) {
  if (f.phi.is_polynomial()) return FactorizationKind::state_deleting;
  if (f.phi_hat.is_polynomial()) return FactorizationKind::state_adding;
  return FactorizationKind::isospectral;
}

std::pair<QuasiRational, QuasiRational> dual_data(const FactorizationData& f,
                                                  const QuasiRational& W) {
  QuasiRational w_hat = W.mul(QuasiRational::from_rational(f.b_hat / f.b));
  QuasiRational phi_hat =
      W.mul(f.phi).mul(QuasiRational::from_rational(f.b_hat)).reciprocal();
  if (!phi_hat.proportional_to(f.phi_hat))
    throw ShapeError("1/(W phi b_hat) is not the dual eigenfunction; W is not the "
                     "weight of the factored operator");
  return {w_hat, phi_hat};
}

std::pair<MPFloat, MPFloat> norm_relation_check(const FactorizationData& f,
                                                const RationalPoly& y,
                                                const Rat& lambda_j,
                                                const QuasiRational& W,
                                                const QuasiRational& W_hat,
                                                const Interval& interval,
                                                double target_rel_err) {
  WeightedInterval wi = analyze_weight(W, interval);
  WeightedInterval wi_hat = analyze_weight(W_hat, interval);
  RationalFunc ay = f.A.apply(y);
  MPFloat lhs = inner_product(ay, ay, wi_hat, target_rel_err);
  MPFloat rhs =
      to_float<MPFloat>(f.lambda0 - lambda_j) * inner_product(y, y, wi, target_rel_err);
  return {lhs, rhs};
}

namespace {

bool rat_sqrt(const Rat& r, Rat& out) {
  if (r < 0) return false;
  Int n = numerator(r), d = denominator(r);
  Int sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  out = Rat(sn, sd);
  return true;
}

bool poly_sqrt(const RationalPoly& f, RationalPoly& out) {
  if (f.is_zero()) {
    out = RationalPoly();
    return true;
  }
  if (f.degree() % 2 != 0) return false;
  int m = f.degree() / 2;
  Rat lead;
  if (!rat_sqrt(f.leading(), lead)) return false;
  std::vector<Rat> s(m + 1);
  s[m] = lead;
  for (int k = m - 1; k >= 0; --k) {
    Rat acc = f.coeff(k + m);
    for (int i = k + 1; i < m; ++i) acc -= s[i] * s[k + m - i];
    s[k] = acc / (2 * s[m]);
  }
  out = RationalPoly(std::move(s));
  return out * out == f;
}

}  // namespace

RationalFunc shape_gauge(const RationalFunc& p, const QuasiRational& P_kappa,
                         const QuasiRational& P_hkappa) {
  QuasiRational ratio = P_kappa.div(P_hkappa).mul(QuasiRational::from_rational(p));
  if (!ratio.is_rational())
    throw ShapeError("p P_kappa / P_hkappa is not rational");
  RationalFunc b2 = ratio.as_rational();
  RationalPoly num, den;
  if (!poly_sqrt(b2.num(), num) || !poly_sqrt(b2.den(), den))
    throw ShapeError("p P_kappa / P_hkappa is not a square: " + b2.str());
  return RationalFunc(num, den);
}

RationalFunc apply_wronskian_form(const FactorizationData& f, const RationalPoly& y) {
  if (!f.phi.is_polynomial())
    throw RepresentationError("Wronskian form needs a polynomial eigenfunction");
  RationalFunc pi(f.phi.as_polynomial());
  return f.b / pi * wronskian2(pi, RationalFunc(y));
}

}  // namespace xop
