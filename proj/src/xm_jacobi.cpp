// SPDX-License-Identifier: MIT

#include "xop/xm_jacobi.hpp"

#include <string>
#include <utility>

namespace xop {

XmParams::XmParams(Rat alpha_, Rat beta_, int m_)
    : alpha(std::move(alpha_)), beta(std::move(beta_)), m(m_) {
  if (!(alpha > -1 && beta > -1))
    throw ParameterError("Xm-Jacobi parameters need alpha, beta > -1");
  if (m < 0) throw ParameterError("Xm-Jacobi index m must be nonnegative");
}

RationalPoly xi(const Rat& a, const Rat& b, int m) { return jacobi(m, {-a, b}); }

RationalFunc rho(const Rat& a, const Rat& b, int m) {
  RationalPoly p = xi(a, b, m);
  if (p.is_zero()) throw DegeneracyError("xi vanishes identically");
  return RationalFunc(p.derivative(), p);
}

AdmissibilityVerdict admissible(const XmParams& prm) {
  if (prm.m == 0) return {Admissibility::admissible, "m = 0 is the classical family"};
  const Rat &a = prm.alpha, &b = prm.beta;
  const int m = prm.m;
  Rat d = a - b - m + 1;
  if (is_integer(d) && d >= 0 && d < m)
    return {Admissibility::degenerate_degree,
            "alpha - beta - m + 1 = " + rat_string(d) + " lies in {0,...,m-1}: deg xi < m"};
  if (b == 0) return {Admissibility::boundary_root, "beta = 0: xi(-1) = 0"};
  if (is_integer(a) && a >= 0 && a < m)
    return {Admissibility::boundary_root,
            "alpha = " + rat_string(a) + " lies in {0,...,m-1}: xi(1) = 0"};
  bool interior_free = a > m - 2 && sgn(Rat(a - m + 1)) == sgn(b);
  int roots = sturm_count(xi(a + 1, b - 1, m), Rat(-1), Rat(1));
  if (interior_free != (roots == 0))
    throw Error("admissibility inequalities disagree with the Sturm count of xi (" +
                std::to_string(roots) + " interior roots)");
  if (!interior_free)
    return {Admissibility::interior_zero,
            "xi has " + std::to_string(roots) + " zero(s) in (-1,1)"};
  return {Admissibility::admissible, "xi has degree m and no zeros in [-1,1]"};
}

XmData xm_data(const XmParams& prm) {
  AdmissibilityVerdict v = admissible(prm);
  if (!v.ok()) throw ParameterError("inadmissible Xm-Jacobi parameters: " + v.reason);
  RationalPoly p = xi(prm.alpha + 1, prm.beta - 1, prm.m);
  QuasiRational w = classical_weight({prm.alpha, prm.beta})
                        .mul(QuasiRational::from_poly(p * p).reciprocal());
  return {prm, p, RationalFunc(p.derivative(), p), w};
}

FirstOrderOp xm_factor_a(const Rat& a, const Rat& b, int m) {
  RationalPoly p = xi(a, b, m);
  if (p.is_zero()) throw DegeneracyError("xi vanishes identically");
  RationalPoly gauge = RationalPoly(std::vector<Rat>{Rat(1), Rat(-1)}) * p;
  Rat c = a - m;
  return {RationalFunc(gauge), RationalFunc(c * xi(a + 1, b + 1, m), gauge)};
}

FirstOrderOp xm_factor_b(const Rat& a, const Rat& b, int m) {
  RationalPoly p = xi(a, b, m);
  if (p.is_zero()) throw DegeneracyError("xi vanishes identically");
  RationalPoly onepx(std::vector<Rat>{Rat(1), Rat(1)});
  return {RationalFunc(onepx, p), RationalFunc(RationalPoly(Rat(-1) - b), onepx)};
}

RationalPoly xm_poly(const XmParams& prm, int n) {
  if (n < prm.m) throw ParameterError("Xm-Jacobi polynomials start at degree n = m");
  AdmissibilityVerdict v = admissible(prm);
  if (v.verdict == Admissibility::boundary_root || v.verdict == Admissibility::interior_zero)
    throw ParameterError("inadmissible Xm-Jacobi parameters: " + v.reason);
  const int j = n - prm.m;
  Rat denom = prm.alpha + 1 + j;
  if (denom == 0) throw DivisibilityError("normalization constant alpha + 1 + j vanishes");
  const RationalPoly pj = jacobi(j, {prm.alpha + 1, prm.beta - 1});
  Rat c2 = Rat(prm.m) - prm.alpha - 1;
  RationalPoly res =
      RationalPoly(std::vector<Rat>{Rat(1), Rat(-1)}) * xi(prm.alpha + 1, prm.beta - 1, prm.m) *
          pj.derivative() +
      c2 * xi(prm.alpha + 2, prm.beta, prm.m) * pj;
  res *= (prm.m % 2 == 0 ? Rat(-1) : Rat(1)) / denom;  // (-1)^{m+1}
  if (v.ok() && res.degree() != n)
    throw Error("constructed Xm-Jacobi polynomial has degree " +
                std::to_string(res.degree()) + ", expected " + std::to_string(n));
  return res;
}

DiffOp2 xm_operator(const XmParams& prm) {
  Rat a = prm.alpha + 1, b = prm.beta - 1;
  if (xi(a, b, prm.m).is_zero())
    throw DegeneracyError("xi_{alpha+1,beta-1,m} vanishes identically");
  Rat c = (Rat(prm.m) - prm.alpha - 1) * (Rat(prm.m) + prm.beta);
  return compose(xm_factor_a(a, b, prm.m), xm_factor_b(a, b, prm.m)).shift(RationalFunc(-c));
}

Rat xm_eigenvalue(int n, const XmParams& prm) {
  if (n < prm.m) throw ParameterError("Xm-Jacobi polynomials start at degree n = m");
  Rat j = Rat(n - prm.m);
  return -j * (1 + prm.alpha + prm.beta + j);
}

QuasiRational xm_weight(const XmParams& prm) { return xm_data(prm).weight; }

MPFloat xm_norm(const XmParams& prm, int k) {
  if (k < 0) throw ParameterError("norm index k must be nonnegative");
  AdmissibilityVerdict v = admissible(prm);
  if (!v.ok()) throw ParameterError("inadmissible Xm-Jacobi parameters: " + v.reason);
  Rat num = (1 + prm.alpha + k - prm.m) * (prm.beta + prm.m + k);
  Rat den = (prm.alpha + 1 + k) * (prm.alpha + 1 + k);
  return to_float<MPFloat>(num / den) *
         classical_norm_continued(k, {prm.alpha + 1, prm.beta - 1});
}

FirstOrderOp xm_lower_op(const XmParams& prm) {
  RationalPoly x1 = xi(prm.alpha + 1, prm.beta - 1, prm.m);
  RationalPoly x2 = xi(prm.alpha + 2, prm.beta, prm.m);
  if (x1.is_zero() || x2.is_zero()) throw DegeneracyError("xi vanishes identically");
  return {RationalFunc(x2, x1), RationalFunc(x2.derivative(), x2)};
}

FirstOrderOp xm_raise_op(const XmParams& prm) {
  RationalPoly x1 = xi(prm.alpha + 1, prm.beta - 1, prm.m);
  RationalPoly x2 = xi(prm.alpha + 2, prm.beta, prm.m);
  if (x1.is_zero() || x2.is_zero()) throw DegeneracyError("xi vanishes identically");
  RationalPoly onemx(std::vector<Rat>{Rat(1), Rat(-1)}), onepx(std::vector<Rat>{Rat(1), Rat(1)});
  RationalFunc w = RationalFunc(x1.derivative(), x1) +
                   RationalFunc(RationalPoly(Rat(prm.alpha + 1)), onemx) -
                   RationalFunc(RationalPoly(Rat(prm.beta + 1)), onepx);
  return {RationalFunc(onemx * onepx * x1, x2), w};
}

namespace {

void require_ladder_params(const XmParams& prm) {
  AdmissibilityVerdict v = admissible(prm);
  if (!v.ok()) throw ParameterError("inadmissible Xm-Jacobi parameters: " + v.reason);
  AdmissibilityVerdict vs = admissible({prm.alpha + 1, prm.beta + 1, prm.m});
  if (!vs.ok()) throw ParameterError("inadmissible shifted Xm-Jacobi parameters: " + vs.reason);
}

}  // namespace

RationalFunc xm_raise(const XmParams& prm, const RationalPoly& y) {
  require_ladder_params(prm);
  return xm_raise_op(prm).apply(y);
}

RationalFunc xm_lower(const XmParams& prm, const RationalPoly& y) {
  require_ladder_params(prm);
  return xm_lower_op(prm).apply(y);
}

}  // namespace xop
