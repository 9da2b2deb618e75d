// SPDX-License-Identifier: MIT
//
// The exceptional Xm-Jacobi family: the xi polynomials and their log
// derivatives, parameter admissibility with an exact Sturm cross-check,
// the polynomial construction through the first-order factor A, the Xm
// operator, weight, norms, and the shape-invariant raising/lowering
// ladder.  m = 0 collapses to the classical family.

#pragma once

#include <string>

#include "xop/classical.hpp"
#include "xop/diffop.hpp"

namespace xop {

struct XmParams {
  Rat alpha, beta;
  int m;

  XmParams(Rat alpha_, Rat beta_, int m_);  // requires alpha, beta > -1, m >= 0
};

// xi_{a,b,m} = P_m^{(-a,b)} and rho_{a,b,m} = xi'/xi.
RationalPoly xi(const Rat& a, const Rat& b, int m);
RationalFunc rho(const Rat& a, const Rat& b, int m);

enum class Admissibility { admissible, degenerate_degree, boundary_root, interior_zero };

struct AdmissibilityVerdict {
  Admissibility verdict = Admissibility::admissible;
  std::string reason;

  bool ok() const { return verdict == Admissibility::admissible; }
};

// Checks, in order: deg xi_{alpha+1,beta-1,m} = m, xi(+-1) != 0, and no
// zeros of xi inside (-1,1).  The last condition is decided by the sign
// inequalities and cross-checked by exact Sturm root counting; any
// disagreement between the two is a hard error.
AdmissibilityVerdict admissible(const XmParams& prm);

struct XmData {
  XmParams params;
  RationalPoly xi;       // xi_{alpha+1,beta-1,m}
  RationalFunc rho;      // xi'/xi
  QuasiRational weight;  // (1-x)^alpha (1+x)^beta / xi^2
};
// ParameterError unless admissible.
XmData xm_data(const XmParams& prm);

// First-order factors of the isospectral factorization
//   T_{a,b} = B_{a,b,m} A_{a,b,m} - (m-a)(m+b+1):
// A(y) = (1-x) xi_{a,b,m} y' + (m-a) xi_{a+1,b+1,m} y and
// B(y) = ((1+x) y' + (1+b) y) / xi_{a,b,m}.
FirstOrderOp xm_factor_a(const Rat& a, const Rat& b, int m);
FirstOrderOp xm_factor_b(const Rat& a, const Rat& b, int m);

// P_hat_n = ((-1)^{m+1}/(alpha+1+j)) A_{alpha+1,beta-1,m}(P_j^{(alpha+1,beta-1)})
// with j = n - m >= 0.  Degenerate-degree parameters are allowed (the
// family collapses); boundary-root and interior-zero ones are rejected.
RationalPoly xm_poly(const XmParams& prm, int n);

// T_{alpha,beta,m} = A_{alpha+1,beta-1,m} B_{alpha+1,beta-1,m} - (m-alpha-1)(m+beta)
DiffOp2 xm_operator(const XmParams& prm);
Rat xm_eigenvalue(int n, const XmParams& prm);  // -(n-m)(1+alpha+beta+n-m)
QuasiRational xm_weight(const XmParams& prm);

// Squared L2 norm of P_hat_{m+k} against the Xm weight:
//   ((1+alpha+k-m)(beta+m+k)/(alpha+1+k)^2) N^{alpha+1,beta-1}_k,
// where N is the classical norm expression continued past beta = 0.
MPFloat xm_norm(const XmParams& prm, int k);

// State-deleting shape ladder.  xm_lower_op builds
//   A_hat(y) = (xi_{alpha+2,beta,m}/xi_{alpha+1,beta-1,m}) (y' - rho_{alpha+2,beta,m} y),
// xm_raise_op its factorization partner B_hat with
//   T_{alpha,beta,m} = B_hat A_hat and T_{alpha+1,beta+1,m} = A_hat B_hat + alpha+beta+2.
// Raising maps the (alpha+1,beta+1,m) family into (alpha,beta,m), lowering
// the reverse; both require the shifted parameters admissible too.
FirstOrderOp xm_lower_op(const XmParams& prm);
FirstOrderOp xm_raise_op(const XmParams& prm);
RationalFunc xm_raise(const XmParams& prm, const RationalPoly& y);
RationalFunc xm_lower(const XmParams& prm, const RationalPoly& y);

}  // namespace xop
