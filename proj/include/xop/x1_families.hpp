// SPDX-License-Identifier: MIT
//
// The two codimension-1 families.  X1-Jacobi lives on (-1,1) with flag
// u_1 = x - c, u_i = (x - b)^i; X1-Laguerre lives on (0,inf) with flag
// v_1 = x + k + 1, v_i = (x + k)^i.  Both operators are specializations
// of the one-parameter-family operator attached to the flag {x+1, x^2, ...}.

#pragma once

#include "xop/diffop.hpp"
#include "xop/quasirational.hpp"

namespace xop {

struct X1JacobiParams {
  Rat alpha, beta;

  X1JacobiParams(const Rat& alpha_, const Rat& beta_);

  Rat a() const { return (beta - alpha) / 2; }
  Rat b() const { return (beta + alpha) / (beta - alpha); }  // |b| > 1
  Rat c() const { return b() + 2 / (beta - alpha); }
};

struct X1LaguerreParams {
  Rat k;

  explicit X1LaguerreParams(const Rat& k_);
};

Flag x1_jacobi_flag(const X1JacobiParams& prm);
// (x^2-1) y'' + 2a (1-bx)/(b-x) ((x-c) y' - y)
DiffOp2 x1_jacobi_op(const X1JacobiParams& prm);
// (1-x)^alpha (1+x)^beta / (x-b)^2
QuasiRational x1_jacobi_weight(const X1JacobiParams& prm);
Rat x1_jacobi_eigenvalue(int n, const X1JacobiParams& prm);  // (n-1)(alpha+beta+n)
// Degree-n member of the flag solving the eigenvalue relation, normalized by
// value n*binom(alpha+n-1, n) at x = 1; exact linear algebra inside U_n.
RationalPoly x1_jacobi_poly(const X1JacobiParams& prm, int n);

Flag x1_laguerre_flag(const X1LaguerreParams& prm);
// -x y'' + (x-k)/(x+k) ((x+k+1) y' - y)
DiffOp2 x1_laguerre_op(const X1LaguerreParams& prm);
// e^{-x} x^k / (x+k)^2
QuasiRational x1_laguerre_weight(const X1LaguerreParams& prm);
Rat x1_laguerre_eigenvalue(int n);  // n-1
// Normalized to leading coefficient (-1)^n/(n-1)!.
RationalPoly x1_laguerre_poly(const X1LaguerreParams& prm, int n);

// T(y) = (k2 x^2 + k1 x + k0) y'' - (x+1)(k1 + 2 k0/x) y' + (k1 + 2 k0/x) y,
// preserving {x+1, x^2, x^3, ...} for every parameter choice.
DiffOp2 general_codim1_op(const Rat& k0, const Rat& k1, const Rat& k2);

}  // namespace xop
