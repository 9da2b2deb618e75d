// SPDX-License-Identifier: MIT
//
// Classical Jacobi polynomials at generic rational parameters, built from
// the explicit sum
//
//   P_n^(a,b) = sum_s binom(n+a, n-s) binom(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s},
//
// which stays well-defined where the three-term recurrence degenerates.
// Alongside: the classical operator and its eigenvalues, the identity
// suite, norms, the raising/lowering ladder with the Rodrigues iteration,
// and the four quasi-rational eigenfunction seeds.

#pragma once

#include <array>

#include "xop/diffop.hpp"
#include "xop/quasirational.hpp"

namespace xop {

struct JacobiParams {
  Rat alpha, beta;
};

// Memoized; safe to call concurrently.
RationalPoly jacobi(int n, const JacobiParams& prm);

// T(y) = (1-x^2) y'' + (beta - alpha - (alpha+beta+2) x) y'
DiffOp2 classical_jacobi_op(const JacobiParams& prm);
Rat jacobi_eigenvalue(int n, const JacobiParams& prm);  // -n(n+alpha+beta+1)

// (1-x)^alpha (1+x)^beta
QuasiRational classical_weight(const JacobiParams& prm);

// Residuals of the five classical identities, in order: P_0 = 1, parity,
// (x-1) P_m' = (alpha+m) P_m^(alpha-1,beta+1) - alpha P_m, the derivative
// identity for P_n, and the parameter-difference identity for P_n.  All
// residuals are zero when the identities hold.
std::array<RationalPoly, 5> identity_suite(const JacobiParams& prm, int m, int n);

// Squared L2 norm of P_n against the classical weight; exact variant for
// nonnegative integer parameters.  The continued variant evaluates the
// same Gamma expression without the alpha, beta > -1 range check (the
// arguments may go negative, where the expression no longer is an
// integral).
Rat classical_norm_exact(int n, const JacobiParams& prm);
MPFloat classical_norm(int n, const JacobiParams& prm);
MPFloat classical_norm_continued(int n, const JacobiParams& prm);

// raise applies B(y) = (1-x^2) y' + (beta - alpha - (alpha+beta+2) x) y,
// sending eigenpolynomials of (alpha+1, beta+1) to (alpha, beta); lower is
// d/dx.  rodrigues(n) iterates raise n times from 1 and normalizes by
// (-2)^n n!, reproducing jacobi(n).
RationalPoly raise(const JacobiParams& prm, const RationalPoly& y);
RationalPoly lower(const RationalPoly& y);
RationalPoly rodrigues(int n, const JacobiParams& prm);

struct SeedPair {
  QuasiRational phi;
  Rat lambda;
};

// The four quasi-rational eigenfunctions of the classical operator built on
// index m; each pair is verified against the operator on construction.
std::array<SeedPair, 4> quasi_rational_seeds(const JacobiParams& prm, int m);

}  // namespace xop
