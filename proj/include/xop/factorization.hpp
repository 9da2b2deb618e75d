// SPDX-License-Identifier: MIT
//
// Rational factorizations T = B A + lambda0 of a second-order operator,
// built from a factorization eigenfunction phi and a gauge b:
//
//   w = phi'/phi,  A(y) = b (y' - w y),
//   w_hat = -w - q/p + b'/b,  b_hat = p/b,  B(y) = b_hat (y' - w_hat y),
//
// with the partner operator A B + lambda0, the dual weight and dual
// eigenfunction, the deleting/adding/isospectral classification, the
// quadrature check of the norm relation, and the gauge square root used
// by shape invariance.

#pragma once

#include <utility>

#include "xop/diffop.hpp"
#include "xop/quadrature.hpp"
#include "xop/quasirational.hpp"

namespace xop {

enum class FactorizationKind { state_deleting, state_adding, isospectral };

struct FactorizationData {
  DiffOp2 T;
  Rat lambda0;
  QuasiRational phi;
  RationalFunc w;
  RationalFunc b;
  FirstOrderOp A;
  FirstOrderOp B;
  DiffOp2 partner;
  RationalFunc b_hat;
  RationalFunc w_hat;
  QuasiRational phi_hat;
  FactorizationKind kind = FactorizationKind::isospectral;
};

// Verifies T(phi) = lambda0 phi exactly, then builds the factorization and
// checks the operator identity B A + lambda0 = T symbolically.
FactorizationData factorize(const DiffOp2& t, const QuasiRational& phi,
                            const RationalFunc& b, const Rat& lambda0);

FactorizationKind classify(const FactorizationData& f);

// For W the weight of t on its interval: the partner weight W_hat = W b_hat/b
// and the dual eigenfunction phi_hat = 1/(W phi b_hat).  The latter must have
// logarithmic derivative w_hat; a mismatch means W was not the weight of t.
std::pair<QuasiRational, QuasiRational> dual_data(const FactorizationData& f,
                                                  const QuasiRational& W);

// Both sides of  int A(y)^2 W_hat = (lambda0 - lambda_j) int y^2 W  for an
// eigenpolynomial y of t with eigenvalue lambda_j.
std::pair<MPFloat, MPFloat> norm_relation_check(const FactorizationData& f,
                                                const RationalPoly& y,
                                                const Rat& lambda_j,
                                                const QuasiRational& W,
                                                const QuasiRational& W_hat,
                                                const Interval& interval,
                                                double target_rel_err = 1e-10);

// Exact square root b of p P_kappa / P_hkappa = b^2, sign fixed by a positive
// leading coefficient; throws ShapeError when the ratio is not a square.
RationalFunc shape_gauge(const RationalFunc& p, const QuasiRational& P_kappa,
                         const QuasiRational& P_hkappa);

// A(y) written as (b/pi) (pi y' - pi' y) for polynomial phi = pi; agrees with
// A.apply wherever both forms are defined.
RationalFunc apply_wronskian_form(const FactorizationData& f, const RationalPoly& y);

}  // namespace xop
