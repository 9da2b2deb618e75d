// SPDX-License-Identifier: MIT
//
// Second-order linear differential operators with rational coefficients,
//
//   T(y) = p y'' + q y' + r y,
//
// first-order factors b(x)(d/dx - w(x)), and the structural machinery
// around them: polynomial flags with invariance certificates, operator
// reconstruction from prescribed images, gauge and affine changes of
// variable, pole reports, degree decompositions and the data of the
// associated Sturm-Liouville problem.

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "xop/quasirational.hpp"

namespace xop {

struct DiffOp2 {
  RationalFunc p, q, r;

  RationalFunc apply(const RationalPoly& y) const;
  RationalFunc apply(const RationalFunc& y) const;

  bool is_zero() const { return p.is_zero() && q.is_zero() && r.is_zero(); }
  bool operator==(const DiffOp2& o) const { return p == o.p && q == o.q && r == o.r; }

  DiffOp2 operator-() const { return {-p, -q, -r}; }
  friend DiffOp2 operator+(const DiffOp2& a, const DiffOp2& b) {
    return {a.p + b.p, a.q + b.q, a.r + b.r};
  }
  friend DiffOp2 operator-(const DiffOp2& a, const DiffOp2& b) {
    return {a.p - b.p, a.q - b.q, a.r - b.r};
  }
  friend DiffOp2 operator*(const Rat& s, const DiffOp2& a) {
    RationalFunc f(s);
    return {f * a.p, f * a.q, f * a.r};
  }
  // T + c (a multiple of the identity)
  DiffOp2 shift(const RationalFunc& c) const { return {p, q, r + c}; }

  std::string str() const;
};

// A(y) = gauge * (y' - logderiv * y)
struct FirstOrderOp {
  RationalFunc gauge;
  RationalFunc logderiv;

  RationalFunc apply(const RationalPoly& y) const;
  RationalFunc apply(const RationalFunc& y) const;
};

// outer(inner(y)) expanded to a second-order operator
DiffOp2 compose(const FirstOrderOp& outer, const FirstOrderOp& inner);

RationalFunc wronskian2(const RationalFunc& f, const RationalFunc& g);

// Conjugation g T g^{-1}; g must be nonzero.
DiffOp2 gauge_transform(const DiffOp2& t, const RationalFunc& g);
// Change of variable x -> s*x + t (the operator acts on y(s*x + t)).
DiffOp2 affine_transform(const DiffOp2& op, const Rat& s, const Rat& t);

struct PoleReport {
  std::vector<Rat> rational_poles;  // sorted, distinct
  // monic factors without rational roots, with their distinct real root counts
  std::vector<std::pair<RationalPoly, int>> irreducible;

  bool polynomial_coefficients() const {
    return rational_poles.empty() && irreducible.empty();
  }
  // total number of distinct real poles
  int real_pole_count() const;
};
PoleReport poles(const DiffOp2& t);

// T_d(y) = x^d (alpha x^2 y'' + beta x y' + gamma y)
struct DegreeTerm {
  int d;
  Rat alpha, beta, gamma;
};
// Splits T into degree-homogeneous terms; DecompositionError if any
// coefficient has a pole away from 0.
std::vector<DegreeTerm> degree_decomposition(const DiffOp2& t);
DiffOp2 term_operator(const DegreeTerm& term);

// Polynomial flag u_1, u_2, ... with strictly increasing degrees.
struct Flag {
  std::function<RationalPoly(int)> gen;  // 1-indexed

  RationalPoly basis(int k) const;
  std::vector<int> degree_sequence(int kmax) const;
  // codimension of span{u_1..u_k} inside the polynomials of degree deg u_k
  int codim(int k) const;
};

struct InvarianceCertificate {
  bool ok = true;
  int checked_up_to = 0;
  int failing_k = 0;      // 0 when ok
  RationalFunc residual;  // nonzero part of T(u_k) outside span{u_1..u_k}
};
InvarianceCertificate preserves_flag(const DiffOp2& t, const Flag& flag, int kmax);

// Unique operator with T(y_i) = g_i, obtained by Cramer's rule; the y_i
// must have a nonvanishing Wronskian.
DiffOp2 reconstruct_operator(const std::array<RationalPoly, 3>& y,
                             const std::array<RationalPoly, 3>& g);

// Codimension-one subspace of the degree-n polynomials, written in reduced
// echelon form: basis x^j + a_j x^gap over the degrees j != gap.
struct OrderReducedBasis {
  int n = 0;
  int gap = 0;
  std::vector<std::pair<int, Rat>> corrections;  // (degree j, a_j)
};
OrderReducedBasis order_reduced_basis(const std::vector<RationalPoly>& span, int n);

// Data of the equivalent Sturm-Liouville problem -(P y')' + R y = lambda W y
// on the given interval, with P and W positive near the midpoint. When the
// sign flip is set, the problem corresponds to -T rather than T.
struct PSLPData {
  QuasiRational P, W, R;
  Interval interval;
  bool sign_flipped = false;
};
PSLPData pslp_data(const DiffOp2& t, const Interval& iv);

}  // namespace xop
