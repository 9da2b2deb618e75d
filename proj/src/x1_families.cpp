// SPDX-License-Identifier: MIT

#include "xop/x1_families.hpp"

#include <string>

namespace xop {

X1JacobiParams::X1JacobiParams(const Rat& alpha_, const Rat& beta_)
    : alpha(alpha_), beta(beta_) {
  if (alpha == beta) throw ParameterError("X1-Jacobi needs alpha != beta");
  if (!(alpha > -1 && beta > -1))
    throw ParameterError("X1-Jacobi needs alpha, beta > -1");
  if (!(alpha * beta > 0))
    throw ParameterError("X1-Jacobi needs alpha and beta strictly of one sign");
}

X1LaguerreParams::X1LaguerreParams(const Rat& k_) : k(k_) {
  if (!(k > 0)) throw ParameterError("X1-Laguerre needs k > 0");
}

Flag x1_jacobi_flag(const X1JacobiParams& prm) {
  Rat b = prm.b(), c = prm.c();
  return Flag{[b, c](int i) {
    if (i == 1) return RationalPoly(std::vector<Rat>{-c, 1});
    RationalPoly base(std::vector<Rat>{-b, 1});
    RationalPoly acc(Rat(1));
    for (int j = 0; j < i; ++j) acc = acc * base;
    return acc;
  }};
}

DiffOp2 x1_jacobi_op(const X1JacobiParams& prm) {
  Rat a = prm.a(), b = prm.b(), c = prm.c();
  RationalFunc factor(RationalPoly(std::vector<Rat>{2 * a, -2 * a * b}),
                      RationalPoly(std::vector<Rat>{b, -1}));
  return {RationalFunc(RationalPoly(std::vector<Rat>{-1, 0, 1})),
          factor * RationalFunc(RationalPoly(std::vector<Rat>{-c, 1})), -factor};
}

QuasiRational x1_jacobi_weight(const X1JacobiParams& prm) {
  QuasiRational w;
  w.mul_power(Rat(1), prm.alpha, true)
      .mul_power(Rat(-1), prm.beta)
      .mul_power(prm.b(), Rat(-2));
  return w;
}

Rat x1_jacobi_eigenvalue(int n, const X1JacobiParams& prm) {
  return (n - 1) * (prm.alpha + prm.beta + n);
}

Flag x1_laguerre_flag(const X1LaguerreParams& prm) {
  Rat k = prm.k;
  return Flag{[k](int i) {
    if (i == 1) return RationalPoly(std::vector<Rat>{k + 1, 1});
    RationalPoly base(std::vector<Rat>{k, 1});
    RationalPoly acc(Rat(1));
    for (int j = 0; j < i; ++j) acc = acc * base;
    return acc;
  }};
}

DiffOp2 x1_laguerre_op(const X1LaguerreParams& prm) {
  const Rat& k = prm.k;
  RationalFunc factor(RationalPoly(std::vector<Rat>{-k, 1}),
                      RationalPoly(std::vector<Rat>{k, 1}));
  return {RationalFunc(-RationalPoly::x()),
          factor * RationalFunc(RationalPoly(std::vector<Rat>{k + 1, 1})), -factor};
}

QuasiRational x1_laguerre_weight(const X1LaguerreParams& prm) {
  QuasiRational w;
  w.mul_exp(-RationalPoly::x()).mul_power(Rat(0), prm.k).mul_power(-prm.k, Rat(-2));
  return w;
}

Rat x1_laguerre_eigenvalue(int n) { return n - 1; }

DiffOp2 general_codim1_op(const Rat& k0, const Rat& k1, const Rat& k2) {
  if (k0 == 0 && k1 == 0 && k2 == 0)
    throw ParameterError("at least one coefficient must be nonzero");
  RationalFunc s(RationalPoly(std::vector<Rat>{2 * k0, k1}), RationalPoly::x());
  return {RationalFunc(RationalPoly(std::vector<Rat>{k0, k1, k2})),
          -RationalFunc(RationalPoly(std::vector<Rat>{1, 1})) * s, s};
}

namespace {

RationalPoly flag_eigen_poly(const DiffOp2& t, const Flag& flag, int n, const Rat& lambda,
                             const std::string& family) {
  std::vector<RationalPoly> basis;
  for (int j = 1; j <= n; ++j) basis.push_back(flag.basis(j));

  Matrix mat(n + 1, std::vector<Rat>(n, Rat(0)));
  for (int j = 0; j < n; ++j) {
    RationalPoly img = t.apply(basis[j]).as_polynomial() - basis[j] * lambda;
    if (img.degree() > n)
      throw ShapeError(family + " operator leaves the flag truncation");
    for (int i = 0; i <= img.degree(); ++i) mat[i][j] = img.coeff(i);
  }
  auto kernel = kernel_basis(mat);
  if (kernel.size() != 1)
    throw DegeneracyError(family + " eigenspace at n=" + std::to_string(n) +
                          " has dimension " + std::to_string(kernel.size()));
  RationalPoly p;
  for (int j = 0; j < n; ++j) p = p + basis[j] * kernel[0][j];
  if (p.degree() != n)
    throw DegeneracyError(family + " eigenpolynomial at n=" + std::to_string(n) +
                          " degenerates to degree " + std::to_string(p.degree()));
  return p;
}

}  // namespace

RationalPoly x1_jacobi_poly(const X1JacobiParams& prm, int n) {
  if (n < 1) throw ParameterError("X1 families start at degree 1");
  RationalPoly p = flag_eigen_poly(x1_jacobi_op(prm), x1_jacobi_flag(prm), n,
                                   x1_jacobi_eigenvalue(n, prm), "X1-Jacobi");
  Rat v = p.eval(Rat(1));
  if (v == 0) throw DegeneracyError("X1-Jacobi eigenpolynomial vanishes at x=1");
  return p * (n * gen_binomial(prm.alpha + n - 1, n) / v);
}

RationalPoly x1_laguerre_poly(const X1LaguerreParams& prm, int n) {
  if (n < 1) throw ParameterError("X1 families start at degree 1");
  RationalPoly p = flag_eigen_poly(x1_laguerre_op(prm), x1_laguerre_flag(prm), n,
                                   x1_laguerre_eigenvalue(n), "X1-Laguerre");
  return p * (rat_pow(Rat(-1), n) / (factorial(n - 1) * p.leading()));
}

}  // namespace xop
