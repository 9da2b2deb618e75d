// SPDX-License-Identifier: MIT

#include "xop/diffop.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace xop {

RationalFunc DiffOp2::apply(const RationalPoly& y) const {
  return apply(RationalFunc(y));
}

RationalFunc DiffOp2::apply(const RationalFunc& y) const {
  RationalFunc y1 = y.derivative();
  return p * y1.derivative() + q * y1 + r * y;
}

std::string DiffOp2::str() const {
  return "(" + p.str() + ") y'' + (" + q.str() + ") y' + (" + r.str() + ") y";
}

RationalFunc FirstOrderOp::apply(const RationalPoly& y) const {
  return apply(RationalFunc(y));
}

RationalFunc FirstOrderOp::apply(const RationalFunc& y) const {
  return gauge * (y.derivative() - logderiv * y);
}

DiffOp2 compose(const FirstOrderOp& outer, const FirstOrderOp& inner) {
  const RationalFunc& bo = outer.gauge;
  const RationalFunc& wo = outer.logderiv;
  const RationalFunc& bi = inner.gauge;
  const RationalFunc& wi = inner.logderiv;
  RationalFunc biwi = bi * wi;
  return {bo * bi, bo * (bi.derivative() - biwi - wo * bi),
          bo * (-biwi.derivative() + wo * biwi)};
}

RationalFunc wronskian2(const RationalFunc& f, const RationalFunc& g) {
  return f * g.derivative() - f.derivative() * g;
}

DiffOp2 gauge_transform(const DiffOp2& t, const RationalFunc& g) {
  if (g.is_zero()) throw GaugeError("zero gauge factor");
  RationalFunc lg = g.derivative() / g;
  RationalFunc l2 = g.derivative().derivative() / g;
  return {t.p, t.q - RationalFunc(Rat(2)) * t.p * lg,
          t.r - t.q * lg + t.p * (RationalFunc(Rat(2)) * lg * lg - l2)};
}

DiffOp2 affine_transform(const DiffOp2& op, const Rat& s, const Rat& t) {
  if (s == 0) throw ParameterError("affine change of variable with zero slope");
  RationalFunc s1(Rat(1) / s), s2(Rat(1) / (s * s));
  return {op.p.compose_affine(s, t) * s2, op.q.compose_affine(s, t) * s1,
          op.r.compose_affine(s, t)};
}

int PoleReport::real_pole_count() const {
  int n = static_cast<int>(rational_poles.size());
  for (const auto& [factor, roots] : irreducible) n += roots;
  return n;
}

PoleReport poles(const DiffOp2& t) {
  std::set<Rat> roots;
  std::vector<std::pair<RationalPoly, int>> irreducible;
  for (const RationalFunc* f : {&t.p, &t.q, &t.r}) {
    const RationalPoly& den = f->den();
    if (den.degree() == 0) continue;
    RootSplit split = rational_roots(den);
    for (const auto& root : split.roots) roots.insert(root.first);
    if (split.cofactor.degree() > 0) {
      for (const auto& part : squarefree_decomposition(split.cofactor)) {
        const RationalPoly& factor = part.first;
        bool seen = false;
        for (const auto& existing : irreducible)
          if (existing.first == factor) {
            seen = true;
            break;
          }
        if (!seen) irreducible.emplace_back(factor, sturm_count_all(factor));
      }
    }
  }
  PoleReport report;
  report.rational_poles.assign(roots.begin(), roots.end());
  report.irreducible = std::move(irreducible);
  return report;
}

namespace {

// Laurent coefficients of f whose denominator must be a power of x.
std::map<int, Rat> laurent(const RationalFunc& f) {
  const RationalPoly& den = f.den();
  for (int i = 0; i < den.degree(); ++i)
    if (den.coeff(i) != 0)
      throw DecompositionError("coefficient with a pole away from 0: " + f.str());
  int shift = den.degree();
  std::map<int, Rat> out;
  for (int i = 0; i <= f.num().degree(); ++i)
    if (f.num().coeff(i) != 0) out[i - shift] = f.num().coeff(i);
  return out;
}

}  // namespace

std::vector<DegreeTerm> degree_decomposition(const DiffOp2& t) {
  std::map<int, DegreeTerm> terms;
  auto slot = [&](int d) -> DegreeTerm& {
    auto it = terms.find(d);
    if (it == terms.end()) it = terms.emplace(d, DegreeTerm{d, Rat(0), Rat(0), Rat(0)}).first;
    return it->second;
  };
  for (const auto& [k, c] : laurent(t.p)) slot(k - 2).alpha = c;
  for (const auto& [k, c] : laurent(t.q)) slot(k - 1).beta = c;
  for (const auto& [k, c] : laurent(t.r)) slot(k).gamma = c;

  std::vector<DegreeTerm> out;
  for (const auto& [d, term] : terms) out.push_back(term);
  return out;
}

DiffOp2 term_operator(const DegreeTerm& term) {
  auto monom = [](int e, const Rat& c) -> RationalFunc {
    if (c == 0) return RationalFunc();
    if (e >= 0) return RationalFunc(RationalPoly::monomial(e, c));
    return RationalFunc(RationalPoly(c), RationalPoly::monomial(-e));
  };
  return {monom(term.d + 2, term.alpha), monom(term.d + 1, term.beta),
          monom(term.d, term.gamma)};
}

RationalPoly Flag::basis(int k) const {
  if (k < 1) throw DomainError("flag indices start at 1");
  RationalPoly u = gen(k);
  if (u.is_zero()) throw ShapeError("flag element " + std::to_string(k) + " is zero");
  return u;
}

std::vector<int> Flag::degree_sequence(int kmax) const {
  std::vector<int> out;
  for (int k = 1; k <= kmax; ++k) out.push_back(basis(k).degree());
  return out;
}

int Flag::codim(int k) const { return basis(k).degree() + 1 - k; }

InvarianceCertificate preserves_flag(const DiffOp2& t, const Flag& flag, int kmax) {
  InvarianceCertificate cert;
  cert.checked_up_to = kmax;
  std::vector<RationalPoly> basis;
  for (int k = 1; k <= kmax; ++k) {
    basis.push_back(flag.basis(k));
    if (k > 1 && basis[k - 1].degree() <= basis[k - 2].degree())
      throw ShapeError("flag degrees must increase strictly");
    RationalFunc image = t.apply(basis.back());
    if (!image.is_polynomial()) {
      cert.ok = false;
      cert.failing_k = k;
      cert.residual = image;
      return cert;
    }
    RationalPoly rem = image.as_polynomial();
    for (int j = k - 1; j >= 0; --j) {
      const RationalPoly& u = basis[j];
      if (!rem.is_zero() && rem.degree() == u.degree())
        rem -= u * (rem.leading() / u.leading());
    }
    if (!rem.is_zero()) {
      cert.ok = false;
      cert.failing_k = k;
      cert.residual = RationalFunc(rem);
      return cert;
    }
  }
  return cert;
}

namespace {

RationalPoly det3(const std::array<std::array<RationalPoly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

DiffOp2 reconstruct_operator(const std::array<RationalPoly, 3>& y,
                             const std::array<RationalPoly, 3>& g) {
  std::array<std::array<RationalPoly, 3>, 3> m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = y[i].derivative().derivative();
    m[i][1] = y[i].derivative();
    m[i][2] = y[i];
  }
  RationalPoly delta = det3(m);
  if (delta.is_zero())
    throw SingularSystemError("prescribed functions have a vanishing Wronskian");
  DiffOp2 out;
  for (int col = 0; col < 3; ++col) {
    auto mc = m;
    for (int i = 0; i < 3; ++i) mc[i][col] = g[i];
    RationalFunc coeff(det3(mc), delta);
    if (col == 0)
      out.p = coeff;
    else if (col == 1)
      out.q = coeff;
    else
      out.r = coeff;
  }
  return out;
}

OrderReducedBasis order_reduced_basis(const std::vector<RationalPoly>& span, int n) {
  if (static_cast<int>(span.size()) != n)
    throw ShapeError("codimension-one subspace of degree-" + std::to_string(n) +
                     " polynomials needs exactly " + std::to_string(n) + " generators");
  Matrix m;
  for (const RationalPoly& u : span) {
    if (u.degree() > n) throw ShapeError("generator of degree above the ambient space");
    std::vector<Rat> row(n + 1, Rat(0));
    for (int i = 0; i <= u.degree(); ++i) row[i] = u.coeff(i);
    m.push_back(std::move(row));
  }
  std::vector<int> pivots = rref(m);
  if (static_cast<int>(pivots.size()) != n)
    throw ShapeError("generators are linearly dependent");

  std::vector<bool> is_pivot(n + 1, false);
  for (int c : pivots) is_pivot[c] = true;
  int gap = -1;
  for (int c = 0; c <= n; ++c)
    if (!is_pivot[c]) gap = c;

  OrderReducedBasis out;
  out.n = n;
  out.gap = gap;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    out.corrections.emplace_back(pivots[i], m[i][gap]);
  return out;
}

PSLPData pslp_data(const DiffOp2& t, const Interval& iv) {
  if (t.p.is_zero()) throw DomainError("operator of order below two");
  QuasiRational bigP = QuasiRational::from_log_derivative(t.q / t.p);
  bigP.orient(iv);

  Rat mid = iv.midpoint();
  std::vector<Rat> probes{mid};
  if (!iv.left_inf && !iv.right_inf) {
    probes.push_back((iv.a + mid) / 2);
    probes.push_back((mid + iv.b) / 2);
  } else {
    probes.push_back(mid - Rat(1, 2));
    probes.push_back(mid + Rat(1, 2));
  }
  int psign = 0;
  for (const Rat& x : probes) {
    if (!iv.contains(x)) continue;
    Rat v = t.p.eval(x);
    if (v == 0) throw DomainError("leading coefficient vanishes inside the interval");
    if (psign == 0) psign = sgn(v);
    if (sgn(v) != psign)
      throw DomainError("leading coefficient changes sign on the interval");
  }
  bool flip = psign < 0;
  RationalFunc ptilde = flip ? -t.p : t.p;
  RationalFunc rtilde = flip ? -t.r : t.r;

  PSLPData data;
  data.interval = iv;
  data.sign_flipped = flip;
  data.P = bigP;
  data.W = bigP.div(QuasiRational::from_rational(ptilde));
  data.R = data.W.mul(QuasiRational::from_rational(-rtilde));
  if (data.W.sign_at(mid) <= 0) throw DomainError("weight is not positive at the midpoint");
  return data;
}

}  // namespace xop
