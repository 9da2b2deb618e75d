// SPDX-License-Identifier: MIT
//
// Dense univariate polynomials and reduced rational functions over
// arbitrary-precision rationals, together with the exact helpers the rest
// of the library leans on: Wronskians, generalized binomials, squarefree
// splitting, rational root extraction, Sturm chains and reduced row
// echelon forms.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xop/rat.hpp"

namespace xop {

class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(const Rat& c);  // NOLINT: implicit constant embedding
  RationalPoly(long c) : RationalPoly(Rat(c)) {}
  explicit RationalPoly(std::vector<Rat> coeffs);  // ascending powers

  static RationalPoly monomial(int degree, const Rat& coeff = Rat(1));
  static RationalPoly x() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int k) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const Rat& s);
  RationalPoly& operator/=(const Rat& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rat& s) { return a *= s; }
  friend RationalPoly operator*(const Rat& s, RationalPoly a) { return a *= s; }
  friend RationalPoly operator/(RationalPoly a, const Rat& s) { return a /= s; }

  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  RationalPoly derivative() const;
  Rat eval(const Rat& x) const;
  template <class T>
  T eval_f(const T& x) const {
    T acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + to_float<T>(coeff(i));
    return acc;
  }
  // Substitutes x -> s*x + t; requires s != 0.
  RationalPoly compose_affine(const Rat& s, const Rat& t) const;
  RationalPoly monic() const;

  std::string str() const;

 private:
  std::vector<Rat> c_;  // invariant: empty or nonzero back()
  void trim();
};

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
RationalPoly exact_div(const RationalPoly& a, const RationalPoly& b);
bool divides(const RationalPoly& b, const RationalPoly& a);
RationalPoly gcd_poly(RationalPoly a, RationalPoly b);  // monic unless both zero

// det [[f, g, h], [f', g', h'], [f'', g'', h'']]
RationalPoly wronskian3(const RationalPoly& f, const RationalPoly& g, const RationalPoly& h);

Rat pochhammer(const Rat& t, long k);     // t (t+1) ... (t+k-1)
Rat gen_binomial(const Rat& t, long k);   // t (t-1) ... (t-k+1) / k!

// f = c * prod factor^multiplicity with monic squarefree factors.
std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& f);

// Number of distinct real roots in the open interval (a, b).
// Requires f(a) != 0 and f(b) != 0.
int sturm_count(const RationalPoly& f, const Rat& a, const Rat& b);
// Number of distinct real roots on the whole line.
int sturm_count_all(const RationalPoly& f);

struct RootSplit {
  std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity)
  RationalPoly cofactor;                   // same leading coefficient as f, no rational roots
};
RootSplit rational_roots(const RationalPoly& f);

class RationalFunc {
 public:
  RationalFunc() = default;  // zero
  RationalFunc(const Rat& c) : num_(c) {}  // NOLINT
  RationalFunc(long c) : num_(Rat(c)) {}   // NOLINT
  RationalFunc(RationalPoly num);          // NOLINT: polynomials embed implicitly
  RationalFunc(RationalPoly num, RationalPoly den);

  const RationalPoly& num() const { return num_; }
  const RationalPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  RationalPoly as_polynomial() const;  // throws DivisibilityError when improper
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  Rat as_constant() const;

  RationalFunc operator-() const;
  RationalFunc& operator+=(const RationalFunc& o);
  RationalFunc& operator-=(const RationalFunc& o);
  RationalFunc& operator*=(const RationalFunc& o);
  RationalFunc& operator/=(const RationalFunc& o);

  friend RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
  friend RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
  friend RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
  friend RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }

  bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RationalFunc derivative() const;
  Rat eval(const Rat& x) const;  // DomainError at a pole
  template <class T>
  T eval_f(const T& x) const {
    return num_.eval_f(x) / den_.eval_f(x);
  }
  RationalFunc compose_affine(const Rat& s, const Rat& t) const;

  std::string str() const;

 private:
  RationalPoly num_;
  RationalPoly den_ = RationalPoly(Rat(1));
  void normalize();
};

using Matrix = std::vector<std::vector<Rat>>;

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Matrix& m);
// Basis of the null space of m (vectors of length #columns).
std::vector<std::vector<Rat>> kernel_basis(Matrix m);

}  // namespace xop
