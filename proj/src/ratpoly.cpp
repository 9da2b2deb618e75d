// SPDX-License-Identifier: MIT

#include "xop/ratpoly.hpp"

#include <algorithm>
#include <set>

namespace xop {

namespace {
const Rat kZero(0);
}

RationalPoly::RationalPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

RationalPoly::RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::monomial(int degree, const Rat& coeff) {
  if (degree < 0) throw DomainError("monomial with negative degree");
  RationalPoly p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, Rat(0));
    p.c_.back() = coeff;
  }
  return p;
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RationalPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const Rat& RationalPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

RationalPoly& RationalPoly::operator/=(const Rat& s) {
  if (s == 0) throw DomainError("polynomial division by zero scalar");
  for (auto& c : c_) c /= s;
  return *this;
}

RationalPoly RationalPoly::derivative() const {
  if (degree() <= 0) return RationalPoly();
  std::vector<Rat> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RationalPoly(std::move(out));
}

Rat RationalPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

RationalPoly RationalPoly::compose_affine(const Rat& s, const Rat& t) const {
  if (s == 0) throw ParameterError("affine substitution with zero slope");
  RationalPoly lin(std::vector<Rat>{t, s});
  RationalPoly acc;
  for (int i = degree(); i >= 0; --i) acc = acc * lin + RationalPoly(c_[i]);
  return acc;
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) throw DomainError("monic form of the zero polynomial");
  return *this / leading();
}

std::string RationalPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeff(k);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rat a = abs(c);
    if (a != 1 || k == 0) out += rat_string(a);
    if (k > 0) {
      if (a != 1) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  RationalPoly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    RationalPoly t = RationalPoly::monomial(r.degree() - b.degree(), r.leading() / b.leading());
    q += t;
    r -= t * b;
  }
  return {q, r};
}

RationalPoly exact_div(const RationalPoly& a, const RationalPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw DivisibilityError("(" + a.str() + ") is not divisible by (" + b.str() + ")");
  return q;
}

bool divides(const RationalPoly& b, const RationalPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

RationalPoly gcd_poly(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

RationalPoly wronskian3(const RationalPoly& f, const RationalPoly& g, const RationalPoly& h) {
  RationalPoly f1 = f.derivative(), g1 = g.derivative(), h1 = h.derivative();
  RationalPoly f2 = f1.derivative(), g2 = g1.derivative(), h2 = h1.derivative();
  return f * (g1 * h2 - g2 * h1) - g * (f1 * h2 - f2 * h1) + h * (f1 * g2 - f2 * g1);
}

Rat pochhammer(const Rat& t, long k) {
  if (k < 0) throw DomainError("pochhammer with negative length");
  Rat acc(1);
  for (long i = 0; i < k; ++i) acc *= t + Rat(i);
  return acc;
}

Rat gen_binomial(const Rat& t, long k) {
  if (k < 0) return Rat(0);
  Rat acc(1);
  for (long i = 0; i < k; ++i) acc *= t - Rat(i);
  return acc / factorial(k);
}

std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<RationalPoly, int>> out;
  RationalPoly p = f.monic();
  if (p.degree() == 0) return out;

  RationalPoly g = gcd_poly(p, p.derivative());
  if (g.degree() == 0) {
    out.emplace_back(p, 1);
    return out;
  }
  RationalPoly c = exact_div(p, g);
  RationalPoly d = exact_div(p.derivative(), g) - c.derivative();
  int mult = 1;
  while (c.degree() > 0) {
    RationalPoly fac = gcd_poly(c, d);
    if (fac.degree() > 0) out.emplace_back(fac, mult);
    c = exact_div(c, fac);
    d = exact_div(d, fac) - c.derivative();
    ++mult;
  }
  return out;
}

namespace {

int sign_variations(const std::vector<RationalPoly>& chain, const Rat& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

namespace {

std::vector<RationalPoly> sturm_chain(const RationalPoly& f) {
  RationalPoly g = gcd_poly(f, f.derivative());
  RationalPoly p = g.degree() > 0 ? exact_div(f, g) : f;
  std::vector<RationalPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    const RationalPoly& s0 = chain[chain.size() - 2];
    const RationalPoly& s1 = chain.back();
    chain.push_back(-divmod(s0, s1).second);
  }
  chain.pop_back();
  return chain;
}

int sign_variations_at_infinity(const std::vector<RationalPoly>& chain, int direction) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int s = sgn(p.leading());
    if (direction < 0 && p.degree() % 2 != 0) s = -s;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_count(const RationalPoly& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) throw DomainError("Sturm count of the zero polynomial");
  if (a >= b) throw DomainError("Sturm count on an empty interval");
  if (f.eval(a) == 0 || f.eval(b) == 0)
    throw DomainError("Sturm count with a root at an endpoint");
  std::vector<RationalPoly> chain = sturm_chain(f);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int sturm_count_all(const RationalPoly& f) {
  if (f.is_zero()) throw DomainError("Sturm count of the zero polynomial");
  if (f.degree() == 0) return 0;
  std::vector<RationalPoly> chain = sturm_chain(f);
  return sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, +1);
}

namespace {

// Trial division is capped: divisors with both cofactors above the cap are
// not enumerated, so roots of extreme height can be missed. Every root
// arising in this library is a small rational (interval endpoints, family
// parameters), far below the cap.
std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  const Int cap(1000000);
  std::vector<Int> out;
  for (Int i = 1; i * i <= n && i <= cap; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      out.push_back(n / i);
    }
  }
  return out;
}

// (x - r) deflation; requires f(r) == 0.
RationalPoly deflate(const RationalPoly& f, const Rat& r) {
  std::vector<Rat> out(f.degree());
  Rat carry(0);
  for (int i = f.degree(); i >= 1; --i) {
    carry = f.coeff(i) + carry * r;
    out[i - 1] = carry;
  }
  return RationalPoly(std::move(out));
}

}  // namespace

RootSplit rational_roots(const RationalPoly& f) {
  if (f.is_zero()) throw DomainError("rational roots of the zero polynomial");
  RootSplit split;
  RationalPoly work = f;

  int zero_mult = 0;
  while (work.degree() > 0 && work.coeff(0) == 0) {
    work = deflate(work, Rat(0));
    ++zero_mult;
  }
  if (zero_mult > 0) split.roots.emplace_back(Rat(0), zero_mult);
  if (work.degree() == 0) {
    split.cofactor = work;
    return split;
  }

  Int scale(1);
  for (const Rat& c : work.coeffs()) scale = lcm(scale, denominator(c));
  std::vector<Int> ic;
  ic.reserve(work.coeffs().size());
  for (const Rat& c : work.coeffs()) ic.push_back(numerator(c * Rat(scale)));
  Int content(0);
  for (const Int& c : ic) content = gcd(content, c);
  for (Int& c : ic) c /= content;

  std::set<Rat> candidates;
  for (const Int& p : positive_divisors(ic.front()))
    for (const Int& q : positive_divisors(ic.back())) {
      candidates.insert(Rat(p, q));
      candidates.insert(Rat(-p, q));
    }

  for (const Rat& r : candidates) {
    int mult = 0;
    while (work.degree() > 0 && work.eval(r) == 0) {
      work = deflate(work, r);
      ++mult;
    }
    if (mult > 0) split.roots.emplace_back(r, mult);
    if (work.degree() == 0) break;
  }
  std::sort(split.roots.begin(), split.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  split.cofactor = work;
  return split;
}

RationalFunc::RationalFunc(RationalPoly num) : num_(std::move(num)) {}

RationalFunc::RationalFunc(RationalPoly num, RationalPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RationalFunc::normalize() {
  if (num_.is_zero()) {
    den_ = RationalPoly(Rat(1));
    return;
  }
  RationalPoly g = gcd_poly(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Rat lc = den_.leading();
  num_ /= lc;
  den_ /= lc;
}

RationalPoly RationalFunc::as_polynomial() const {
  if (!is_polynomial())
    throw DivisibilityError("rational function " + str() + " is not a polynomial");
  return num_;
}

Rat RationalFunc::as_constant() const {
  if (!is_constant()) throw DomainError("rational function " + str() + " is not constant");
  return num_.coeff(0);
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o) { return *this += -o; }

RationalFunc& RationalFunc::operator*=(const RationalFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  if (num_.is_zero()) {
    den_ = RationalPoly(Rat(1));
    return *this;
  }
  normalize();
  return *this;
}

RationalFunc& RationalFunc::operator/=(const RationalFunc& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunc RationalFunc::derivative() const {
  return RationalFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RationalFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw DomainError("evaluation at pole x = " + rat_string(x));
  return num_.eval(x) / d;
}

RationalFunc RationalFunc::compose_affine(const Rat& s, const Rat& t) const {
  return RationalFunc(num_.compose_affine(s, t), den_.compose_affine(s, t));
}

std::string RationalFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    Rat lead = m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rat>> kernel_basis(Matrix m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace xop
