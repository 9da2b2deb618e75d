// SPDX-License-Identifier: MIT

#include "xop/quasirational.hpp"

#include <algorithm>

namespace xop {

Interval Interval::open(const Rat& a, const Rat& b) {
  if (a >= b) throw DomainError("empty interval");
  return Interval{false, false, a, b};
}

Interval Interval::right_ray(const Rat& a) { return Interval{false, true, a, Rat(0)}; }

Interval Interval::real_line() { return Interval{true, true, Rat(0), Rat(0)}; }

Rat Interval::midpoint() const {
  if (!left_inf && !right_inf) return (a + b) / 2;
  if (!left_inf) return a + 1;
  if (!right_inf) return b - 1;
  return Rat(0);
}

bool Interval::contains(const Rat& x) const {
  return (left_inf || x > a) && (right_inf || x < b);
}

QuasiRational QuasiRational::constant(const Rat& c) {
  QuasiRational q;
  q.constant_ = c;
  q.canonicalize();
  return q;
}

QuasiRational QuasiRational::from_poly(const RationalPoly& p) {
  QuasiRational q;
  q.rational_part_ = RationalFunc(p);
  q.canonicalize();
  return q;
}

QuasiRational QuasiRational::from_rational(const RationalFunc& f) {
  QuasiRational q;
  q.rational_part_ = f;
  q.canonicalize();
  return q;
}

QuasiRational& QuasiRational::mul_const(const Rat& c) {
  constant_ *= c;
  canonicalize();
  return *this;
}

QuasiRational& QuasiRational::mul_power(const Rat& root, const Rat& exponent, bool flipped) {
  factors_.push_back({root, exponent, flipped});
  canonicalize();
  return *this;
}

QuasiRational& QuasiRational::mul_exp(const RationalPoly& s) {
  if (!is_zero()) exp_part_ += s;
  return *this;
}

QuasiRational& QuasiRational::mul_rational(const RationalFunc& f) {
  rational_part_ *= f;
  canonicalize();
  return *this;
}

QuasiRational& QuasiRational::mul_poly(const RationalPoly& p) {
  return mul_rational(RationalFunc(p));
}

void QuasiRational::canonicalize() {
  if (constant_ == 0 || rational_part_.is_zero()) {
    constant_ = 0;
    factors_.clear();
    exp_part_ = RationalPoly();
    rational_part_ = RationalFunc(Rat(1));
    return;
  }

  auto pull = [&](const RationalPoly& p, int direction) {
    RootSplit split = rational_roots(p);
    for (const auto& [root, mult] : split.roots)
      factors_.push_back({root, Rat(direction * mult), false});
    return split.cofactor;
  };
  if (rational_part_.num().degree() > 0 || rational_part_.den().degree() > 0) {
    RationalPoly num = pull(rational_part_.num(), +1);
    RationalPoly den = pull(rational_part_.den(), -1);
    rational_part_ = RationalFunc(num, den);
  }
  if (rational_part_.is_constant()) {
    constant_ *= rational_part_.as_constant();
    rational_part_ = RationalFunc(Rat(1));
    if (constant_ == 0) {
      canonicalize();
      return;
    }
  }

  std::stable_sort(factors_.begin(), factors_.end(),
                   [](const PowerFactor& x, const PowerFactor& y) { return x.root < y.root; });
  std::vector<PowerFactor> merged;
  for (const auto& f : factors_) {
    if (f.exponent == 0) continue;
    if (!merged.empty() && merged.back().root == f.root) {
      PowerFactor& m = merged.back();
      if (m.flipped != f.flipped) {
        if (is_integer(f.exponent)) {
          if (to_long(f.exponent) % 2 != 0) constant_ = -constant_;
        } else if (is_integer(m.exponent)) {
          if (to_long(m.exponent) % 2 != 0) constant_ = -constant_;
          m.flipped = f.flipped;
        } else {
          throw RepresentationError("conflicting orientations at root " + rat_string(f.root));
        }
      }
      m.exponent += f.exponent;
    } else {
      merged.push_back(f);
    }
  }
  factors_.clear();
  for (auto& m : merged) {
    if (m.exponent == 0) continue;
    if (m.flipped && is_integer(m.exponent)) {
      if (to_long(m.exponent) % 2 != 0) constant_ = -constant_;
      m.flipped = false;
    }
    factors_.push_back(m);
  }
}

bool QuasiRational::is_constant() const {
  return factors_.empty() && exp_part_.is_zero() && rational_part_.is_constant();
}

Rat QuasiRational::as_constant() const {
  if (!is_constant()) throw RepresentationError("quasi-rational " + str() + " is not constant");
  return constant_;
}

QuasiRational QuasiRational::mul(const QuasiRational& o) const {
  QuasiRational r(*this);
  r.constant_ *= o.constant_;
  r.factors_.insert(r.factors_.end(), o.factors_.begin(), o.factors_.end());
  r.exp_part_ += o.exp_part_;
  r.rational_part_ *= o.rational_part_;
  r.canonicalize();
  return r;
}

QuasiRational QuasiRational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  QuasiRational r;
  r.constant_ = Rat(1) / constant_;
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.exponent = -f.exponent;
  r.exp_part_ = -exp_part_;
  r.rational_part_ = RationalFunc(Rat(1)) / rational_part_;
  r.canonicalize();
  return r;
}

QuasiRational QuasiRational::div(const QuasiRational& o) const { return mul(o.reciprocal()); }

RationalFunc QuasiRational::log_derivative() const {
  if (is_zero()) throw DomainError("logarithmic derivative of zero");
  RationalFunc w;
  for (const auto& f : factors_)
    w += RationalFunc(RationalPoly(f.exponent),
                      RationalPoly(std::vector<Rat>{-f.root, Rat(1)}));
  w += RationalFunc(exp_part_.derivative());
  w += rational_part_.derivative() / rational_part_;
  return w;
}

namespace {

RationalPoly poly_pow(const RationalPoly& p, long e) {
  RationalPoly acc(Rat(1));
  for (long i = 0; i < e; ++i) acc *= p;
  return acc;
}

}  // namespace

QuasiRational QuasiRational::from_log_derivative(const RationalFunc& w) {
  QuasiRational out;
  if (w.is_zero()) return out;

  auto [quot, rem] = divmod(w.num(), w.den());
  if (!quot.is_zero()) {
    std::vector<Rat> anti(quot.degree() + 2, Rat(0));
    for (int i = 0; i <= quot.degree(); ++i) anti[i + 1] = quot.coeff(i) / Rat(i + 1);
    out.exp_part_ = RationalPoly(std::move(anti));
  }
  if (rem.is_zero()) return out;

  const RationalPoly& den = w.den();
  if (gcd_poly(den, den.derivative()).degree() > 0)
    throw RepresentationError("higher-order pole in logarithmic derivative " + w.str());

  RootSplit split = rational_roots(den);
  RationalPoly dp = den.derivative();
  RationalFunc residual(rem, den);
  for (const auto& [root, mult] : split.roots) {
    (void)mult;  // simple poles only
    Rat e = rem.eval(root) / dp.eval(root);
    out.factors_.push_back({root, e, false});
    residual -= RationalFunc(RationalPoly(e), RationalPoly(std::vector<Rat>{-root, Rat(1)}));
  }
  if (!residual.is_zero()) {
    const RationalPoly& u = residual.den();
    RationalPoly up = u.derivative();
    RationalPoly m = residual.num();
    Rat c = m.degree() == up.degree() ? m.leading() / up.leading() : Rat(0);
    if (c == 0 || !(up * c == m) || !is_integer(c))
      throw RepresentationError("pole factor " + u.str() +
                                " does not carry an integer power");
    long e = to_long(c);
    out.rational_part_ =
        e > 0 ? RationalFunc(poly_pow(u, e)) : RationalFunc(RationalPoly(Rat(1)), poly_pow(u, -e));
  }
  out.canonicalize();
  return out;
}

bool QuasiRational::is_rational() const {
  if (is_zero()) return true;
  if (!exp_part_.is_zero()) return false;
  for (const auto& f : factors_)
    if (!is_integer(f.exponent)) return false;
  return true;
}

RationalFunc QuasiRational::as_rational() const {
  if (!is_rational())
    throw RepresentationError("quasi-rational " + str() + " is not rational");
  RationalPoly num(constant_), den(Rat(1));
  for (const auto& f : factors_) {
    long e = to_long(f.exponent);
    RationalPoly base(std::vector<Rat>{-f.root, Rat(1)});
    if (e > 0)
      num *= poly_pow(base, e);
    else
      den *= poly_pow(base, -e);
  }
  return RationalFunc(num, den) * rational_part_;
}

bool QuasiRational::is_polynomial() const {
  if (is_zero()) return true;
  if (!exp_part_.is_zero() || !rational_part_.is_polynomial()) return false;
  for (const auto& f : factors_)
    if (!is_integer(f.exponent) || f.exponent < 0) return false;
  return true;
}

RationalPoly QuasiRational::as_polynomial() const {
  if (!is_polynomial())
    throw RepresentationError("quasi-rational " + str() + " is not polynomial");
  return as_rational().as_polynomial();
}

bool QuasiRational::proportional_to(const QuasiRational& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return log_derivative() == o.log_derivative();
}

Rat QuasiRational::ratio_to(const QuasiRational& o) const {
  return div(o).as_constant();
}

int QuasiRational::sign_at(const Rat& x) const {
  int s = sgn(constant_);
  if (s == 0) return 0;
  for (const auto& f : factors_) {
    Rat base = f.flipped ? f.root - x : x - f.root;
    if (is_integer(f.exponent)) {
      long e = to_long(f.exponent);
      if (base == 0) {
        if (e < 0) throw DomainError("sign at pole x = " + rat_string(x));
        return 0;
      }
      if (base < 0 && e % 2 != 0) s = -s;
    } else {
      if (base <= 0)
        throw DomainError("fractional power of non-positive base at x = " + rat_string(x));
    }
  }
  Rat dv = rational_part_.den().eval(x);
  if (dv == 0) throw DomainError("sign at pole x = " + rat_string(x));
  Rat nv = rational_part_.num().eval(x);
  if (nv == 0) return 0;
  return s * sgn(nv) * sgn(dv);
}

QuasiRational& QuasiRational::orient(const Interval& iv) {
  for (auto& f : factors_) {
    if (is_integer(f.exponent)) continue;
    if (!iv.right_inf && f.root >= iv.b)
      f.flipped = true;
    else if (!iv.left_inf && f.root <= iv.a)
      f.flipped = false;
  }
  int s = sign_at(iv.midpoint());
  if (s == 0) throw DomainError("vanishing at the interval midpoint");
  if (s < 0) constant_ = -constant_;
  return *this;
}

std::string QuasiRational::str() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (constant_ != 1) parts.push_back(rat_string(constant_));
  for (const auto& f : factors_) {
    std::string base;
    if (f.flipped)
      base = RationalPoly(std::vector<Rat>{f.root, Rat(-1)}).str();
    else
      base = RationalPoly(std::vector<Rat>{-f.root, Rat(1)}).str();
    std::string term = "(" + base + ")";
    if (f.exponent != 1) term += "^(" + rat_string(f.exponent) + ")";
    parts.push_back(term);
  }
  if (!exp_part_.is_zero()) parts.push_back("exp(" + exp_part_.str() + ")");
  if (!rational_part_.is_constant()) parts.push_back("[" + rational_part_.str() + "]");
  if (parts.empty()) parts.push_back("1");
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
  return out;
}

}  // namespace xop
