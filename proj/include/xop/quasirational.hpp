// SPDX-License-Identifier: MIT
//
// Quasi-rational functions: products
//
//   c * prod_i (x - r_i)^{e_i} * exp(s(x)) * N(x)/D(x)
//
// with rational roots r_i, rational exponents e_i, polynomial s and a
// rational-root-free reduced N/D. Factors may be stored in the flipped
// orientation (r_i - x) so that weights stay positive on their interval.
// The class is closed under multiplication and division, knows its exact
// logarithmic derivative, and can be reconstructed from one.

#pragma once

#include <string>
#include <vector>

#include "xop/ratpoly.hpp"

namespace xop {

struct Interval {
  bool left_inf = false;
  bool right_inf = false;
  Rat a, b;

  static Interval open(const Rat& a, const Rat& b);
  static Interval right_ray(const Rat& a);  // (a, +inf)
  static Interval real_line();

  Rat midpoint() const;
  bool contains(const Rat& x) const;
};

struct PowerFactor {
  Rat root;
  Rat exponent;
  bool flipped = false;  // base (root - x) instead of (x - root)
};

class QuasiRational {
 public:
  QuasiRational() = default;  // the constant 1
  static QuasiRational constant(const Rat& c);
  static QuasiRational from_poly(const RationalPoly& p);
  static QuasiRational from_rational(const RationalFunc& f);
  // Reconstructs f with f'/f = w up to a constant; RepresentationError when
  // w is not the logarithmic derivative of any quasi-rational function.
  static QuasiRational from_log_derivative(const RationalFunc& w);

  QuasiRational& mul_const(const Rat& c);
  QuasiRational& mul_power(const Rat& root, const Rat& exponent, bool flipped = false);
  QuasiRational& mul_exp(const RationalPoly& s);
  QuasiRational& mul_rational(const RationalFunc& f);
  QuasiRational& mul_poly(const RationalPoly& p);

  const Rat& constant() const { return constant_; }
  const std::vector<PowerFactor>& factors() const { return factors_; }
  const RationalPoly& exp_part() const { return exp_part_; }
  const RationalFunc& rational_part() const { return rational_part_; }

  bool is_zero() const { return constant_ == 0; }
  bool is_constant() const;
  Rat as_constant() const;

  QuasiRational mul(const QuasiRational& o) const;
  QuasiRational div(const QuasiRational& o) const;
  QuasiRational reciprocal() const;

  RationalFunc log_derivative() const;

  bool is_rational() const;
  RationalFunc as_rational() const;  // throws RepresentationError
  bool is_polynomial() const;
  RationalPoly as_polynomial() const;

  // f'/f equality; constants are ignored.
  bool proportional_to(const QuasiRational& o) const;
  // The exact constant this/o; requires the ratio to reduce to a rational.
  Rat ratio_to(const QuasiRational& o) const;

  // Exact sign at a regular rational point.
  int sign_at(const Rat& x) const;
  // Flip factor orientations so every base is positive on the interval
  // (integer exponents stay canonical), then scale by +-1 so the value at
  // the midpoint is positive.
  QuasiRational& orient(const Interval& iv);

  template <class T>
  T eval_f(const T& x) const {
    using std::exp;
    using std::pow;
    T acc = to_float<T>(constant_);
    for (const auto& f : factors_) {
      T base = f.flipped ? to_float<T>(f.root) - x : x - to_float<T>(f.root);
      if (is_integer(f.exponent)) {
        long e = to_long(f.exponent);
        if (base == T(0) && e < 0) throw DomainError("evaluation at a pole");
        acc *= pow(base, static_cast<int>(e));
      } else {
        if (base <= T(0))
          throw DomainError("fractional power of a non-positive base");
        acc *= pow(base, to_float<T>(f.exponent));
      }
    }
    if (!exp_part_.is_zero()) acc *= exp(exp_part_.eval_f(x));
    return acc * rational_part_.eval_f(x);
  }

  std::string str() const;

 private:
  Rat constant_ = 1;
  std::vector<PowerFactor> factors_;
  RationalPoly exp_part_;
  RationalFunc rational_part_ = RationalFunc(Rat(1));

  void canonicalize();
};

}  // namespace xop
