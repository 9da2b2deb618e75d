// SPDX-License-Identifier: MIT

#include "xop/rat.hpp"

#include <cctype>

namespace xop {

int sgn(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

long to_long(const Rat& r) {
  if (!is_integer(r)) throw DomainError("to_long: " + rat_string(r) + " is not an integer");
  return numerator(r).convert_to<long>();
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("rat_pow: zero base with negative exponent");
    return Rat(1) / rat_pow(base, -e);
  }
  Rat acc(1), b = base;
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    b *= b;
  }
  return acc;
}

Rat factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Int acc(1);
  for (long i = 2; i <= n; ++i) acc *= i;
  return Rat(acc);
}

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParameterError("empty rational literal");

  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from == to) throw ParameterError("bad rational literal: '" + text + "'");
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        throw ParameterError("bad rational literal: '" + text + "'");
    return Int(s.substr(from, to - from));
  };

  Rat value;
  std::size_t slash = s.find('/', i);
  std::size_t dot = s.find('.', i);
  if (slash != std::string::npos) {
    if (dot != std::string::npos) throw ParameterError("bad rational literal: '" + text + "'");
    Int num = digits(i, slash);
    Int den = digits(slash + 1, s.size());
    if (den == 0) throw ParameterError("zero denominator in '" + text + "'");
    value = Rat(num, den);
  } else if (dot != std::string::npos) {
    Int whole = dot > i ? digits(i, dot) : Int(0);
    std::size_t fdigits = s.size() - dot - 1;
    Int frac = fdigits > 0 ? digits(dot + 1, s.size()) : Int(0);
    Int scale(1);
    for (std::size_t k = 0; k < fdigits; ++k) scale *= 10;
    value = Rat(whole) + Rat(frac, scale);
  } else {
    value = Rat(digits(i, s.size()));
  }
  return neg ? -value : value;
}

std::string rat_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace xop
