// SPDX-License-Identifier: MIT

#include "xop/classical.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include <boost/math/special_functions/gamma.hpp>

namespace xop {

RationalPoly jacobi(int n, const JacobiParams& prm) {
  if (n < 0) throw ParameterError("polynomial index must be nonnegative");
  static std::map<std::tuple<int, Rat, Rat>, RationalPoly> cache;
  static std::mutex guard;
  auto key = std::make_tuple(n, prm.alpha, prm.beta);
  {
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  RationalPoly minus(std::vector<Rat>{Rat(-1, 2), Rat(1, 2)});  // (x-1)/2
  RationalPoly plus(std::vector<Rat>{Rat(1, 2), Rat(1, 2)});    // (x+1)/2
  std::vector<RationalPoly> minus_pow{RationalPoly(Rat(1))};
  std::vector<RationalPoly> plus_pow{RationalPoly(Rat(1))};
  for (int i = 1; i <= n; ++i) {
    minus_pow.push_back(minus_pow.back() * minus);
    plus_pow.push_back(plus_pow.back() * plus);
  }
  RationalPoly acc;
  for (int s = 0; s <= n; ++s) {
    Rat c = gen_binomial(prm.alpha + n, n - s) * gen_binomial(prm.beta + n, s);
    if (c == 0) continue;
    acc = acc + minus_pow[s] * plus_pow[n - s] * c;
  }

  std::lock_guard<std::mutex> lock(guard);
  return cache.emplace(key, std::move(acc)).first->second;
}

DiffOp2 classical_jacobi_op(const JacobiParams& prm) {
  return {RationalFunc(RationalPoly(std::vector<Rat>{1, 0, -1})),
          RationalFunc(RationalPoly(
              std::vector<Rat>{prm.beta - prm.alpha, -(prm.alpha + prm.beta + 2)})),
          RationalFunc()};
}

Rat jacobi_eigenvalue(int n, const JacobiParams& prm) {
  return -n * (n + prm.alpha + prm.beta + 1);
}

QuasiRational classical_weight(const JacobiParams& prm) {
  QuasiRational w;
  w.mul_power(Rat(1), prm.alpha, true).mul_power(Rat(-1), prm.beta);
  return w;
}

std::array<RationalPoly, 5> identity_suite(const JacobiParams& prm, int m, int n) {
  if (m < 0 || n < 0) throw ParameterError("identity indices must be nonnegative");
  const Rat &a = prm.alpha, &b = prm.beta;
  std::array<RationalPoly, 5> res;

  res[0] = jacobi(0, prm) - RationalPoly(Rat(1));

  RationalPoly pn = jacobi(n, prm);
  RationalPoly swapped = jacobi(n, {b, a}).compose_affine(Rat(-1), Rat(0));
  res[1] = pn - (n % 2 != 0 ? -swapped : swapped);

  RationalPoly pm = jacobi(m, prm);
  res[2] = RationalPoly(std::vector<Rat>{-1, 1}) * pm.derivative() -
           jacobi(m, {a - 1, b + 1}) * (a + m) + pm * a;

  res[3] = n == 0 ? RationalPoly()
                  : pn.derivative() - jacobi(n - 1, {a + 1, b + 1}) * ((1 + a + b + n) / 2);

  res[4] = n == 0 ? RationalPoly()
                  : jacobi(n, {a, b - 1}) - jacobi(n, {a - 1, b}) - jacobi(n - 1, prm);
  return res;
}

Rat classical_norm_exact(int n, const JacobiParams& prm) {
  if (n < 0) throw ParameterError("polynomial index must be nonnegative");
  if (!is_integer(prm.alpha) || !is_integer(prm.beta) || prm.alpha < 0 || prm.beta < 0)
    throw DomainError("exact norms need nonnegative integer parameters");
  long a = to_long(prm.alpha), b = to_long(prm.beta);
  return rat_pow(Rat(2), a + b + 1) * factorial(a + n) * factorial(b + n) /
         (factorial(n) * (a + b + 2 * n + 1) * factorial(a + b + n));
}

MPFloat classical_norm(int n, const JacobiParams& prm) {
  if (n < 0) throw ParameterError("polynomial index must be nonnegative");
  if (!(prm.alpha > -1 && prm.beta > -1))
    throw DomainError("norm requires alpha, beta > -1");
  if (is_integer(prm.alpha) && is_integer(prm.beta) && prm.alpha >= 0 && prm.beta >= 0)
    return to_float<MPFloat>(classical_norm_exact(n, prm));
  return classical_norm_continued(n, prm);
}
MPFloat classical_norm_continued(int n, const JacobiParams& prm) {
  if (n < 0) throw ParameterError("polynomial index must be nonnegative");
  using boost::math::tgamma;
  const Rat &a = prm.alpha, &b = prm.beta;
  MPFloat num = pow(MPFloat(2), to_float<MPFloat>(a + b + 1)) *
                tgamma(to_float<MPFloat>(a + 1 + n)) * tgamma(to_float<MPFloat>(b + 1 + n));
  if (n == 0)  // (a+b+1) Gamma(a+b+1) written as Gamma(a+b+2), defined for a+b <= -1
    return num / tgamma(to_float<MPFloat>(a + b + 2));
  return num / (to_float<MPFloat>(factorial(n) * (a + b + 2 * n + 1)) *
                tgamma(to_float<MPFloat>(a + b + n + 1)));
}

RationalPoly raise(const JacobiParams& prm, const RationalPoly& y) {
  return RationalPoly(std::vector<Rat>{1, 0, -1}) * y.derivative() +
         RationalPoly(std::vector<Rat>{prm.beta - prm.alpha,
                                       -(prm.alpha + prm.beta + 2)}) *
             y;
}

RationalPoly lower(const RationalPoly& y) { return y.derivative(); }

RationalPoly rodrigues(int n, const JacobiParams& prm) {
  if (n < 0) throw ParameterError("polynomial index must be nonnegative");
  RationalPoly acc(Rat(1));
  for (int i = n - 1; i >= 0; --i) acc = raise({prm.alpha + i, prm.beta + i}, acc);
  return acc / (rat_pow(Rat(-2), n) * factorial(n));
}

namespace {

void verify_seed(const DiffOp2& t, const SeedPair& seed) {
  RationalFunc w = seed.phi.log_derivative();
  RationalFunc residual =
      t.p * (w.derivative() + w * w) + t.q * w + t.r - RationalFunc(seed.lambda);
  if (!residual.is_zero())
    throw EigenfunctionError("quasi-rational seed fails its eigenvalue relation");
}

}  // namespace

std::array<SeedPair, 4> quasi_rational_seeds(const JacobiParams& prm, int m) {
  if (m < 0) throw ParameterError("seed index must be nonnegative");
  const Rat &a = prm.alpha, &b = prm.beta;
  std::array<SeedPair, 4> seeds;
  seeds[0] = {QuasiRational::from_poly(jacobi(m, prm)), -m * (m + a + b + 1)};
  seeds[1] = {QuasiRational::from_poly(jacobi(m, {-a, -b}))
                  .mul_power(Rat(1), -a, true)
                  .mul_power(Rat(-1), -b),
              (1 + m) * (a + b - m)};
  seeds[2] = {QuasiRational::from_poly(jacobi(m, {-a, b})).mul_power(Rat(1), -a, true),
              (1 + b + m) * (a - m)};
  seeds[3] = {QuasiRational::from_poly(jacobi(m, {a, -b})).mul_power(Rat(-1), -b),
              (1 + a + m) * (b - m)};
  DiffOp2 t = classical_jacobi_op(prm);
  for (const SeedPair& s : seeds) verify_seed(t, s);
  return seeds;
}

}  // namespace xop
