// SPDX-License-Identifier: MIT

#include "xop/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>

namespace xop {

namespace {

// Monic three-term recurrence pi_{k+1} = (x - a_k) pi_k - b_k pi_{k-1}
// together with the total mass of the classical measure.
struct Recurrence {
  std::vector<Rat> a;  // a_0 .. a_{n-1}
  std::vector<Rat> b;  // b_1 .. b_{n-1}, index 0 unused
  MPFloat mu0;
};

Recurrence jacobi_recurrence(const Rat& al, const Rat& be, int n) {
  Recurrence rec;
  rec.a.resize(n);
  rec.b.resize(n);
  Rat s = al + be;
  rec.a[0] = (be - al) / (s + 2);
  for (int k = 1; k < n; ++k) {
    Rat t = 2 * k + s;
    rec.a[k] = (be * be - al * al) / (t * (t + 2));
    if (k == 1) {
      // the factors (1+s) cancel, which also covers s = -1
      rec.b[1] = 4 * (1 + al) * (1 + be) / ((2 + s) * (2 + s) * (3 + s));
    } else {
      rec.b[k] = 4 * k * (k + al) * (k + be) * (k + s) / (t * t * (t + 1) * (t - 1));
    }
  }
  using boost::math::tgamma;
  rec.mu0 = pow(MPFloat(2), to_float<MPFloat>(s + 1)) * tgamma(to_float<MPFloat>(al + 1)) *
            tgamma(to_float<MPFloat>(be + 1)) / tgamma(to_float<MPFloat>(s + 2));
  return rec;
}

Recurrence laguerre_recurrence(const Rat& k, int n) {
  Recurrence rec;
  rec.a.resize(n);
  rec.b.resize(n);
  for (int j = 0; j < n; ++j) {
    rec.a[j] = 2 * j + k + 1;
    if (j >= 1) rec.b[j] = j * (j + k);
  }
  rec.mu0 = boost::math::tgamma(to_float<MPFloat>(k + 1));
  return rec;
}

QuadRule build_rule(const Recurrence& rec, int n) {
  std::vector<MPFloat> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = to_float<MPFloat>(rec.a[i]);
    b[i] = i >= 1 ? to_float<MPFloat>(rec.b[i]) : MPFloat(0);
  }

  // double-precision seeds from the Golub-Welsch tridiagonal eigenproblem
  std::vector<MPFloat> seeds(n);
  if (n == 1) {
    seeds[0] = a[0];
  } else {
    Eigen::VectorXd diag(n), sub(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = static_cast<double>(a[i]);
    for (int i = 0; i + 1 < n; ++i) sub[i] = std::sqrt(static_cast<double>(b[i + 1]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw NumericalError("tridiagonal eigensolve failed");
    for (int i = 0; i < n; ++i) seeds[i] = MPFloat(es.eigenvalues()[i]);
  }

  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const MPFloat eps = std::numeric_limits<MPFloat>::epsilon();

  // For large n the recurrence evaluates p through intermediates many orders
  // of magnitude above the residual, so the computed step bottoms out at a
  // noise floor above 16*eps.  Accept once the step stops shrinking, provided
  // it already passed sqrt(eps): that is far beyond the double seeds, so the
  // iteration has genuinely converged to the attainable accuracy.
  const MPFloat loose = sqrt(eps);
  for (int i = 0; i < n; ++i) {
    MPFloat x = seeds[i];
    bool ok = false;
    MPFloat prev = std::numeric_limits<MPFloat>::infinity();
    for (int it = 0; it < 60 && !ok; ++it) {
      MPFloat pm(1), p = x - a[0], dm(0), d(1);
      for (int j = 1; j < n; ++j) {
        MPFloat pn = (x - a[j]) * p - b[j] * pm;
        MPFloat dn = p + (x - a[j]) * d - b[j] * dm;
        pm = p;
        p = pn;
        dm = d;
        d = dn;
      }
      if (d == 0) break;
      MPFloat dx = p / d;
      x -= dx;
      MPFloat step = abs(dx);
      MPFloat scale = 1 + abs(x);
      if (step <= 16 * eps * scale) ok = true;
      else if (step >= prev && prev <= loose * scale) ok = true;
      prev = step;
    }
    if (!ok) throw NumericalError("Gauss node refinement did not converge");
    rule.nodes[i] = x;
  }
  std::sort(rule.nodes.begin(), rule.nodes.end());

  for (int i = 0; i < n; ++i) {
    const MPFloat& x = rule.nodes[i];
    MPFloat pm(1), p = x - a[0], prod(1), S(1);
    for (int j = 1; j < n; ++j) {
      prod *= b[j];
      S += p * p / prod;
      MPFloat pn = (x - a[j]) * p - b[j] * pm;
      pm = p;
      p = pn;
    }
    rule.weights[i] = rec.mu0 / S;
  }
  return rule;
}

// All real roots of f lie strictly inside |x| < cauchy_bound(f).
Rat cauchy_bound(const RationalPoly& f) {
  Rat m(0);
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rat(abs(f.coeff(i) / f.leading())));
  return m + 2;
}

void require_root_free(const RationalPoly& g, const Interval& iv, const char* what) {
  if (g.degree() <= 0) return;
  Rat lo = iv.left_inf ? -cauchy_bound(g) : iv.a;
  Rat hi = iv.right_inf ? cauchy_bound(g) : iv.b;
  if (g.eval(lo) == 0 || g.eval(hi) == 0)
    throw DomainError(std::string(what) + " vanishes at an interval endpoint");
  if (sturm_count(g, lo, hi) != 0)
    throw DomainError(std::string(what) + " vanishes inside the interval");
}

RationalFunc rf_int_pow(const RationalPoly& base, long e) {
  RationalFunc acc(Rat(1));
  RationalFunc b = e < 0 ? RationalFunc(Rat(1)) / RationalFunc(base) : RationalFunc(base);
  for (long i = 0; i < (e < 0 ? -e : e); ++i) acc = acc * b;
  return acc;
}

}  // namespace

const QuadRule& gauss_jacobi_rule(const Rat& alpha, const Rat& beta, int n) {
  if (n < 1) throw ParameterError("rule size must be positive");
  if (!(alpha > -1 && beta > -1))
    throw DomainError("Gauss-Jacobi exponents must exceed -1");
  static std::map<std::tuple<Rat, Rat, int>, QuadRule> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto key = std::make_tuple(alpha, beta, n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_rule(jacobi_recurrence(alpha, beta, n), n)).first;
  return it->second;
}

const QuadRule& gauss_laguerre_rule(const Rat& k, int n) {
  if (n < 1) throw ParameterError("rule size must be positive");
  if (!(k > -1)) throw DomainError("Gauss-Laguerre exponent must exceed -1");
  static std::map<std::pair<Rat, int>, QuadRule> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto key = std::make_pair(k, n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_rule(laguerre_recurrence(k, n), n)).first;
  return it->second;
}

WeightedInterval analyze_weight(const QuasiRational& weight, const Interval& interval) {
  if (weight.is_zero()) throw DomainError("weight is identically zero");
  WeightedInterval wi;
  wi.weight = weight;
  wi.interval = interval;
  RationalFunc smooth(weight.constant());

  bool jacobi_iv = !interval.left_inf && !interval.right_inf && interval.a == -1 &&
                   interval.b == 1;
  bool laguerre_iv = !interval.left_inf && interval.right_inf && interval.a == 0;
  if (!jacobi_iv && !laguerre_iv)
    throw DomainError("quadrature supports (-1,1) and (0,inf) only");

  if (jacobi_iv) {
    wi.kind = WeightedInterval::Kind::jacobi;
    if (!weight.exp_part().is_zero())
      throw DomainError("exponential factor in a weight on (-1,1)");
    for (const PowerFactor& f : weight.factors()) {
      if (f.root == 1 && f.flipped) {
        wi.alpha += f.exponent;
        continue;
      }
      if (f.root == -1 && !f.flipped) {
        wi.beta += f.exponent;
        continue;
      }
      if (!is_integer(f.exponent))
        throw DomainError("fractional power away from the interval endpoints");
      long e = to_long(f.exponent);
      if (f.root == 1 || f.root == -1) {
        (f.root == 1 ? wi.alpha : wi.beta) += f.exponent;
        if (!f.flipped && e % 2 != 0) smooth = -smooth;
        continue;
      }
      if (f.root > -1 && f.root < 1)
        throw DomainError("weight has a zero or pole inside the interval");
      RationalPoly base = f.flipped ? RationalPoly(f.root) - RationalPoly::x()
                                    : RationalPoly::x() - RationalPoly(f.root);
      smooth = smooth * rf_int_pow(base, e);
    }
    if (!(wi.alpha > -1 && wi.beta > -1))
      throw DomainError("weight moments diverge at an endpoint");
  } else {
    wi.kind = WeightedInterval::Kind::laguerre;
    if (weight.exp_part() != RationalPoly(std::vector<Rat>{Rat(0), Rat(-1)}))
      throw DomainError("weight on (0,inf) must carry the factor exp(-x)");
    for (const PowerFactor& f : weight.factors()) {
      if (f.root == 0 && !f.flipped) {
        wi.k += f.exponent;
        continue;
      }
      if (!is_integer(f.exponent))
        throw DomainError("fractional power away from the interval endpoints");
      long e = to_long(f.exponent);
      if (f.root == 0) {
        wi.k += f.exponent;
        if (e % 2 != 0) smooth = -smooth;
        continue;
      }
      if (f.root > 0)
        throw DomainError("weight has a zero or pole inside the interval");
      RationalPoly base = f.flipped ? RationalPoly(f.root) - RationalPoly::x()
                                    : RationalPoly::x() - RationalPoly(f.root);
      smooth = smooth * rf_int_pow(base, e);
    }
    if (!(wi.k > -1)) throw DomainError("weight moments diverge at the origin");
  }

  smooth = smooth * weight.rational_part();
  require_root_free(smooth.num(), interval, "weight numerator");
  require_root_free(smooth.den(), interval, "weight denominator");
  if (smooth.eval(interval.midpoint()) <= 0)
    throw DomainError("weight is not positive on the interval");
  wi.smooth = smooth;
  return wi;
}

namespace {

const QuadRule& rule_for(const WeightedInterval& wi, int n) {
  return wi.kind == WeightedInterval::Kind::jacobi
             ? gauss_jacobi_rule(wi.alpha, wi.beta, n)
             : gauss_laguerre_rule(wi.k, n);
}

}  // namespace

MPFloat inner_product(const RationalFunc& f, const RationalFunc& g,
                      const WeightedInterval& wi, double target_rel_err) {
  if (target_rel_err <= 0) throw ParameterError("target_rel_err must be positive");
  MPFloat tol = MPFloat(target_rel_err) / 10;
  MPFloat prev(0);
  bool have = false;
  for (int n = 32; n <= 4096; n *= 2) {
    const QuadRule& rule = rule_for(wi, n);
    MPFloat cur(0), l1(0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const MPFloat& x = rule.nodes[i];
      MPFloat v = f.eval_f(x) * g.eval_f(x) * wi.smooth.eval_f(x);
      cur += rule.weights[i] * v;
      l1 += rule.weights[i] * abs(v);
    }
    if (have && abs(cur - prev) <= tol * l1) return cur;
    prev = cur;
    have = true;
  }
  throw NumericalError("inner product did not converge within 4096 nodes");
}

MPFloat eval_float_poly(const FloatPoly& c, const MPFloat& x) {
  MPFloat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

MPFloat dot_rule(const QuadRule& rule, const std::vector<MPFloat>& smooth_at,
                 const FloatPoly& f, const FloatPoly& g) {
  MPFloat s(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    s += rule.weights[i] * smooth_at[i] * eval_float_poly(f, rule.nodes[i]) *
         eval_float_poly(g, rule.nodes[i]);
  return s;
}

std::vector<FloatPoly> gs_once(const std::vector<FloatPoly>& basis, const QuadRule& rule,
                               const std::vector<MPFloat>& smooth_at,
                               Normalization norm_rule) {
  std::vector<FloatPoly> es;
  std::vector<MPFloat> norms2;
  for (const FloatPoly& u : basis) {
    FloatPoly v = u;
    // two passes keep the loss of orthogonality at roundoff level
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < es.size(); ++j) {
        MPFloat c = dot_rule(rule, smooth_at, v, es[j]) / norms2[j];
        for (std::size_t i = 0; i < es[j].size(); ++i) v[i] -= c * es[j][i];
      }
    }
    MPFloat n2 = dot_rule(rule, smooth_at, v, v);
    if (n2 <= 0)
      throw NumericalError("Gram matrix lost positivity; lower n_max or raise precision");
    es.push_back(std::move(v));
    norms2.push_back(n2);
  }
  for (FloatPoly& e : es) {
    MPFloat scale = norm_rule == Normalization::monic ? e.back() : eval_float_poly(e, MPFloat(1));
    if (scale == 0) throw NumericalError("degenerate normalization value");
    for (MPFloat& c : e) c /= scale;
  }
  return es;
}

bool coeffs_agree(const std::vector<FloatPoly>& a, const std::vector<FloatPoly>& b,
                  const MPFloat& tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    MPFloat scale(1);
    for (const MPFloat& c : b[i]) scale = std::max(scale, abs(c));
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (abs(a[i][j] - b[i][j]) > tol * scale) return false;
  }
  return true;
}

}  // namespace

std::vector<FloatPoly> gram_schmidt(const Flag& flag, const WeightedInterval& wi,
                                    int n_max, Normalization rule,
                                    double target_rel_err) {
  if (n_max < 1) throw ParameterError("n_max must be positive");
  std::vector<FloatPoly> basis;
  int prev_deg = -1;
  for (int k = 1; k <= n_max; ++k) {
    RationalPoly u = flag.basis(k);
    if (u.degree() <= prev_deg)
      throw ShapeError("flag degrees must be strictly increasing");
    prev_deg = u.degree();
    FloatPoly c(u.degree() + 1);
    for (int i = 0; i <= u.degree(); ++i) c[i] = to_float<MPFloat>(u.coeff(i));
    basis.push_back(std::move(c));
  }

  MPFloat tol = MPFloat(target_rel_err) / 10;
  std::vector<FloatPoly> prev;
  for (int n = 64; n <= 4096; n *= 2) {
    const QuadRule& qr = rule_for(wi, n);
    std::vector<MPFloat> smooth_at(qr.nodes.size());
    for (std::size_t i = 0; i < qr.nodes.size(); ++i)
      smooth_at[i] = wi.smooth.eval_f(qr.nodes[i]);
    std::vector<FloatPoly> cur = gs_once(basis, qr, smooth_at, rule);
    if (!prev.empty() && coeffs_agree(prev, cur, tol)) return cur;
    prev = std::move(cur);
  }
  throw NumericalError("orthogonalization did not stabilize within 4096 nodes");
}

}  // namespace xop
