// SPDX-License-Identifier: MIT

#include "xop/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xop/classical.hpp"
#include "xop/factorization.hpp"
#include "xop/quadrature.hpp"
#include "xop/x1_families.hpp"
#include "xop/xm_jacobi.hpp"

namespace xop {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sci(const MPFloat& v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", static_cast<double>(v));
  return buf;
}

int usage_error(std::ostream& err, const std::string& reason) {
  err << ordered_json{{"error", reason}}.dump() << "\n";
  return 2;
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::classical_jacobi: return "classical-jacobi";
    case FamilyKind::x1_jacobi: return "x1-jacobi";
    case FamilyKind::x1_laguerre: return "x1-laguerre";
    case FamilyKind::xm_jacobi: return "xm-jacobi";
  }
  return "?";
}

std::string param_label(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::x1_laguerre) return "k=" + rat_string(spec.k);
  std::string s = "alpha=" + rat_string(spec.alpha) + ", beta=" + rat_string(spec.beta);
  if (spec.kind == FamilyKind::xm_jacobi) s += ", m=" + std::to_string(spec.m);
  return s;
}

// First member of the family: P_0, or P_1 for the X1 families, or P_m.
int first_index(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::classical_jacobi: return 0;
    case FamilyKind::xm_jacobi: return spec.m;
    default: return 1;
  }
}

RationalPoly family_poly(const FamilySpec& spec, int n) {
  switch (spec.kind) {
    case FamilyKind::classical_jacobi: return jacobi(n, {spec.alpha, spec.beta});
    case FamilyKind::x1_jacobi: return x1_jacobi_poly(X1JacobiParams(spec.alpha, spec.beta), n);
    case FamilyKind::x1_laguerre: return x1_laguerre_poly(X1LaguerreParams(spec.k), n);
    case FamilyKind::xm_jacobi: return xm_poly(XmParams(spec.alpha, spec.beta, spec.m), n);
  }
  throw ParameterError("unknown family");
}

Rat family_eigenvalue(const FamilySpec& spec, int n) {
  switch (spec.kind) {
    case FamilyKind::classical_jacobi: return jacobi_eigenvalue(n, {spec.alpha, spec.beta});
    case FamilyKind::x1_jacobi: return x1_jacobi_eigenvalue(n, X1JacobiParams(spec.alpha, spec.beta));
    case FamilyKind::x1_laguerre: return x1_laguerre_eigenvalue(n);
    case FamilyKind::xm_jacobi: return xm_eigenvalue(n, XmParams(spec.alpha, spec.beta, spec.m));
  }
  throw ParameterError("unknown family");
}

DiffOp2 family_operator(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::classical_jacobi: return classical_jacobi_op({spec.alpha, spec.beta});
    case FamilyKind::x1_jacobi: return x1_jacobi_op(X1JacobiParams(spec.alpha, spec.beta));
    case FamilyKind::x1_laguerre: return x1_laguerre_op(X1LaguerreParams(spec.k));
    case FamilyKind::xm_jacobi: return xm_operator(XmParams(spec.alpha, spec.beta, spec.m));
  }
  throw ParameterError("unknown family");
}

std::pair<QuasiRational, Interval> family_weight(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::classical_jacobi:
      if (!(spec.alpha > -1 && spec.beta > -1))
        throw ParameterError("classical weight requires alpha, beta > -1");
      return {classical_weight({spec.alpha, spec.beta}), Interval::open(Rat(-1), Rat(1))};
    case FamilyKind::x1_jacobi:
      return {x1_jacobi_weight(X1JacobiParams(spec.alpha, spec.beta)),
              Interval::open(Rat(-1), Rat(1))};
    case FamilyKind::x1_laguerre:
      return {x1_laguerre_weight(X1LaguerreParams(spec.k)), Interval::right_ray(Rat(0))};
    case FamilyKind::xm_jacobi:
      return {xm_weight(XmParams(spec.alpha, spec.beta, spec.m)),
              Interval::open(Rat(-1), Rat(1))};
  }
  throw ParameterError("unknown family");
}

FamilySpec default_spec(FamilyKind kind) {
  FamilySpec s;
  s.kind = kind;
  switch (kind) {
    case FamilyKind::classical_jacobi:
      s.alpha = Rat(1, 3);
      s.beta = Rat(-1, 2);
      break;
    case FamilyKind::x1_jacobi:
      s.alpha = Rat(1);
      s.beta = Rat(2);
      break;
    case FamilyKind::x1_laguerre:
      s.k = Rat(2);
      break;
    case FamilyKind::xm_jacobi:
      s.alpha = Rat(5, 4);
      s.beta = Rat(1, 2);
      s.m = 2;
      break;
  }
  return s;
}

// -------------------------------------------------------------------------
// verify plumbing

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void line(bool ok, const std::string& label, const std::string& detail) {
    if (!ok) ++failures;
    out << (ok ? "PASS  " : "FAIL  ") << label;
    if (!detail.empty()) out << "  [" << detail << "]";
    out << "\n";
  }

  template <class F>
  void check(const std::string& label, F f) {
    try {
      std::pair<bool, std::string> r = f();
      line(r.first, label, r.second);
    } catch (const std::exception& e) {
      line(false, label, e.what());
    }
  }
};

using CheckResult = std::pair<bool, std::string>;

void verify_eigenvalues(Reporter& rep, const FamilySpec& spec, int kmax) {
  rep.check(family_name(spec.kind) + " eigenvalue relation (" + param_label(spec) + ")",
            [&]() -> CheckResult {
              DiffOp2 t = family_operator(spec);
              int n0 = first_index(spec);
              for (int n = n0; n <= n0 + kmax; ++n) {
                RationalPoly p = family_poly(spec, n);
                if (!(t.apply(p) == RationalFunc(p * family_eigenvalue(spec, n))))
                  return {false, "residual nonzero at n = " + std::to_string(n)};
              }
              return {true, "T(p_n) = lambda_n p_n exact for n <= " + std::to_string(n0 + kmax)};
            });
}

void verify_identities(Reporter& rep, const FamilySpec& spec, int kmax) {
  verify_eigenvalues(rep, spec, kmax);
  if (spec.kind == FamilyKind::classical_jacobi) {
    JacobiParams prm{spec.alpha, spec.beta};
    static const char* names[5] = {"P_0 = 1", "parity swap", "(x-1) P_m' expansion",
                                   "derivative lowering", "parameter difference"};
    for (int idx = 0; idx < 5; ++idx) {
      rep.check(std::string("classical identity: ") + names[idx], [&, idx]() -> CheckResult {
        for (int n = 0; n <= kmax; ++n)
          if (!identity_suite(prm, n, n)[idx].is_zero())
            return {false, "nonzero residual at index " + std::to_string(n)};
        return {true, "exact for indices <= " + std::to_string(kmax)};
      });
    }
    JacobiParams up{Rat(spec.alpha + 1), Rat(spec.beta + 1)};
    rep.check("classical raising B(P_n^(a+1,b+1)) = -2(n+1) P_{n+1}", [&]() -> CheckResult {
      for (int n = 0; n <= kmax; ++n)
        if (!(raise(prm, jacobi(n, up)) == jacobi(n + 1, prm) * Rat(-2 * (n + 1))))
          return {false, "fails at n = " + std::to_string(n)};
      return {true, "exact for n <= " + std::to_string(kmax)};
    });
    rep.check("classical lowering P_n' = (1+a+b+n)/2 P_{n-1}^(a+1,b+1)", [&]() -> CheckResult {
      for (int n = 1; n <= kmax; ++n) {
        Rat c = (prm.alpha + prm.beta + n + 1) / 2;
        if (!(lower(jacobi(n, prm)) == jacobi(n - 1, up) * c))
          return {false, "fails at n = " + std::to_string(n)};
      }
      return {true, "exact for n <= " + std::to_string(kmax)};
    });
    rep.check("Rodrigues iteration reproduces P_n", [&]() -> CheckResult {
      int top = std::min(kmax, 8);
      for (int n = 0; n <= top; ++n)
        if (!(rodrigues(n, prm) == jacobi(n, prm)))
          return {false, "fails at n = " + std::to_string(n)};
      return {true, "exact for n <= " + std::to_string(top)};
    });
  }
  if (spec.kind == FamilyKind::xm_jacobi && spec.m > 0) {
    XmParams prm(spec.alpha, spec.beta, spec.m);
    XmParams up(Rat(spec.alpha + 1), Rat(spec.beta + 1), spec.m);
    if (admissible(prm).ok() && admissible(up).ok()) {
      int top = std::min(kmax, 6);
      rep.check("Xm raising B^(P^_{m+k}) = -2(1+k) P^_{m+k+1}", [&]() -> CheckResult {
        FamilySpec us = spec;
        us.alpha = up.alpha;
        us.beta = up.beta;
        for (int k = 0; k <= top; ++k)
          if (!(xm_raise(prm, family_poly(us, spec.m + k)) ==
                RationalFunc(xm_poly(prm, spec.m + k + 1) * Rat(-2 * (k + 1)))))
            return {false, "fails at k = " + std::to_string(k)};
        return {true, "exact for k <= " + std::to_string(top)};
      });
      rep.check("Xm lowering A^(P^_{m+k}) = (1+a+b+k)/2 P^_{m+k-1}", [&]() -> CheckResult {
        if (!xm_lower(prm, xm_poly(prm, spec.m)).is_zero())
          return {false, "A^ does not annihilate P^_m"};
        for (int k = 1; k <= top; ++k) {
          Rat c = (prm.alpha + prm.beta + k + 1) / 2;
          if (!(xm_lower(prm, xm_poly(prm, spec.m + k)) ==
                RationalFunc(xm_poly(up, spec.m + k - 1) * c)))
            return {false, "fails at k = " + std::to_string(k)};
        }
        return {true, "exact for k <= " + std::to_string(top)};
      });
    }
  }
}

void verify_factorizations(Reporter& rep, const FamilySpec& spec) {
  JacobiParams prm{spec.alpha, spec.beta};
  rep.check("classical state-deleting factorization T = B A + lambda_0", [&]() -> CheckResult {
    int mm = std::max(1, spec.m);
    FactorizationData f = factorize(classical_jacobi_op(prm), QuasiRational::from_poly(jacobi(mm, prm)),
                                    RationalFunc(Rat(1)), jacobi_eigenvalue(mm, prm));
    if (f.kind != FactorizationKind::state_deleting)
      return {false, "classified as something other than state-deleting"};
    return {true, "phi = P_" + std::to_string(mm) + ", operator identity expands to zero"};
  });
  if (spec.m < 1) return;
  Rat a = Rat(spec.alpha + 1), b = Rat(spec.beta - 1);
  rep.check("Xm isospectral factorization, partner equals the Xm operator", [&]() -> CheckResult {
    SeedPair seed = quasi_rational_seeds({a, b}, spec.m)[2];
    RationalFunc gauge(RationalPoly(std::vector<Rat>{Rat(1), Rat(-1)}) * xi(a, b, spec.m));
    FactorizationData f = factorize(classical_jacobi_op({a, b}), seed.phi, gauge, seed.lambda);
    if (f.kind != FactorizationKind::isospectral) return {false, "classified as non-isospectral"};
    if (!(f.partner == xm_operator(XmParams(spec.alpha, spec.beta, spec.m))))
      return {false, "partner differs from the Xm operator"};
    return {true, "lambda_0 = " + rat_string(seed.lambda)};
  });
  rep.check("Xm shape-invariance pair", [&]() -> CheckResult {
    XmParams low(spec.alpha, spec.beta, spec.m);
    XmParams up(Rat(spec.alpha + 1), Rat(spec.beta + 1), spec.m);
    if (!(compose(xm_raise_op(low), xm_lower_op(low)) == xm_operator(low)))
      return {false, "B^ A^ differs from T"};
    Rat shift = Rat(spec.alpha + spec.beta + 2);
    if (!(compose(xm_lower_op(low), xm_raise_op(low)).shift(RationalFunc(shift)) == xm_operator(up)))
      return {false, "A^ B^ + a + b + 2 differs from the shifted operator"};
    return {true, "T = B^ A^ and T_up = A^ B^ + a + b + 2 exactly"};
  });
}

void verify_orthogonality(Reporter& rep, const FamilySpec& spec, int kmax, double tol) {
  rep.check(family_name(spec.kind) + " orthogonality (" + param_label(spec) + ")",
            [&]() -> CheckResult {
              auto [w, iv] = family_weight(spec);
              WeightedInterval wi = analyze_weight(w, iv);
              int n0 = first_index(spec);
              std::vector<RationalPoly> ps;
              for (int n = n0; n <= n0 + kmax; ++n) ps.push_back(family_poly(spec, n));
              std::vector<MPFloat> norms;
              for (const RationalPoly& p : ps)
                norms.push_back(inner_product(RationalFunc(p), RationalFunc(p), wi));
              MPFloat worst(0);
              for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = i + 1; j < ps.size(); ++j) {
                  MPFloat g = abs(inner_product(RationalFunc(ps[i]), RationalFunc(ps[j]), wi)) /
                              sqrt(norms[i] * norms[j]);
                  worst = std::max(worst, g);
                }
              return {static_cast<double>(worst) < tol,
                      "max normalized off-diagonal " + sci(worst) + " for n <= " +
                          std::to_string(n0 + kmax)};
            });
}

void verify_norms(Reporter& rep, const FamilySpec& spec, int kmax, double tol) {
  XmParams prm(spec.alpha, spec.beta, spec.kind == FamilyKind::xm_jacobi ? spec.m : 0);
  QuasiRational w = xm_weight(prm);
  WeightedInterval wi = analyze_weight(w, Interval::open(Rat(-1), Rat(1)));
  for (int k = 0; k <= kmax; ++k) {
    rep.check("norm formula k = " + std::to_string(k) + " (" + param_label(spec) + ")",
              [&]() -> CheckResult {
                MPFloat closed = xm_norm(prm, k);
                RationalPoly p = xm_poly(prm, prm.m + k);
                MPFloat quad = inner_product(RationalFunc(p), RationalFunc(p), wi);
                MPFloat rel = abs(quad / closed - 1);
                return {static_cast<double>(rel) < tol,
                        "closed " + sci(closed) + ", quadrature " + sci(quad) + ", rel " + sci(rel)};
              });
  }
  // The norm relation integrates y_j^2 against the classical (alpha+1, beta-1)
  // weight, so it needs beta > 0 for convergence.
  if (prm.m < 1 || !(prm.beta > 0)) return;
  Rat a = Rat(prm.alpha + 1), b = Rat(prm.beta - 1);
  try {
    SeedPair seed = quasi_rational_seeds({a, b}, prm.m)[2];
    RationalFunc gauge(RationalPoly(std::vector<Rat>{Rat(1), Rat(-1)}) * xi(a, b, prm.m));
    FactorizationData f = factorize(classical_jacobi_op({a, b}), seed.phi, gauge, seed.lambda);
    QuasiRational W = classical_weight({a, b});
    QuasiRational W_hat = dual_data(f, W).first;
    Interval iv = Interval::open(Rat(-1), Rat(1));
    for (int j = 0; j <= std::min(kmax, 6); ++j) {
      rep.check("norm relation j = " + std::to_string(j), [&]() -> CheckResult {
        auto [lhs, rhs] = norm_relation_check(f, jacobi(j, {a, b}), jacobi_eigenvalue(j, {a, b}),
                                              W, W_hat, iv);
        MPFloat rel = abs(lhs / rhs - 1);
        return {static_cast<double>(rel) < tol,
                "int A(y)^2 W^ = " + sci(lhs) + ", (l0 - l_j) int y^2 W = " + sci(rhs) +
                    ", rel " + sci(rel)};
      });
    }
  } catch (const Error& e) {
    rep.line(false, "norm relation setup", e.what());
  }
}

RationalPoly monomial_or(int k, const RationalPoly& first) {
  return k == 1 ? first : RationalPoly::monomial(k);
}

void flag_line(Reporter& rep, const std::string& label, const DiffOp2& t, const Flag& flag,
               int kmax) {
  rep.check(label, [&]() -> CheckResult {
    InvarianceCertificate cert = preserves_flag(t, flag, kmax);
    if (!cert.ok) return {false, "invariance fails at k = " + std::to_string(cert.failing_k)};
    return {true, "invariance certificate up to k = " + std::to_string(cert.checked_up_to)};
  });
}

void verify_example(Reporter& rep, int example, int kmax) {
  RationalFunc one(Rat(1));
  RationalPoly x = RationalPoly::x();
  switch (example) {
    case 1: {
      DiffOp2 t{one, RationalFunc(RationalPoly(Rat(-2)), x), RationalFunc()};
      Flag flag{[](int k) { return monomial_or(k, RationalPoly(Rat(1))); }};
      flag_line(rep, "example 1: y'' - (2/x) y' on {1, x^2, x^3, ...}", t, flag, kmax);
      break;
    }
    case 2: {
      DiffOp2 t{one, RationalFunc(RationalPoly(std::vector<Rat>{Rat(-2), Rat(-2)}), x),
                RationalFunc(RationalPoly(Rat(2)), x)};
      Flag flag{[](int k) {
        return monomial_or(k, RationalPoly(std::vector<Rat>{Rat(1), Rat(1)}));
      }};
      flag_line(rep, "example 2: y'' - 2(1 + 1/x) y' + (2/x) y on {x+1, x^2, ...}", t, flag, kmax);
      break;
    }
    case 3: {
      DiffOp2 t{one, RationalFunc(-x), RationalFunc()};
      Flag hermite{[](int k) {
        RationalPoly prev(Rat(1)), cur = RationalPoly::x();
        for (int n = 1; n < k; ++n) {
          RationalPoly next = RationalPoly::x() * cur - prev * Rat(n);
          prev = cur;
          cur = next;
        }
        return cur;
      }};
      Flag standard{[](int k) { return RationalPoly::monomial(k - 1); }};
      flag_line(rep, "example 3: Hermite operator on its eigenpolynomial flag", t, hermite, kmax);
      flag_line(rep, "example 3: Hermite operator on the standard flag", t, standard, kmax);
      break;
    }
    case 4: {
      DiffOp2 d2{one, RationalFunc(), RationalFunc()};
      DiffOp2 t = gauge_transform(d2, RationalFunc(x));
      Flag flag{[](int k) { return RationalPoly::monomial(k); }};
      flag_line(rep, "example 4: conjugated free operator on {x, x^2, ...}", t, flag, kmax);
      break;
    }
    case 5: {
      Flag flag{[](int k) {
        if (k == 1) return RationalPoly(Rat(1));
        int n = k + 1;
        if (n % 2 == 1) return RationalPoly::monomial(n) - RationalPoly::monomial(1, Rat(n));
        return RationalPoly::monomial(n) - RationalPoly::monomial(2, Rat(n / 2));
      }};
      RationalPoly x2m1(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
      DiffOp2 t1{one, RationalFunc(RationalPoly(std::vector<Rat>{Rat(0), Rat(-5), Rat(0), Rat(1)}), x2m1),
                 RationalFunc()};
      DiffOp2 t2{RationalFunc(x),
                 RationalFunc(RationalPoly(std::vector<Rat>{Rat(-2), Rat(0), Rat(-2)}), x2m1),
                 RationalFunc()};
      DiffOp2 t3{RationalFunc(x2m1), RationalFunc(RationalPoly(std::vector<Rat>{Rat(0), Rat(-2)})),
                 RationalFunc()};
      flag_line(rep, "example 5: T1 on the codimension-2 flag", t1, flag, kmax);
      flag_line(rep, "example 5: T2 on the codimension-2 flag", t2, flag, kmax);
      flag_line(rep, "example 5: T3 on the codimension-2 flag", t3, flag, kmax);
      break;
    }
    default:
      throw ParameterError("--example must lie in 1..5");
  }
}

void verify_family_flag(Reporter& rep, const FamilySpec& spec, int kmax) {
  std::string label = family_name(spec.kind) + " flag invariance (" + param_label(spec) + ")";
  switch (spec.kind) {
    case FamilyKind::classical_jacobi: {
      Flag standard{[](int k) { return RationalPoly::monomial(k - 1); }};
      flag_line(rep, label, classical_jacobi_op({spec.alpha, spec.beta}), standard, kmax);
      break;
    }
    case FamilyKind::x1_jacobi: {
      X1JacobiParams prm(spec.alpha, spec.beta);
      flag_line(rep, label, x1_jacobi_op(prm), x1_jacobi_flag(prm), kmax);
      break;
    }
    case FamilyKind::x1_laguerre: {
      X1LaguerreParams prm(spec.k);
      flag_line(rep, label, x1_laguerre_op(prm), x1_laguerre_flag(prm), kmax);
      break;
    }
    case FamilyKind::xm_jacobi: {
      XmParams prm(spec.alpha, spec.beta, spec.m);
      xm_data(prm);
      Flag flag{[prm](int k) { return xm_poly(prm, prm.m + k - 1); }};
      flag_line(rep, label, xm_operator(prm), flag, kmax);
      break;
    }
  }
}

// -------------------------------------------------------------------------
// gen

struct GenRow {
  int n;
  Rat eigenvalue;
  RationalPoly p;
};

std::vector<GenRow> gen_rows(const FamilySpec& spec) {
  if (spec.n_lo > spec.n_hi) throw ParameterError("empty degree range");
  std::vector<GenRow> rows;
  for (int n = spec.n_lo; n <= spec.n_hi; ++n)
    rows.push_back({n, family_eigenvalue(spec, n), family_poly(spec, n)});
  return rows;
}

ordered_json params_json(const FamilySpec& spec) {
  ordered_json p = ordered_json::object();
  if (spec.kind == FamilyKind::x1_laguerre) {
    p["k"] = rat_string(spec.k);
    return p;
  }
  p["alpha"] = rat_string(spec.alpha);
  p["beta"] = rat_string(spec.beta);
  if (spec.kind == FamilyKind::xm_jacobi) p["m"] = spec.m;
  return p;
}

std::vector<std::string> coeff_strings(const RationalPoly& p) {
  std::vector<std::string> cs;
  if (p.is_zero()) {
    cs.push_back("0");
    return cs;
  }
  for (const Rat& c : p.coeffs()) cs.push_back(rat_string(c));
  return cs;
}

}  // namespace

int cmd_gen(const FamilySpec& spec, OutputFormat format, std::ostream& out, std::ostream& err) {
  try {
    std::vector<GenRow> rows = gen_rows(spec);
    if (format == OutputFormat::json) {
      ordered_json j;
      j["family"] = family_name(spec.kind);
      j["params"] = params_json(spec);
      ordered_json rs = ordered_json::array();
      for (const GenRow& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["eigenvalue"] = rat_string(r.eigenvalue);
        row["coeffs"] = coeff_strings(r.p);
        row["value_at_1"] = rat_string(r.p.eval(Rat(1)));
        rs.push_back(std::move(row));
      }
      j["rows"] = std::move(rs);
      out << j.dump(2) << "\n";
    } else {
      out << "n,eigenvalue,value_at_1,coeffs...\n";
      for (const GenRow& r : rows) {
        out << r.n << "," << rat_string(r.eigenvalue) << "," << rat_string(r.p.eval(Rat(1)));
        for (const std::string& c : coeff_strings(r.p)) out << "," << c;
        out << "\n";
      }
    }
    return 0;
  } catch (const Error& e) {
    return usage_error(err, e.what());
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int cmd_admissible(const Rat& alpha, const Rat& beta, int m, std::ostream& out,
                   std::ostream& err) {
  try {
    AdmissibilityVerdict v = admissible(XmParams(alpha, beta, m));
    const char* name = "admissible";
    switch (v.verdict) {
      case Admissibility::admissible: break;
      case Admissibility::degenerate_degree: name = "degenerate-degree"; break;
      case Admissibility::boundary_root: name = "boundary-root"; break;
      case Admissibility::interior_zero: name = "interior-zero"; break;
    }
    out << name << ": " << v.reason << "\n";
    return v.ok() ? 0 : 1;
  } catch (const Error& e) {
    return usage_error(err, e.what());
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err) {
  bool all = suite == "all";
  if (!all && suite != "identities" && suite != "factorizations" && suite != "orthogonality" &&
      suite != "norms" && suite != "flags")
    return usage_error(err, "unknown suite '" + suite +
                                "' (expected identities, factorizations, orthogonality, norms, "
                                "flags or all)");
  double tol_num = opt.tol > 0 ? opt.tol : 1e-8;
  double tol_orth = opt.tol > 0 ? opt.tol : 1e-10;
  int kmax = opt.kmax > 0 ? opt.kmax : 8;
  int kflag = opt.kmax > 0 ? opt.kmax : 12;
  try {
    Reporter rep{out};
    if (all || suite == "identities") {
      FamilySpec s = opt.has_spec ? opt.spec : default_spec(FamilyKind::classical_jacobi);
      verify_identities(rep, s, kmax);
    }
    if (all || suite == "factorizations") {
      FamilySpec s = opt.has_spec && opt.spec.kind != FamilyKind::x1_laguerre
                         ? opt.spec
                         : default_spec(FamilyKind::xm_jacobi);
      verify_factorizations(rep, s);
    }
    if (all || suite == "orthogonality") {
      if (opt.has_spec) {
        verify_orthogonality(rep, opt.spec, kmax, tol_orth);
      } else {
        for (FamilyKind kind : {FamilyKind::classical_jacobi, FamilyKind::x1_jacobi,
                                FamilyKind::x1_laguerre, FamilyKind::xm_jacobi})
          verify_orthogonality(rep, default_spec(kind), kmax, tol_orth);
      }
    }
    if (all || suite == "norms") {
      bool supported = opt.has_spec && (opt.spec.kind == FamilyKind::classical_jacobi ||
                                        opt.spec.kind == FamilyKind::xm_jacobi);
      if (opt.has_spec && !supported && !all)
        return usage_error(err, "the norms suite covers the classical and Xm-Jacobi families");
      FamilySpec s = supported ? opt.spec : default_spec(FamilyKind::xm_jacobi);
      verify_norms(rep, s, kmax, tol_num);
    }
    if (all || suite == "flags") {
      if (opt.example > 0) {
        verify_example(rep, opt.example, kflag);
      } else {
        for (int ex = 1; ex <= 5; ++ex) verify_example(rep, ex, kflag);
        if (opt.has_spec) verify_family_flag(rep, opt.spec, kflag);
      }
    }
    if (rep.failures > 0) {
      out << rep.failures << " check(s) failed\n";
      return 1;
    }
    out << "all checks passed\n";
    return 0;
  } catch (const Error& e) {
    return usage_error(err, e.what());
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int cmd_sample(const FamilySpec& spec, const std::string& what, int n_points, const Rat& x_lo,
               const Rat& x_hi, std::ostream& out, std::ostream& err) {
  try {
    if (what != "weight" && what != "poly")
      throw ParameterError("sample target must be weight or poly");
    if (n_points < 1) throw ParameterError("need at least one sample point");
    if (x_hi < x_lo) throw ParameterError("empty sample range");
    std::vector<Rat> xs;
    for (int i = 0; i < n_points; ++i)
      xs.push_back(n_points == 1 ? x_lo : Rat(x_lo + (x_hi - x_lo) * i / (n_points - 1)));
    std::vector<double> values;
    if (what == "weight") {
      auto [w, iv] = family_weight(spec);
      for (const Rat& x : xs) {
        if (!iv.contains(x))
          throw DomainError("sample point " + rat_string(x) + " lies outside the weight domain");
        values.push_back(static_cast<double>(w.eval_f<MPFloat>(to_float<MPFloat>(x))));
      }
    } else {
      if (spec.n_lo != spec.n_hi) throw ParameterError("sampling a polynomial needs a single --n");
      RationalPoly p = family_poly(spec, spec.n_lo);
      for (const Rat& x : xs) values.push_back(to_float<double>(p.eval(x)));
    }
    out << "x,value\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
      out << fmt(to_float<double>(xs[i])) << "," << fmt(values[i]) << "\n";
    return 0;
  } catch (const Error& e) {
    return usage_error(err, e.what());
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

namespace {

FamilyKind parse_family(const std::string& s) {
  if (s == "classical-jacobi") return FamilyKind::classical_jacobi;
  if (s == "x1-jacobi") return FamilyKind::x1_jacobi;
  if (s == "x1-laguerre") return FamilyKind::x1_laguerre;
  if (s == "xm-jacobi") return FamilyKind::xm_jacobi;
  throw ParameterError("unknown family '" + s + "'");
}

void parse_range(const std::string& s, int& lo, int& hi) {
  auto bad = [&] { throw ParameterError("bad degree range '" + s + "' (expected n or a..b)"); };
  try {
    std::size_t used = 0;
    std::size_t pos = s.find("..");
    if (pos == std::string::npos) {
      lo = hi = std::stoi(s, &used);
      if (used != s.size()) bad();
    } else {
      std::string a = s.substr(0, pos), b = s.substr(pos + 2);
      lo = std::stoi(a, &used);
      if (used != a.size()) bad();
      hi = std::stoi(b, &used);
      if (used != b.size()) bad();
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad();
  }
  if (lo > hi) throw ParameterError("empty degree range '" + s + "'");
}

FamilySpec build_spec(const std::string& family, const std::string& alpha_s,
                      const std::string& beta_s, const std::string& k_s, bool has_m, int m,
                      const std::string& n_s) {
  FamilySpec spec;
  spec.kind = parse_family(family);
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw ParameterError(std::string("missing required option ") + flag);
    return parse_rat(v);
  };
  switch (spec.kind) {
    case FamilyKind::x1_laguerre:
      spec.k = need(k_s, "--k");
      break;
    case FamilyKind::xm_jacobi:
      if (!has_m) throw ParameterError("missing required option --m");
      spec.m = m;
      [[fallthrough]];
    default:
      spec.alpha = need(alpha_s, "--alpha");
      spec.beta = need(beta_s, "--beta");
      break;
  }
  int lo = first_index(spec);
  if (n_s.empty()) {
    spec.n_lo = lo;
    spec.n_hi = lo + 8;
  } else {
    parse_range(n_s, spec.n_lo, spec.n_hi);
  }
  return spec;
}

template <class F>
int with_output(const std::string& path, std::ostream& out, std::ostream& err, F run) {
  if (path.empty()) return run(out);
  std::ofstream file(path, std::ios::binary);
  if (!file) return usage_error(err, "cannot open output file '" + path + "'");
  return run(file);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exceptional orthogonal polynomial tables and checks"};
  app.name("xop");
  app.require_subcommand(1);

  std::string family_s, alpha_s, beta_s, k_s, n_s, what_s, suite_s, from_s, to_s, out_file;
  std::string format_s = "json";
  int m = 0, example = 0, kmax = 0, points = 33;
  double tol = 0;

  const std::vector<std::string> families{"classical-jacobi", "x1-jacobi", "x1-laguerre",
                                          "xm-jacobi"};

  CLI::App* gen = app.add_subcommand("gen", "print a family table with exact coefficients");
  gen->add_option("family", family_s, "family to tabulate")
      ->required()
      ->check(CLI::IsMember(families));
  gen->add_option("--alpha", alpha_s, "alpha parameter (exact rational or decimal)");
  gen->add_option("--beta", beta_s, "beta parameter");
  gen->add_option("--k", k_s, "X1-Laguerre parameter");
  gen->add_option("--m", m, "Xm-Jacobi index");
  gen->add_option("--n", n_s, "degree or range a..b");
  gen->add_option("--format", format_s, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  gen->add_option("--out", out_file, "write to FILE instead of stdout");

  CLI::App* adm = app.add_subcommand("admissible", "report the Xm-Jacobi parameter verdict");
  adm->add_option("--alpha", alpha_s, "alpha parameter")->required();
  adm->add_option("--beta", beta_s, "beta parameter")->required();
  adm->add_option("--m", m, "Xm-Jacobi index")->required();
  adm->add_option("--out", out_file, "write to FILE instead of stdout");

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite_s,
                  "identities | factorizations | orthogonality | norms | flags | all")
      ->required();
  ver->add_option("--family", family_s, "family for the suite")->check(CLI::IsMember(families));
  ver->add_option("--alpha", alpha_s, "alpha parameter");
  ver->add_option("--beta", beta_s, "beta parameter");
  ver->add_option("--k", k_s, "X1-Laguerre parameter");
  ver->add_option("--m", m, "Xm-Jacobi index");
  ver->add_option("--tol", tol, "numeric tolerance (default 1e-8, orthogonality 1e-10)");
  ver->add_option("--kmax", kmax, "index depth (default 8, flag truncation 12)");
  ver->add_option("--example", example, "flag-invariance example 1..5")->check(CLI::Range(1, 5));
  ver->add_option("--out", out_file, "write to FILE instead of stdout");

  CLI::App* smp = app.add_subcommand("sample", "emit float samples for plotting");
  smp->add_option("family", family_s, "family to sample")
      ->required()
      ->check(CLI::IsMember(families));
  smp->add_option("what", what_s, "weight or poly")
      ->required()
      ->check(CLI::IsMember({"weight", "poly"}));
  smp->add_option("--alpha", alpha_s, "alpha parameter");
  smp->add_option("--beta", beta_s, "beta parameter");
  smp->add_option("--k", k_s, "X1-Laguerre parameter");
  smp->add_option("--m", m, "Xm-Jacobi index");
  smp->add_option("--n", n_s, "polynomial degree (single value)");
  smp->add_option("--points", points, "number of grid points");
  smp->add_option("--from", from_s, "left end of the grid (exact rational)");
  smp->add_option("--to", to_s, "right end of the grid");
  smp->add_option("--out", out_file, "write to FILE instead of stdout");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("xop");
    for (const std::string& s : args) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      FamilySpec spec = build_spec(family_s, alpha_s, beta_s, k_s, gen->count("--m") > 0, m, n_s);
      OutputFormat format = format_s == "csv" ? OutputFormat::csv : OutputFormat::json;
      return with_output(out_file, out, err,
                         [&](std::ostream& o) { return cmd_gen(spec, format, o, err); });
    }
    if (adm->parsed()) {
      Rat alpha = parse_rat(alpha_s), beta = parse_rat(beta_s);
      return with_output(out_file, out, err,
                         [&](std::ostream& o) { return cmd_admissible(alpha, beta, m, o, err); });
    }
    if (ver->parsed()) {
      VerifyOptions opt;
      opt.tol = tol;
      opt.kmax = kmax;
      opt.example = example;
      if (ver->count("--family") > 0 || ver->count("--alpha") > 0 || ver->count("--beta") > 0 ||
          ver->count("--k") > 0 || ver->count("--m") > 0) {
        std::string fam = family_s;
        if (fam.empty())
          fam = !k_s.empty() ? "x1-laguerre"
                             : (ver->count("--m") > 0 ? "xm-jacobi" : "classical-jacobi");
        opt.has_spec = true;
        opt.spec = build_spec(fam, alpha_s, beta_s, k_s, ver->count("--m") > 0, m, "");
      }
      return with_output(out_file, out, err,
                         [&](std::ostream& o) { return cmd_verify(suite_s, opt, o, err); });
    }
    if (smp->parsed()) {
      FamilySpec spec = build_spec(family_s, alpha_s, beta_s, k_s, smp->count("--m") > 0, m, n_s);
      bool laguerre = spec.kind == FamilyKind::x1_laguerre;
      Rat lo = from_s.empty() ? (laguerre ? Rat(1, 10) : Rat(-9, 10)) : parse_rat(from_s);
      Rat hi = to_s.empty() ? (laguerre ? Rat(4) : Rat(9, 10)) : parse_rat(to_s);
      return with_output(out_file, out, err, [&](std::ostream& o) {
        return cmd_sample(spec, what_s, points, lo, hi, o, err);
      });
    }
  } catch (const Error& e) {
    return usage_error(err, e.what());
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
  return 2;
}

}  // namespace xop
