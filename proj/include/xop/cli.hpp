// SPDX-License-Identifier: MIT
//
// Command-line front end: `gen` prints family tables with exact rational
// coefficients, `admissible` reports the Xm-Jacobi parameter verdict,
// `verify` runs the identity/factorization/orthogonality/norm/flag suites,
// and `sample` emits float samples of weights and polynomials for plotting.
//
// Exit codes: 0 success (admissible, all checks pass), 1 checked failure,
// 2 usage or parameter error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "xop/rat.hpp"

namespace xop {

enum class FamilyKind { classical_jacobi, x1_jacobi, x1_laguerre, xm_jacobi };

// Parsed family selection; which parameters matter depends on the kind.
struct FamilySpec {
  FamilyKind kind = FamilyKind::classical_jacobi;
  Rat alpha, beta;  // Jacobi-type families
  Rat k;            // X1-Laguerre
  int m = 0;        // Xm-Jacobi
  int n_lo = 0, n_hi = 0;
};

enum class OutputFormat { json, csv };

struct VerifyOptions {
  double tol = 0;   // 0: per-suite default
  int kmax = 0;     // 0: per-suite default
  int example = 0;  // 1..5 selects a flag-invariance example
  bool has_spec = false;
  FamilySpec spec;
};

int cmd_gen(const FamilySpec& spec, OutputFormat format, std::ostream& out,
            std::ostream& err);
int cmd_admissible(const Rat& alpha, const Rat& beta, int m, std::ostream& out,
                   std::ostream& err);
int cmd_verify(const std::string& suite, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err);
int cmd_sample(const FamilySpec& spec, const std::string& what, int n_points,
               const Rat& x_lo, const Rat& x_hi, std::ostream& out, std::ostream& err);

// Arguments without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xop
