// SPDX-License-Identifier: MIT
//
// Scalar types and the error taxonomy shared by every module.

#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace xop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using MPFloat = boost::multiprecision::cpp_bin_float_50;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation point or parameter outside the valid region.
struct DomainError : Error { using Error::Error; };
// Malformed input: CLI arguments, family parameter invariants.
struct ParameterError : Error { using Error::Error; };
// Exact division with a nonzero remainder.
struct DivisibilityError : Error { using Error::Error; };
// Object not expressible in the requested closed form.
struct RepresentationError : Error { using Error::Error; };
// Eigenspace or polynomial degree degenerates.
struct DegeneracyError : Error { using Error::Error; };
// Claimed eigenfunction fails its defining identity.
struct EigenfunctionError : Error { using Error::Error; };
// Invalid gauge factor.
struct GaugeError : Error { using Error::Error; };
// Structural mismatch: flags, bases, shape invariance.
struct ShapeError : Error { using Error::Error; };
// Degree decomposition requested for an operator with poles away from 0.
struct DecompositionError : Error { using Error::Error; };
// Linear system without the expected unique solution.
struct SingularSystemError : Error { using Error::Error; };
// Quadrature failed to converge.
struct NumericalError : Error { using Error::Error; };

int sgn(const Rat& r);
bool is_integer(const Rat& r);
long to_long(const Rat& r);  // requires is_integer and long range

Rat rat_pow(const Rat& base, long e);  // integer e, possibly negative
Rat factorial(long n);

// Accepts "p", "-p/q" and plain decimals such as "1.25".
Rat parse_rat(const std::string& text);
// Inverse of parse_rat for integers and fractions: "p" or "p/q".
std::string rat_string(const Rat& r);

template <class T>
T to_float(const Rat& r) {
  return static_cast<T>(numerator(r)) / static_cast<T>(denominator(r));
}

}  // namespace xop
