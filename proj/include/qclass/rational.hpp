#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "qclass/errors.hpp"

namespace qclass {

// Exact rational scalar used everywhere; arbitrary-precision numerator
// and denominator, always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q" (optional surrounding whitespace).
Rational parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& x);

// Fixed-point decimal approximation with the given number of fractional
// digits, computed by exact long division (round half away from zero).
// Used only for the --decimal rendering; always labeled approximate.
std::string decimal_approx(const Rational& x, int digits = 6);

// gcd on nonnegative rationals: gcd of numerators over lcm of denominators.
// gcd(x, 0) = x.  Step size of the lattice generated by the inputs.
Rational rational_gcd(const Rational& a, const Rational& b);

using Matrix = std::vector<std::vector<Rational>>;

// Exact inverse by Gauss-Jordan elimination; throws SingularPairing when
// the matrix has no inverse.
Matrix invert_matrix(const Matrix& m);

// Solves the (possibly non-square, possibly over/under-determined) system
// a?x = rhs exactly by row reduction.  Free variables are pinned to zero so
// the answer is deterministic.  Returns false when inconsistent.
bool solve_linear_system(const Matrix& a, const std::vector<Rational>& rhs,
                         std::vector<Rational>& solution);

}  // namespace qclass
