#pragma once

#include <string_view>

#include "tgc/algebra/gaussian_rational.hpp"
#include "tgc/algebra/polynomial.hpp"
#include "tgc/algebra/univariate.hpp"

namespace tgc {

// Text grammar shared by all documents. A sum of terms joined by + or -;
// a term is a product of factors separated by * or whitespace; a factor is
// an integer, decimal or p/q literal, the imaginary unit i, a variable
// (X<index> for homogeneous coordinates, z for the disk parameter), or a
// parenthesized sum, each optionally raised to ^<integer>. Examples:
//   "3*X0^2 X1 - 1/2*X1^3 + (1+2*i)*X0 X1 X2"
//   "1 + 2*z - 3/4*z^2"
// Errors throw ParseError with the 1-based column of the offending token.

Polynomial parsePolynomial(std::string_view text, int numVars);
/// Also enforces homogeneity (DegreeMismatch otherwise).
HomogeneousPolynomial parseHomogeneous(std::string_view text, int numVars);
UniPolynomial parseUniPolynomial(std::string_view text);
/// A constant expression such as "3/2", "-i" or "1/2+3/4*i".
GaussianRational parseGaussianRational(std::string_view text);

}  // namespace tgc
