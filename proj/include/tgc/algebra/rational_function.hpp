#pragma once

#include <complex>
#include <span>
#include <string>

#include "tgc/algebra/polynomial.hpp"

namespace tgc {

/// num/den over Gaussian-rational polynomials. Normalized form: common
/// monomial factors cancelled, den divides out of num when it can, and the
/// grlex-leading coefficient of den is 1. Full multivariate gcd is not taken.
class RationalFunction {
 public:
  explicit RationalFunction(int numVars = 0);
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int numVars() const { return num_.numVars(); }
  bool isZero() const { return num_.isZero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  /// Cross-multiplication test; independent of the representative.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
  std::string toString() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// Quotient of homogeneous polynomials; homDegree = deg num - deg den.
class HomRationalFunction {
 public:
  HomRationalFunction() = default;
  HomRationalFunction(HomogeneousPolynomial num, HomogeneousPolynomial den);
  explicit HomRationalFunction(HomogeneousPolynomial num);
  static HomRationalFunction zero(int numVars, int homDegree);

  const HomogeneousPolynomial& num() const { return num_; }
  const HomogeneousPolynomial& den() const { return den_; }
  int numVars() const { return num_.numVars(); }
  int homDegree() const { return num_.degree() - den_.degree(); }
  bool isZero() const { return num_.isZero(); }

  friend HomRationalFunction operator+(const HomRationalFunction& a, const HomRationalFunction& b);
  friend HomRationalFunction operator-(const HomRationalFunction& a, const HomRationalFunction& b);
  friend HomRationalFunction operator*(const HomRationalFunction& a, const HomRationalFunction& b);
  friend HomRationalFunction operator/(const HomRationalFunction& a, const HomRationalFunction& b);
  friend bool operator==(const HomRationalFunction& a, const HomRationalFunction& b);

  RationalFunction toRationalFunction() const { return {num_.poly(), den_.poly()}; }
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
  /// "num" when den is 1, otherwise "(num)/(den)".
  std::string toString() const;

 private:
  void normalize();

  HomogeneousPolynomial num_;
  HomogeneousPolynomial den_;
};

/// Cancels monomial content, tries exact division of num by den, makes den monic.
void normalizeFraction(Polynomial& num, Polynomial& den);

}  // namespace tgc
