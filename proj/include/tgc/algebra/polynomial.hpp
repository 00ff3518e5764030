#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgc/algebra/gaussian_rational.hpp"

namespace tgc {

using Exponent = std::vector<int>;

int totalDegree(const Exponent& e);

/// Graded lexicographic order: total degree first, then lex with X0 > X1 > ...
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over the Gaussian rationals in a fixed
/// number of variables X0..X{n-1}. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, GaussianRational, GrlexLess>;

  explicit Polynomial(int numVars = 0) : numVars_(numVars) {}

  static Polynomial constant(int numVars, const GaussianRational& c);
  static Polynomial variable(int numVars, int index);
  static Polynomial monomial(Exponent e, const GaussianRational& c);

  int numVars() const { return numVars_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  /// -1 for the zero polynomial.
  int totalDegree() const;
  bool isHomogeneous() const;
  std::size_t termCount() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  GaussianRational coefficient(const Exponent& e) const;
  /// Adds c*X^e in place.
  void addTerm(const Exponent& e, const GaussianRational& c);

  /// Greatest term in grlex order; precondition: nonzero.
  const TermMap::value_type& leadingTerm() const { return *terms_.rbegin(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.numVars_ == b.numVars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(int e) const;
  Polynomial derivative(int index) const;

  /// Quotient when b divides *this exactly, nullopt otherwise.
  std::optional<Polynomial> divideExact(const Polynomial& b) const;

  /// Componentwise minimum exponent over all terms; empty polynomial gives zeros.
  Exponent monomialContent() const;
  Polynomial divideByMonomial(const Exponent& e) const;

  /// Sets X_index = value and removes the variable (numVars decreases by one).
  Polynomial eliminateVariable(int index, const GaussianRational& value) const;
  /// Inserts a new variable at position index and homogenizes with it
  /// (inverse of eliminateVariable(index, 1) for homogeneous input).
  Polynomial homogenize(int index) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
  GaussianRational evaluateExact(std::span<const GaussianRational> point) const;

  /// Terms in decreasing grlex order, e.g. "3*X0^2 X1 - 1/2*X1^3".
  std::string toString() const;

 private:
  int numVars_;
  TermMap terms_;
};

/// Polynomial whose terms all have total degree `degree()`. The zero
/// polynomial carries a conventional degree supplied at construction.
class HomogeneousPolynomial {
 public:
  HomogeneousPolynomial() = default;
  /// Throws Error(DegreeMismatch) when p is not homogeneous or its degree
  /// disagrees with a nonnegative expectedDegree.
  explicit HomogeneousPolynomial(Polynomial p, std::optional<int> expectedDegree = std::nullopt);

  static HomogeneousPolynomial zero(int numVars, int degree);

  const Polynomial& poly() const { return p_; }
  int numVars() const { return p_.numVars(); }
  int degree() const { return degree_; }
  bool isZero() const { return p_.isZero(); }

  /// Sum of same-degree polynomials; a zero operand adopts the other's degree.
  friend HomogeneousPolynomial operator+(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);
  friend HomogeneousPolynomial operator-(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);
  friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);
  friend HomogeneousPolynomial operator*(const GaussianRational& c, const HomogeneousPolynomial& a);
  friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    return a.p_ == b.p_ && (a.p_.isZero() || a.degree_ == b.degree_);
  }

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const {
    return p_.evaluate(point);
  }
  std::string toString() const { return p_.toString(); }

 private:
  HomogeneousPolynomial(Polynomial p, int degree, bool) : p_(std::move(p)), degree_(degree) {}

  Polynomial p_;
  int degree_ = 0;
};

/// dP/dX_index; the result has degree d-1 (zero polynomials included).
HomogeneousPolynomial partialDerivative(const HomogeneousPolynomial& p, int index);

}  // namespace tgc
