#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tgc/algebra/gaussian_rational.hpp"
#include "tgc/algebra/polynomial.hpp"

namespace tgc {

/// Dense polynomial in z over the Gaussian rationals; coeffs[i] multiplies z^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<GaussianRational> coeffs);
  UniPolynomial(const GaussianRational& c);  // NOLINT(implicit): constants
  UniPolynomial(long c) : UniPolynomial(GaussianRational(c)) {}  // NOLINT(implicit)

  static UniPolynomial z() { return UniPolynomial({GaussianRational(0), GaussianRational(1)}); }
  /// Monic linear factor z - a.
  static UniPolynomial linear(const GaussianRational& a) { return UniPolynomial({-a, GaussianRational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  bool isConstant() const { return c_.size() <= 1; }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational coeff(int i) const;
  const GaussianRational& leading() const { return c_.back(); }

  UniPolynomial& operator+=(const UniPolynomial& o);
  UniPolynomial& operator-=(const UniPolynomial& o);
  friend UniPolynomial operator+(UniPolynomial a, const UniPolynomial& b) { return a += b; }
  friend UniPolynomial operator-(UniPolynomial a, const UniPolynomial& b) { return a -= b; }
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
  UniPolynomial operator-() const;
  friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) { return a.c_ == b.c_; }

  UniPolynomial pow(int e) const;
  UniPolynomial derivative() const;
  /// Scales to leading coefficient 1; zero stays zero.
  UniPolynomial monic() const;
  /// Euclidean division; throws std::domain_error when b is zero.
  std::pair<UniPolynomial, UniPolynomial> divmod(const UniPolynomial& b) const;
  bool divides(const UniPolynomial& a) const;

  std::complex<double> evaluate(std::complex<double> z) const;
  GaussianRational evaluate(const GaussianRational& z) const;

  /// Exact order of vanishing at a Gaussian-rational point; precondition: nonzero.
  int orderAt(const GaussianRational& z0) const;
  /// Order of vanishing at a complex point from normalized Taylor
  /// coefficients |p^(m)(z0)/m!| compared against tol times the coefficient scale.
  int orderAtNumeric(std::complex<double> z0, double tol = 1e-8) const;

  /// Roots of a square-free polynomial by companion-matrix eigenvalues,
  /// polished with Newton steps.
  std::vector<std::complex<double>> roots() const;

  /// "c0 + c1*z + c2*z^2".
  std::string toString() const;

 private:
  void trim();

  std::vector<GaussianRational> c_;
};

/// Monic gcd; gcd(0, 0) is rejected.
UniPolynomial gcd(const UniPolynomial& a, const UniPolynomial& b);

struct SquareFreeFactor {
  UniPolynomial factor;  // monic, square-free, nonconstant
  int multiplicity;
};

/// Yun's square-free decomposition: p = lc(p) * prod factor^multiplicity.
std::vector<SquareFreeFactor> squareFree(const UniPolynomial& p);
/// Product of distinct monic irreducible factors.
UniPolynomial squareFreePart(const UniPolynomial& p);

/// Reduced quotient num/den in z: gcd cancelled, den monic.
class UniRational {
 public:
  UniRational() : den_(1) {}
  UniRational(UniPolynomial num);  // NOLINT(implicit)
  UniRational(UniPolynomial num, UniPolynomial den);

  const UniPolynomial& num() const { return num_; }
  const UniPolynomial& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }

  friend UniRational operator+(const UniRational& a, const UniRational& b);
  friend UniRational operator-(const UniRational& a, const UniRational& b);
  friend UniRational operator*(const UniRational& a, const UniRational& b);
  friend UniRational operator/(const UniRational& a, const UniRational& b);
  UniRational operator-() const { return UniRational(-num_, den_, true); }
  friend bool operator==(const UniRational& a, const UniRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  UniRational derivative() const;
  /// ord(num) - ord(den) at z0; precondition: nonzero.
  int orderAt(const GaussianRational& z0) const { return num_.orderAt(z0) - den_.orderAt(z0); }
  std::complex<double> evaluate(std::complex<double> z) const { return num_.evaluate(z) / den_.evaluate(z); }
  std::string toString() const;

 private:
  UniRational(UniPolynomial num, UniPolynomial den, bool) : num_(std::move(num)), den_(std::move(den)) {}

  UniPolynomial num_;
  UniPolynomial den_;
};

/// P(values[0], ..., values[n-1]) for a multivariate P.
UniPolynomial substitute(const Polynomial& p, std::span<const UniPolynomial> values);

}  // namespace tgc
