#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace tgc {

/// Exact complex number a + b*i with a, b rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value), im_(0) {}  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational imaginaryUnit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool isReal() const { return sgn(im_) == 0; }
  bool isOne() const { return isReal() && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> toComplex() const { return {re_.get_d(), im_.get_d()}; }

  /// "p/q", "p/q*i" or "p/q+r/s*i".
  std::string toString() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Appends "c*monomial" to a sum being printed, handling the joining sign,
/// unit coefficients and parenthesized complex coefficients. An empty
/// monomial prints the bare coefficient.
void appendTerm(std::string& out, const GaussianRational& c, const std::string& monomial);

/// Exact rational from a double (binary value, no rounding).
mpq_class exactRational(double value);

}  // namespace tgc
