#include "tgc/algebra/rational_function.hpp"

#include <stdexcept>

#include "tgc/error.hpp"

namespace tgc {

void normalizeFraction(Polynomial& num, Polynomial& den) {
  if (den.isZero()) throw std::domain_error("rational function with zero denominator");
  int n = num.numVars();
  if (num.isZero()) {
    den = Polynomial::constant(n, 1);
    return;
  }
  Exponent a = num.monomialContent();
  Exponent b = den.monomialContent();
  Exponent m(n);
  bool any = false;
  for (int i = 0; i < n; ++i) {
    m[i] = std::min(a[i], b[i]);
    any = any || m[i] > 0;
  }
  if (any) {
    num = num.divideByMonomial(m);
    den = den.divideByMonomial(m);
  }
  if (!den.isConstant()) {
    if (auto q = num.divideExact(den)) {
      num = std::move(*q);
      den = Polynomial::constant(n, 1);
    }
  }
  GaussianRational lead = den.leadingTerm().second;
  if (!lead.isOne()) {
    GaussianRational inv = GaussianRational(1) / lead;
    num *= inv;
    den *= inv;
  }
}

RationalFunction::RationalFunction(int numVars) : num_(numVars), den_(Polynomial::constant(numVars, 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.numVars() != den_.numVars()) throw std::invalid_argument("RationalFunction: ring mismatch");
  normalize();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.numVars(), 1)) {}

void RationalFunction::normalize() { normalizeFraction(num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.isZero()) throw std::domain_error("RationalFunction: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::complex<double> RationalFunction::evaluate(std::span<const std::complex<double>> point) const {
  return num_.evaluate(point) / den_.evaluate(point);
}

std::string RationalFunction::toString() const {
  if (den_.isConstant()) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

HomRationalFunction::HomRationalFunction(HomogeneousPolynomial num, HomogeneousPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.numVars() != den_.numVars()) throw std::invalid_argument("HomRationalFunction: ring mismatch");
  normalize();
}

HomRationalFunction::HomRationalFunction(HomogeneousPolynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.numVars(), 1)) {}

HomRationalFunction HomRationalFunction::zero(int numVars, int homDegree) {
  return HomRationalFunction(HomogeneousPolynomial::zero(numVars, homDegree));
}

void HomRationalFunction::normalize() {
  if (den_.isZero()) throw std::domain_error("HomRationalFunction with zero denominator");
  int h = homDegree();
  Polynomial n = num_.poly();
  Polynomial d = den_.poly();
  normalizeFraction(n, d);
  HomogeneousPolynomial hd(std::move(d));
  num_ = HomogeneousPolynomial(std::move(n), h + hd.degree());
  den_ = std::move(hd);
}

namespace {

void requireSameDegree(const HomRationalFunction& a, const HomRationalFunction& b) {
  if (!a.isZero() && !b.isZero() && a.homDegree() != b.homDegree()) {
    throw Error(ErrorKind::DegreeMismatch, "cannot add rational functions of degrees " +
                                               std::to_string(a.homDegree()) + " and " +
                                               std::to_string(b.homDegree()));
  }
}

}  // namespace

HomRationalFunction operator+(const HomRationalFunction& a, const HomRationalFunction& b) {
  requireSameDegree(a, b);
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

HomRationalFunction operator-(const HomRationalFunction& a, const HomRationalFunction& b) {
  requireSameDegree(a, b);
  if (b.isZero()) return a;
  if (a.isZero()) return {GaussianRational(-1) * b.num_, b.den_};
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

HomRationalFunction operator*(const HomRationalFunction& a, const HomRationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

HomRationalFunction operator/(const HomRationalFunction& a, const HomRationalFunction& b) {
  if (b.isZero()) throw std::domain_error("HomRationalFunction: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const HomRationalFunction& a, const HomRationalFunction& b) {
  if (a.isZero() || b.isZero()) return a.isZero() && b.isZero();
  return a.num_.poly() * b.den_.poly() == b.num_.poly() * a.den_.poly();
}

std::complex<double> HomRationalFunction::evaluate(std::span<const std::complex<double>> point) const {
  return num_.evaluate(point) / den_.evaluate(point);
}

std::string HomRationalFunction::toString() const {
  if (den_.poly().isConstant()) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

}  // namespace tgc
