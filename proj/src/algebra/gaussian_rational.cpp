#include "tgc/algebra/gaussian_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace tgc {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (isReal() && o.isReal()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.isZero()) throw std::domain_error("GaussianRational: division by zero");
  if (o.isReal()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::toString() const {
  if (isReal()) return re_.get_str();
  mpq_class absIm = abs(im_);
  std::string imPart = (absIm == 1 ? std::string() : absIm.get_str() + "*") + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imPart;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imPart;
}

mpq_class exactRational(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("exactRational: non-finite value");
  mpq_class q(value);
  q.canonicalize();
  return q;
}

}  // namespace tgc

namespace tgc {

void appendTerm(std::string& out, const GaussianRational& c, const std::string& monomial) {
  bool negative = false;
  std::string body;
  const mpq_class& re = c.real();
  const mpq_class& im = c.imag();
  if (c.isReal()) {
    negative = sgn(re) < 0;
    mpq_class a = abs(re);
    body = (a == 1 && !monomial.empty()) ? std::string() : a.get_str();
  } else if (sgn(re) == 0) {
    negative = sgn(im) < 0;
    mpq_class a = abs(im);
    body = (a == 1 ? std::string() : a.get_str() + "*") + "i";
  } else {
    body = "(" + c.toString() + ")";
  }
  if (!monomial.empty()) body = body.empty() ? monomial : body + "*" + monomial;
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace tgc
