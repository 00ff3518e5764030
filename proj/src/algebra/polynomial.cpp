#include "tgc/algebra/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tgc/error.hpp"

namespace tgc {

int totalDegree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = totalDegree(a);
  int db = totalDegree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

void requireSameRing(const Polynomial& a, const Polynomial& b) {
  if (a.numVars() != b.numVars()) {
    throw std::invalid_argument("polynomial operands live in rings with " + std::to_string(a.numVars()) +
                                " and " + std::to_string(b.numVars()) + " variables");
  }
}

Exponent addExponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

Polynomial Polynomial::constant(int numVars, const GaussianRational& c) {
  Polynomial p(numVars);
  p.addTerm(Exponent(numVars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int numVars, int index) {
  if (index < 0 || index >= numVars) throw std::out_of_range("Polynomial::variable: index out of range");
  Exponent e(numVars, 0);
  e[index] = 1;
  return monomial(std::move(e), GaussianRational(1));
}

Polynomial Polynomial::monomial(Exponent e, const GaussianRational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.addTerm(e, c);
  return p;
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && tgc::totalDegree(terms_.begin()->first) == 0);
}

int Polynomial::totalDegree() const {
  if (terms_.empty()) return -1;
  return tgc::totalDegree(terms_.rbegin()->first);
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  int d = tgc::totalDegree(terms_.begin()->first);
  return tgc::totalDegree(terms_.rbegin()->first) == d;
}

GaussianRational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void Polynomial::addTerm(const Exponent& e, const GaussianRational& c) {
  if (static_cast<int>(e.size()) != numVars_) throw std::invalid_argument("exponent length mismatch");
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  requireSameRing(*this, o);
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  requireSameRing(*this, o);
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  Polynomial r(a.numVars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.addTerm(addExponents(ea, eb), ca * cb);
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
  Polynomial result = constant(numVars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int index) const {
  if (index < 0 || index >= numVars_) throw std::out_of_range("Polynomial::derivative: index out of range");
  Polynomial r(numVars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent f = e;
    --f[index];
    r.addTerm(f, c * GaussianRational(e[index]));
  }
  return r;
}

std::optional<Polynomial> Polynomial::divideExact(const Polynomial& b) const {
  requireSameRing(*this, b);
  if (b.isZero()) throw std::domain_error("Polynomial::divideExact: division by zero");
  Polynomial q(numVars_);
  if (isZero()) return q;
  if (totalDegree() < b.totalDegree()) return std::nullopt;
  const auto& [lb, cb] = b.leadingTerm();
  Polynomial r = *this;
  while (!r.isZero()) {
    const auto& [lr, cr] = r.leadingTerm();
    Exponent e(numVars_);
    for (int i = 0; i < numVars_; ++i) {
      e[i] = lr[i] - lb[i];
      if (e[i] < 0) return std::nullopt;
    }
    GaussianRational c = cr / cb;
    q.addTerm(e, c);
    for (const auto& [eb, cbt] : b.terms_) r.addTerm(addExponents(e, eb), -(c * cbt));
  }
  return q;
}

Exponent Polynomial::monomialContent() const {
  Exponent m(numVars_, 0);
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < numVars_; ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

Polynomial Polynomial::divideByMonomial(const Exponent& m) const {
  Polynomial r(numVars_);
  for (const auto& [e, c] : terms_) {
    Exponent f(numVars_);
    for (int i = 0; i < numVars_; ++i) {
      f[i] = e[i] - m[i];
      if (f[i] < 0) throw std::invalid_argument("divideByMonomial: monomial does not divide");
    }
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Polynomial Polynomial::eliminateVariable(int index, const GaussianRational& value) const {
  if (index < 0 || index >= numVars_) throw std::out_of_range("eliminateVariable: index out of range");
  Polynomial r(numVars_ - 1);
  for (const auto& [e, c] : terms_) {
    GaussianRational v = c;
    for (int p = 0; p < e[index]; ++p) v *= value;
    Exponent f;
    f.reserve(numVars_ - 1);
    for (int i = 0; i < numVars_; ++i) {
      if (i != index) f.push_back(e[i]);
    }
    r.addTerm(f, v);
  }
  return r;
}

Polynomial Polynomial::homogenize(int index) const {
  if (index < 0 || index > numVars_) throw std::out_of_range("homogenize: index out of range");
  int deg = std::max(totalDegree(), 0);
  Polynomial r(numVars_ + 1);
  for (const auto& [e, c] : terms_) {
    Exponent f(e.begin(), e.end());
    f.insert(f.begin() + index, deg - tgc::totalDegree(e));
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
  if (static_cast<int>(point.size()) != numVars_) throw std::invalid_argument("evaluate: point dimension mismatch");
  int maxDeg = std::max(totalDegree(), 0);
  // powers[i][p] = point[i]^p
  std::vector<std::vector<std::complex<double>>> powers(numVars_, std::vector<std::complex<double>>(maxDeg + 1));
  for (int i = 0; i < numVars_; ++i) {
    powers[i][0] = 1.0;
    for (int p = 1; p <= maxDeg; ++p) powers[i][p] = powers[i][p - 1] * point[i];
  }
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.toComplex();
    for (int i = 0; i < numVars_; ++i) t *= powers[i][e[i]];
    sum += t;
  }
  return sum;
}

GaussianRational Polynomial::evaluateExact(std::span<const GaussianRational> point) const {
  if (static_cast<int>(point.size()) != numVars_) throw std::invalid_argument("evaluate: point dimension mismatch");
  GaussianRational sum;
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (int i = 0; i < numVars_; ++i) {
      for (int p = 0; p < e[i]; ++p) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (int i = 0; i < numVars_; ++i) {
      int a = it->first[i];
      if (a == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "X" + std::to_string(i);
      if (a > 1) mono += "^" + std::to_string(a);
    }
    appendTerm(out, it->second, mono);
  }
  return out;
}

HomogeneousPolynomial::HomogeneousPolynomial(Polynomial p, std::optional<int> expectedDegree) : p_(std::move(p)) {
  if (!p_.isHomogeneous()) {
    throw Error(ErrorKind::DegreeMismatch, "polynomial " + p_.toString() + " is not homogeneous");
  }
  if (p_.isZero()) {
    degree_ = expectedDegree.value_or(0);
    return;
  }
  degree_ = p_.totalDegree();
  if (expectedDegree && *expectedDegree != degree_) {
    throw Error(ErrorKind::DegreeMismatch, "expected degree " + std::to_string(*expectedDegree) + ", got " +
                                               std::to_string(degree_) + " for " + p_.toString());
  }
}

HomogeneousPolynomial HomogeneousPolynomial::zero(int numVars, int degree) {
  return HomogeneousPolynomial(Polynomial(numVars), degree, true);
}

namespace {

int sumDegree(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
  if (a.isZero()) return b.degree();
  if (b.isZero()) return a.degree();
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "cannot add homogeneous polynomials of degrees " +
                                               std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  }
  return a.degree();
}

}  // namespace

HomogeneousPolynomial operator+(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
  int d = sumDegree(a, b);
  return HomogeneousPolynomial(a.p_ + b.p_, d, true);
}

HomogeneousPolynomial operator-(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
  int d = sumDegree(a, b);
  return HomogeneousPolynomial(a.p_ - b.p_, d, true);
}

HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
  return HomogeneousPolynomial(a.p_ * b.p_, a.degree_ + b.degree_, true);
}

HomogeneousPolynomial operator*(const GaussianRational& c, const HomogeneousPolynomial& a) {
  return HomogeneousPolynomial(a.p_ * c, a.degree_, true);
}

HomogeneousPolynomial partialDerivative(const HomogeneousPolynomial& p, int index) {
  if (index < 0 || index >= p.numVars()) throw std::out_of_range("partialDerivative: variable index out of range");
  return HomogeneousPolynomial(p.poly().derivative(index), p.degree() - 1);
}

}  // namespace tgc
