#include "tgc/algebra/univariate.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tgc {

UniPolynomial::UniPolynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPolynomial::UniPolynomial(const GaussianRational& c) {
  if (!c.isZero()) c_.push_back(c);
}

void UniPolynomial::trim() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

GaussianRational UniPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return {};
  return c_[i];
}

UniPolynomial& UniPolynomial::operator+=(const UniPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPolynomial& UniPolynomial::operator-=(const UniPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].isZero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPolynomial(std::move(r));
}

UniPolynomial UniPolynomial::operator-() const {
  UniPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPolynomial UniPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("UniPolynomial::pow: negative exponent");
  UniPolynomial result(1);
  UniPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

UniPolynomial UniPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * GaussianRational(static_cast<long>(i));
  return UniPolynomial(std::move(r));
}

UniPolynomial UniPolynomial::monic() const {
  if (isZero() || leading().isOne()) return *this;
  GaussianRational inv = GaussianRational(1) / leading();
  UniPolynomial r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

std::pair<UniPolynomial, UniPolynomial> UniPolynomial::divmod(const UniPolynomial& b) const {
  if (b.isZero()) throw std::domain_error("UniPolynomial::divmod: division by zero");
  if (degree() < b.degree()) return {UniPolynomial(), *this};
  std::vector<GaussianRational> rem = c_;
  std::vector<GaussianRational> q(c_.size() - b.c_.size() + 1);
  GaussianRational inv = GaussianRational(1) / b.leading();
  int db = b.degree();
  for (int i = degree(); i >= db; --i) {
    if (rem[i].isZero()) continue;
    GaussianRational f = rem[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  rem.resize(db);
  return {UniPolynomial(std::move(q)), UniPolynomial(std::move(rem))};
}

bool UniPolynomial::divides(const UniPolynomial& a) const { return a.divmod(*this).second.isZero(); }

std::complex<double> UniPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->toComplex();
  return acc;
}

GaussianRational UniPolynomial::evaluate(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

int UniPolynomial::orderAt(const GaussianRational& z0) const {
  if (isZero()) throw std::invalid_argument("orderAt: zero polynomial has infinite order");
  int order = 0;
  UniPolynomial p = *this;
  UniPolynomial lin = linear(z0);
  while (true) {
    auto [q, r] = p.divmod(lin);
    if (!r.isZero()) return order;
    p = std::move(q);
    ++order;
  }
}

int UniPolynomial::orderAtNumeric(std::complex<double> z0, double tol) const {
  if (isZero()) throw std::invalid_argument("orderAtNumeric: zero polynomial has infinite order");
  // Taylor coefficients at z0 via repeated synthetic division (deflation).
  // The same recurrence on |c_i| at |z0| bounds the size of each sum, which is
  // the scale rounding errors are measured against.
  std::vector<std::complex<double>> a(c_.size());
  std::vector<double> bound(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    a[i] = c_[i].toComplex();
    bound[i] = std::abs(a[i]);
  }
  double rho = std::abs(z0);
  int n = degree();
  for (int m = 0; m <= n; ++m) {
    for (int i = n - 1; i >= m; --i) {
      a[i] += z0 * a[i + 1];
      bound[i] += rho * bound[i + 1];
    }
    if (std::abs(a[m]) > tol * bound[m]) return m;
  }
  return n;
}

std::vector<std::complex<double>> UniPolynomial::roots() const {
  int n = degree();
  if (n <= 0) return {};
  std::vector<std::complex<double>> a(c_.size());
  std::complex<double> lead = leading().toComplex();
  for (std::size_t i = 0; i < c_.size(); ++i) a[i] = c_[i].toComplex() / lead;
  std::vector<std::complex<double>> out;
  if (n == 1) {
    out.push_back(-a[0]);
    return out;
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -a[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("roots: eigenvalue iteration failed");
  auto horner = [&](std::complex<double> z) {
    std::complex<double> p = 0.0;
    std::complex<double> dp = 0.0;
    for (int i = n; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + a[i];
    }
    return std::pair{p, dp};
  };
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    for (int it = 0; it < 4; ++it) {
      auto [p, dp] = horner(z);
      if (std::abs(dp) == 0.0) break;
      std::complex<double> step = p / dp;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    out.push_back(z);
  }
  return out;
}

std::string UniPolynomial::toString() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].isZero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    appendTerm(out, c_[i], mono);
  }
  return out;
}

UniPolynomial gcd(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.isZero() && b.isZero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  UniPolynomial x = a;
  UniPolynomial y = b;
  while (!y.isZero()) {
    UniPolynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<SquareFreeFactor> squareFree(const UniPolynomial& p) {
  if (p.isZero()) throw std::invalid_argument("squareFree: zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  UniPolynomial f = p.monic();
  UniPolynomial fp = f.derivative();
  UniPolynomial a = gcd(f, fp);
  UniPolynomial b = f.divmod(a).first;
  UniPolynomial c = fp.divmod(a).first;
  UniPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

UniPolynomial squareFreePart(const UniPolynomial& p) {
  if (p.degree() <= 0) return UniPolynomial(1);
  UniPolynomial f = p.monic();
  return f.divmod(gcd(f, f.derivative())).first;
}

UniRational::UniRational(UniPolynomial num) : num_(std::move(num)), den_(1) {}

UniRational::UniRational(UniPolynomial num, UniPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw std::domain_error("UniRational with zero denominator");
  if (num_.isZero()) {
    den_ = UniPolynomial(1);
    return;
  }
  UniPolynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  if (!den_.leading().isOne()) {
    GaussianRational inv = GaussianRational(1) / den_.leading();
    num_ = num_ * UniPolynomial(inv);
    den_ = den_.monic();
  }
}

UniRational operator+(const UniRational& a, const UniRational& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

UniRational operator-(const UniRational& a, const UniRational& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

UniRational operator*(const UniRational& a, const UniRational& b) {
  if (a.isZero() || b.isZero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

UniRational operator/(const UniRational& a, const UniRational& b) {
  if (b.isZero()) throw std::domain_error("UniRational: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

UniRational UniRational::derivative() const {
  if (den_.isConstant()) return UniRational(num_.derivative(), den_, true);
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

std::string UniRational::toString() const {
  if (den_.isConstant()) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

UniPolynomial substitute(const Polynomial& p, std::span<const UniPolynomial> values) {
  if (static_cast<int>(values.size()) != p.numVars()) throw std::invalid_argument("substitute: arity mismatch");
  int n = p.numVars();
  int maxDeg = std::max(p.totalDegree(), 0);
  std::vector<std::vector<UniPolynomial>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].reserve(maxDeg + 1);
    powers[i].emplace_back(1);
    for (int e = 1; e <= maxDeg; ++e) powers[i].push_back(powers[i].back() * values[i]);
  }
  UniPolynomial out;
  for (const auto& [e, c] : p.terms()) {
    UniPolynomial t(c);
    for (int i = 0; i < n; ++i) {
      if (e[i] > 0) t = t * powers[i][e[i]];
    }
    out += t;
  }
  return out;
}

}  // namespace tgc
