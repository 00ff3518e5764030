#include "tgc/connection.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "tgc/error.hpp"

namespace tgc {

LinearSystemBasis::LinearSystemBasis(std::vector<HomogeneousPolynomial> s) : s_(std::move(s)) {
  int n = static_cast<int>(s_.size());
  if (n < 2) throw Error(ErrorKind::DegreeMismatch, "a basis needs k+1 >= 2 polynomials");
  int d = s_.front().degree();
  if (d < 1) throw Error(ErrorKind::DegreeMismatch, "basis degree must be at least 1");
  for (int mu = 0; mu < n; ++mu) {
    const auto& p = s_[mu];
    if (p.numVars() != n) {
      throw Error(ErrorKind::DegreeMismatch, "S_" + std::to_string(mu) + " lives in " +
                                                 std::to_string(p.numVars()) + " variables, expected " +
                                                 std::to_string(n));
    }
    if (p.isZero() || p.degree() != d) {
      throw Error(ErrorKind::DegreeMismatch,
                  "S_" + std::to_string(mu) + " must be nonzero of degree " + std::to_string(d));
    }
  }
  Polynomial det = determinant(jacobianMatrix(*this));
  if (det.isZero()) {
    throw Error(ErrorKind::SingularSystem, "det(dS_mu/dX_lambda) vanishes identically");
  }
  delta_ = HomogeneousPolynomial(std::move(det), n * (d - 1));
}

LinearSystemBasis LinearSystemBasis::fermat(int k, int d) {
  std::vector<HomogeneousPolynomial> s;
  for (int mu = 0; mu <= k; ++mu) s.emplace_back(Polynomial::variable(k + 1, mu).pow(d));
  return LinearSystemBasis(std::move(s));
}

HomogeneousPolynomial LinearSystemBasis::combination(const std::vector<GaussianRational>& coeffs) const {
  if (coeffs.size() != s_.size()) throw std::invalid_argument("combination: expected k+1 coefficients");
  HomogeneousPolynomial out = HomogeneousPolynomial::zero(numVars(), d());
  for (std::size_t mu = 0; mu < s_.size(); ++mu) out = out + coeffs[mu] * s_[mu];
  return out;
}

std::optional<std::vector<GaussianRational>> LinearSystemBasis::spanCoefficients(
    const HomogeneousPolynomial& sigma) const {
  if (sigma.numVars() != numVars()) return std::nullopt;
  if (sigma.isZero()) return std::vector<GaussianRational>(s_.size());
  if (sigma.degree() != d()) return std::nullopt;
  // One equation per monomial appearing in any S_mu or sigma.
  std::vector<Exponent> monomials;
  auto collect = [&](const Polynomial& p) {
    for (const auto& [e, c] : p.terms()) {
      bool seen = false;
      for (const auto& m : monomials) seen = seen || m == e;
      if (!seen) monomials.push_back(e);
    }
  };
  for (const auto& p : s_) collect(p.poly());
  collect(sigma.poly());
  int rows = static_cast<int>(monomials.size());
  Matrix<GaussianRational> a(rows, numVars(), GaussianRational());
  std::vector<GaussianRational> b(rows);
  for (int r = 0; r < rows; ++r) {
    for (int mu = 0; mu < numVars(); ++mu) a(r, mu) = s_[mu].poly().coefficient(monomials[r]);
    b[r] = sigma.poly().coefficient(monomials[r]);
  }
  return solveLinear(std::move(a), std::move(b));
}

Matrix<Polynomial> jacobianMatrix(const LinearSystemBasis& basis) {
  int n = basis.numVars();
  Matrix<Polynomial> j(n, n, Polynomial(n));
  for (int mu = 0; mu < n; ++mu) {
    for (int lambda = 0; lambda < n; ++lambda) j(mu, lambda) = basis.members()[mu].poly().derivative(lambda);
  }
  return j;
}

ChristoffelTensor::ChristoffelTensor(int k, int d, std::vector<HomRationalFunction> entries,
                                     HomogeneousPolynomial delta)
    : k_(k), d_(d), gamma_(std::move(entries)), delta_(std::move(delta)) {
  std::size_t n = static_cast<std::size_t>(k + 1);
  if (gamma_.size() != n * n * n) throw std::invalid_argument("ChristoffelTensor: expected (k+1)^3 entries");
  if (delta_.isZero()) throw Error(ErrorKind::SingularSystem, "ChristoffelTensor: zero common denominator");
}

Polynomial ChristoffelTensor::numeratorOverDelta(int lambda, int i, int j) const {
  const HomRationalFunction& g = (*this)(lambda, i, j);
  if (g.isZero()) return Polynomial(numVars());
  auto q = delta_.poly().divideExact(g.den().poly());
  if (!q) throw std::logic_error("Christoffel denominator does not divide delta");
  return g.num().poly() * *q;
}

bool ChristoffelTensor::isFlat() const {
  for (const auto& g : gamma_) {
    if (!g.isZero()) return false;
  }
  return true;
}

ChristoffelTensor solveChristoffel(const LinearSystemBasis& basis) {
  int n = basis.numVars();
  Matrix<Polynomial> jac = jacobianMatrix(basis);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
  }
  Matrix<Polynomial> rhs(n, static_cast<int>(pairs.size()), Polynomial(n));
  for (int mu = 0; mu < n; ++mu) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      rhs(mu, static_cast<int>(p)) = jac(mu, pairs[p].first).derivative(pairs[p].second);
    }
  }
  FractionFreeSolution sol = fractionFreeSolve(jac, rhs);
  if (sol.det.isZero()) throw Error(ErrorKind::SingularSystem, "det(dS_mu/dX_lambda) vanishes identically");
  int degDelta = n * (basis.d() - 1);
  HomogeneousPolynomial delta(sol.det, degDelta);
  std::vector<HomRationalFunction> entries(static_cast<std::size_t>(n) * n * n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    for (int lambda = 0; lambda < n; ++lambda) {
      HomRationalFunction g(HomogeneousPolynomial(sol.numerators(lambda, static_cast<int>(p)), degDelta - 1), delta);
      entries[(lambda * n + i) * n + j] = g;
      entries[(lambda * n + j) * n + i] = g;
    }
  }
  return ChristoffelTensor(n - 1, basis.d(), std::move(entries), std::move(delta));
}

GeodesicReport verifyGeodesicIdentity(const ChristoffelTensor& tensor, const HomogeneousPolynomial& sigma) {
  int n = tensor.numVars();
  if (sigma.numVars() != n) {
    throw Error(ErrorKind::DegreeMismatch, "sigma lives in " + std::to_string(sigma.numVars()) +
                                               " variables, the connection in " + std::to_string(n));
  }
  if (sigma.degree() != tensor.d()) {
    throw Error(ErrorKind::DegreeMismatch, "sigma has degree " + std::to_string(sigma.degree()) +
                                               ", the linear system has degree " + std::to_string(tensor.d()));
  }
  const Polynomial& delta = tensor.delta().poly();
  std::vector<Polynomial> grad;
  for (int l = 0; l < n; ++l) grad.push_back(sigma.poly().derivative(l));
  GeodesicReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Polynomial r = -(grad[i].derivative(j) * delta);
      for (int l = 0; l < n; ++l) {
        if (!grad[l].isZero()) r += grad[l] * tensor.numeratorOverDelta(l, i, j);
      }
      if (!r.isZero()) {
        report.holds = false;
        report.nonzero.push_back({i, j, HomRationalFunction(HomogeneousPolynomial(std::move(r)), tensor.delta())});
      }
    }
  }
  return report;
}

bool checkHomogeneityDegree(const ChristoffelTensor& tensor) {
  int n = tensor.numVars();
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto& g = tensor(l, i, j);
        if (!g.isZero() && g.homDegree() != -1) return false;
      }
    }
  }
  return true;
}

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Relative distance of w from span{v, x}.
double spanResidual(const Vec& w, const Vec& v, const Vec& x) {
  double scale = w.norm() + v.norm();
  if (scale == 0.0) return 0.0;
  Mat basis(w.size(), 2);
  basis.col(0) = v;
  basis.col(1) = x;
  Vec coeffs = basis.colPivHouseholderQr().solve(w);
  return (w - basis * coeffs).norm() / scale;
}

// Distance of the operator a from {alpha * Id + x (x) gamma}: modulo the line
// spanned by x it must act as a scalar.
double operatorResidual(const Mat& a, const Vec& x) {
  int n = static_cast<int>(x.size());
  Mat p = Mat::Identity(n, n) - x * x.adjoint() / x.squaredNorm();
  Mat pa = p * a;
  std::complex<double> alpha = pa.trace() / static_cast<double>(n - 1);
  return (pa - alpha * p).norm() / std::max(1.0, a.norm());
}

}  // namespace

EulerReport checkEulerProperty(const ChristoffelTensor& tensor, const EulerCheckOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("checkEulerProperty: samples must be positive");
  int n = tensor.numVars();
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto diskPoint = [&] {
    double r = std::sqrt(unit(rng));
    double t = 2.0 * M_PI * unit(rng);
    return std::polar(r, t);
  };
  EulerReport report;
  int attempts = 0;
  const int maxAttempts = 100 * options.samples;
  while (report.samplesUsed < options.samples && attempts < maxAttempts) {
    ++attempts;
    std::vector<std::complex<double>> point(n);
    for (auto& c : point) c = diskPoint();
    if (std::abs(tensor.delta().evaluate(point)) < options.polarCutoff) {
      ++report.rejectedNearPolar;
      continue;
    }
    Vec x(n);
    Vec v(n);
    for (int i = 0; i < n; ++i) {
      x(i) = point[i];
      v(i) = diskPoint();
    }
    // left(l, j) = Gamma^l_{ij} x^i, right(l, i) = Gamma^l_{ij} x^j.
    Mat left = Mat::Zero(n, n);
    Mat right = Mat::Zero(n, n);
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto& g = tensor(l, i, j);
          if (g.isZero()) continue;
          std::complex<double> val = g.evaluate(point);
          left(l, j) += val * x(i);
          right(l, i) += val * x(j);
        }
      }
    }
    double worst = std::max({spanResidual(left * v, v, x), spanResidual(right * v, v, x),
                             operatorResidual(left, x), operatorResidual(right, x)});
    report.worstResidual = std::max(report.worstResidual, worst);
    ++report.samplesUsed;
  }
  if (report.samplesUsed == 0) {
    throw Error(ErrorKind::SamplingFailure, "every sampled point fell within the polar cutoff of delta = 0");
  }
  report.holds = report.worstResidual <= options.tolerance;
  return report;
}

PolarLocus polarDegree(const ChristoffelTensor& tensor) {
  int degree = tensor.delta().poly().totalDegree();
  int bound = tensor.numVars() * (tensor.d() - 1);
  if (degree > bound) {
    throw std::logic_error("polar degree " + std::to_string(degree) + " exceeds (k+1)(d-1) = " +
                           std::to_string(bound));
  }
  return {tensor.delta(), degree};
}

ChartConnection::ChartConnection(int k, int chart, std::vector<RationalFunction> entries)
    : k_(k), chart_(chart), gamma_(std::move(entries)) {
  if (chart < 0 || chart > k) throw std::out_of_range("chart index out of range");
  if (gamma_.size() != static_cast<std::size_t>(k) * k * k) {
    throw std::invalid_argument("ChartConnection: expected k^3 entries");
  }
}

bool ChartConnection::isFlat() const {
  for (const auto& g : gamma_) {
    if (!g.isZero()) return false;
  }
  return true;
}

ChartConnection chartRestrict(const ChristoffelTensor& tensor, int chart, ChartDescent descent) {
  int k = tensor.k();
  if (chart < 0 || chart > k) {
    throw std::out_of_range("chart index " + std::to_string(chart) + " out of range 0.." + std::to_string(k));
  }
  auto hom = [chart](int a) { return a < chart ? a : a + 1; };
  const GaussianRational one(1);
  Polynomial den = tensor.delta().poly().eliminateVariable(chart, one);
  std::vector<RationalFunction> entries;
  entries.reserve(static_cast<std::size_t>(k) * k * k);
  for (int l = 0; l < k; ++l) {
    for (int i = 0; i < k; ++i) {
      for (int m = 0; m < k; ++m) {
        Polynomial num = tensor.numeratorOverDelta(hom(l), hom(i), hom(m)).eliminateVariable(chart, one);
        if (descent == ChartDescent::EulerProjection) {
          Polynomial radial = tensor.numeratorOverDelta(chart, hom(i), hom(m)).eliminateVariable(chart, one);
          if (!radial.isZero()) num -= Polynomial::variable(k, l) * radial;
        }
        entries.emplace_back(std::move(num), den);
      }
    }
  }
  return ChartConnection(k, chart, std::move(entries));
}

bool isTotallyGeodesicInChart(const ChartConnection& conn, const HomogeneousPolynomial& sigma) {
  int k = conn.k();
  if (sigma.numVars() != k + 1) throw Error(ErrorKind::DegreeMismatch, "sigma ring does not match the chart");
  Polynomial s = sigma.poly().eliminateVariable(conn.chart(), GaussianRational(1));
  if (s.isZero()) return true;
  std::vector<RationalFunction> grad;
  for (int l = 0; l < k; ++l) grad.emplace_back(s.derivative(l));
  for (int i = 0; i < k; ++i) {
    for (int m = 0; m < k; ++m) {
      RationalFunction r(s.derivative(i).derivative(m));
      for (int l = 0; l < k; ++l) {
        if (!grad[l].isZero() && !conn(l, i, m).isZero()) r = r - grad[l] * conn(l, i, m);
      }
      if (r.isZero() || s.isConstant()) continue;
      if (!r.num().divideExact(s)) return false;
    }
  }
  return true;
}

}  // namespace tgc
