#include "tgc/curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "tgc/error.hpp"

namespace tgc {

ProjectiveCurve::ProjectiveCurve(std::vector<UniPolynomial> components) : f_(std::move(components)) {
  if (f_.size() < 2) throw std::invalid_argument("a curve into P^k needs at least two components");
  if (std::all_of(f_.begin(), f_.end(), [](const UniPolynomial& p) { return p.isZero(); })) {
    throw Error(ErrorKind::ZeroCurve, "all curve components vanish identically");
  }
  UniPolynomial g;
  for (const auto& p : f_) {
    if (!p.isZero()) g = g.isZero() ? p.monic() : gcd(g, p);
  }
  reduced_ = g.degree() == 0;
}

int ProjectiveCurve::degree() const {
  int d = 0;
  for (const auto& p : f_) d = std::max(d, p.degree());
  return d;
}

std::vector<std::complex<double>> ProjectiveCurve::evaluate(std::complex<double> z) const {
  std::vector<std::complex<double>> out;
  out.reserve(f_.size());
  for (const auto& p : f_) out.push_back(p.evaluate(z));
  return out;
}

std::vector<GaussianRational> ProjectiveCurve::evaluate(const GaussianRational& z) const {
  std::vector<GaussianRational> out;
  out.reserve(f_.size());
  for (const auto& p : f_) out.push_back(p.evaluate(z));
  return out;
}

ProjectiveCurve reduce(const ProjectiveCurve& curve) {
  UniPolynomial g;
  for (const auto& p : curve.components()) {
    if (!p.isZero()) g = g.isZero() ? p.monic() : gcd(g, p);
  }
  std::vector<UniPolynomial> out;
  for (const auto& p : curve.components()) out.push_back(p.divmod(g).first);
  return ProjectiveCurve(std::move(out));
}

UniPolynomial pullback(const ProjectiveCurve& curve, const HomogeneousPolynomial& sigma) {
  if (sigma.numVars() != curve.numComponents()) {
    throw Error(ErrorKind::DegreeMismatch, "sigma has " + std::to_string(sigma.numVars()) +
                                               " variables, the curve " + std::to_string(curve.numComponents()) +
                                               " components");
  }
  return substitute(sigma.poly(), curve.components());
}

std::vector<UniRational> affineCoordinates(const ProjectiveCurve& curve, int chart) {
  if (chart < 0 || chart > curve.k()) throw std::out_of_range("chart index out of range");
  const UniPolynomial& fj = curve[chart];
  if (fj.isZero()) {
    throw Error(ErrorKind::ChartDegenerate, "f_" + std::to_string(chart) + " vanishes identically");
  }
  std::vector<UniRational> out;
  for (int i = 0; i <= curve.k(); ++i) {
    if (i != chart) out.emplace_back(curve[i], fj);
  }
  return out;
}

int defaultChart(const ProjectiveCurve& curve) {
  for (int j = 0; j <= curve.k(); ++j) {
    if (!curve[j].isZero()) return j;
  }
  throw Error(ErrorKind::ZeroCurve, "all curve components vanish identically");
}

UniRational composeWithCurve(const RationalFunction& entry, const ProjectiveCurve& curve, int chart) {
  if (entry.numVars() != curve.k()) throw std::invalid_argument("composeWithCurve: arity mismatch");
  if (entry.isZero()) return {};
  const UniPolynomial& fj = curve[chart];
  if (fj.isZero()) {
    throw Error(ErrorKind::ChartDegenerate, "f_" + std::to_string(chart) + " vanishes identically");
  }
  // P(f_i / f_j) = P^h(f) / f_j^{deg P}.
  int a = entry.num().totalDegree();
  int b = entry.den().totalDegree();
  UniPolynomial num = substitute(entry.num().homogenize(chart), curve.components());
  UniPolynomial den = substitute(entry.den().homogenize(chart), curve.components());
  if (den.isZero()) {
    throw Error(ErrorKind::PolarLocusCurve,
                "denominator " + entry.den().toString() + " vanishes identically along the curve");
  }
  if (b > a) num = num * fj.pow(b - a);
  if (a > b) den = den * fj.pow(a - b);
  return {std::move(num), std::move(den)};
}

namespace {

// Gamma'^l_{im} composed with the curve, row-major in (l, i, m).
std::vector<UniRational> composedSymbols(const ProjectiveCurve& curve, const ChartConnection& conn) {
  int k = conn.k();
  std::vector<UniRational> out(static_cast<std::size_t>(k) * k * k);
  for (int l = 0; l < k; ++l) {
    for (int i = 0; i < k; ++i) {
      for (int m = 0; m < k; ++m) out[(l * k + i) * k + m] = composeWithCurve(conn(l, i, m), curve, conn.chart());
    }
  }
  return out;
}

FrameVector step(const FrameVector& v, const FrameVector& fprime, const std::vector<UniRational>& gamma, int k) {
  FrameVector out;
  out.reserve(k);
  for (int l = 0; l < k; ++l) {
    UniRational acc = v[l].derivative();
    for (int i = 0; i < k; ++i) {
      if (fprime[i].isZero()) continue;
      for (int m = 0; m < k; ++m) {
        const UniRational& g = gamma[(l * k + i) * k + m];
        if (g.isZero() || v[m].isZero()) continue;
        acc = acc + g * fprime[i] * v[m];
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

FrameVector derivativeOf(const std::vector<UniRational>& w) {
  FrameVector out;
  for (const auto& c : w) out.push_back(c.derivative());
  return out;
}

void checkCurveFits(const ProjectiveCurve& curve, const ChartConnection& conn) {
  if (curve.k() != conn.k()) {
    throw std::invalid_argument("curve maps to P^" + std::to_string(curve.k()) + ", connection lives on P^" +
                                std::to_string(conn.k()));
  }
}

}  // namespace

FrameVector covariantDerivative(const FrameVector& v, const ProjectiveCurve& curve, const ChartConnection& conn) {
  checkCurveFits(curve, conn);
  if (static_cast<int>(v.size()) != conn.k()) throw std::invalid_argument("covariantDerivative: V needs k entries");
  FrameVector fprime = derivativeOf(affineCoordinates(curve, conn.chart()));
  return step(v, fprime, composedSymbols(curve, conn), conn.k());
}

CovariantFrame covariantFrame(const ProjectiveCurve& curve, const ChartConnection& conn) {
  checkCurveFits(curve, conn);
  int k = conn.k();
  CovariantFrame frame;
  frame.chart = conn.chart();
  FrameVector fprime = derivativeOf(affineCoordinates(curve, conn.chart()));
  frame.vectors.push_back(fprime);
  if (k > 1) {
    std::vector<UniRational> gamma = composedSymbols(curve, conn);
    for (int m = 1; m < k; ++m) frame.vectors.push_back(step(frame.vectors.back(), fprime, gamma, k));
  }
  return frame;
}

WronskianValue connectionWronskian(const ProjectiveCurve& curve, const ChartConnection& conn) {
  WronskianValue w;
  w.frame = covariantFrame(curve, conn);
  int k = conn.k();
  Matrix<UniRational> m(k, k, UniRational());
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) m(r, c) = w.frame.vectors[r][c];
  }
  w.value = determinant(std::move(m));
  w.identicallyZero = w.value.isZero();
  return w;
}

namespace {

struct Orders {
  int sigma;
  int delta;
  int wNum;
  int wDen;
  bool wZero;
};

bool verdict(const Orders& o, int k) {
  if (o.sigma < k + 1 || o.wZero) return true;
  int lhs = k * (k - 1) / 2 * o.delta + o.wNum - o.wDen;
  return lhs >= o.sigma - k;
}

UniPolynomial nonzeroPullback(const ProjectiveCurve& curve, const HomogeneousPolynomial& p, ErrorKind kind,
                              const char* what) {
  UniPolynomial pull = pullback(curve, p);
  if (pull.isZero()) throw Error(kind, std::string(what) + " vanishes identically along the curve");
  return pull;
}

}  // namespace

bool zeroOrderInequalityCheck(const ProjectiveCurve& curve, const ChartConnection& conn,
                              const HomogeneousPolynomial& delta, const HomogeneousPolynomial& sigma,
                              const GaussianRational& z0) {
  checkCurveFits(curve, conn);
  if (curve[conn.chart()].evaluate(z0).isZero()) {
    throw std::invalid_argument("f(z0) lies outside chart " + std::to_string(conn.chart()));
  }
  int k = curve.k();
  Orders o{};
  o.sigma = nonzeroPullback(curve, sigma, ErrorKind::ZeroPullback, "sigma").orderAt(z0);
  if (o.sigma < k + 1) return true;
  WronskianValue w = connectionWronskian(curve, conn);
  o.wZero = w.identicallyZero;
  if (o.wZero) return true;
  o.delta = nonzeroPullback(curve, delta, ErrorKind::PolarLocusCurve, "delta").orderAt(z0);
  o.wNum = w.value.num().orderAt(z0);
  o.wDen = w.value.den().orderAt(z0);
  return verdict(o, k);
}

bool zeroOrderInequalityCheck(const ProjectiveCurve& curve, const ChristoffelTensor& tensor,
                              const HomogeneousPolynomial& sigma, const GaussianRational& z0) {
  for (int j = 0; j <= curve.k(); ++j) {
    if (!curve[j].evaluate(z0).isZero()) {
      return zeroOrderInequalityCheck(curve, chartRestrict(tensor, j), tensor.delta(), sigma, z0);
    }
  }
  throw Error(ErrorKind::InvalidInput, "every component vanishes at z0; reduce the curve first");
}

bool zeroOrderInequalityCheck(const ProjectiveCurve& curve, const ChristoffelTensor& tensor,
                              const HomogeneousPolynomial& sigma, std::complex<double> z0) {
  int chart = -1;
  double best = 0.0;
  for (int j = 0; j <= curve.k(); ++j) {
    double v = std::abs(curve[j].evaluate(z0));
    if (v > best) {
      best = v;
      chart = j;
    }
  }
  if (chart < 0) throw Error(ErrorKind::InvalidInput, "every component vanishes at z0; reduce the curve first");
  int k = curve.k();
  Orders o{};
  o.sigma = nonzeroPullback(curve, sigma, ErrorKind::ZeroPullback, "sigma").orderAtNumeric(z0);
  if (o.sigma < k + 1) return true;
  WronskianValue w = connectionWronskian(curve, chartRestrict(tensor, chart));
  o.wZero = w.identicallyZero;
  if (o.wZero) return true;
  o.delta = nonzeroPullback(curve, tensor.delta(), ErrorKind::PolarLocusCurve, "delta").orderAtNumeric(z0);
  o.wNum = w.value.num().orderAtNumeric(z0);
  o.wDen = w.value.den().orderAtNumeric(z0);
  return verdict(o, k);
}

}  // namespace tgc
