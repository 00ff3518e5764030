#pragma once

#include <complex>
#include <vector>

#include "tgc/algebra/univariate.hpp"
#include "tgc/connection.hpp"

namespace tgc {

/// Polynomial curve z -> [f_0(z) : ... : f_k(z)] into P^k.
class ProjectiveCurve {
 public:
  /// Throws ZeroCurve when every component vanishes identically.
  explicit ProjectiveCurve(std::vector<UniPolynomial> components);

  int k() const { return static_cast<int>(f_.size()) - 1; }
  int numComponents() const { return static_cast<int>(f_.size()); }
  const std::vector<UniPolynomial>& components() const { return f_; }
  const UniPolynomial& operator[](int i) const { return f_[i]; }
  /// True when the components have no common nonconstant factor.
  bool reduced() const { return reduced_; }
  /// Maximal component degree.
  int degree() const;

  std::vector<std::complex<double>> evaluate(std::complex<double> z) const;
  std::vector<GaussianRational> evaluate(const GaussianRational& z) const;

 private:
  std::vector<UniPolynomial> f_;
  bool reduced_ = false;
};

/// Divides the components by their monic gcd.
ProjectiveCurve reduce(const ProjectiveCurve& curve);

/// sigma(f_0, ..., f_k).
UniPolynomial pullback(const ProjectiveCurve& curve, const HomogeneousPolynomial& sigma);

/// (f_i / f_j)_{i != j}; throws ChartDegenerate when f_j is identically zero.
std::vector<UniRational> affineCoordinates(const ProjectiveCurve& curve, int chart);

/// Smallest j with f_j not identically zero.
int defaultChart(const ProjectiveCurve& curve);

/// A chart rational function (in the affine coordinates of `chart`) evaluated
/// along the curve. Throws PolarLocusCurve when its denominator vanishes
/// identically on the curve.
UniRational composeWithCurve(const RationalFunction& entry, const ProjectiveCurve& curve, int chart);

using FrameVector = std::vector<UniRational>;

/// (Lambda_{f'} V)^l = (V^l)' + sum_{i,m} Gamma^l_{im}(f) (f^i)' V^m.
FrameVector covariantDerivative(const FrameVector& v, const ProjectiveCurve& curve, const ChartConnection& conn);

struct CovariantFrame {
  int chart = 0;
  /// V_0 = f', V_m = Lambda_{f'} V_{m-1}.
  std::vector<FrameVector> vectors;
};

CovariantFrame covariantFrame(const ProjectiveCurve& curve, const ChartConnection& conn);

struct WronskianValue {
  UniRational value;
  bool identicallyZero = false;
  CovariantFrame frame;
};

/// det of the k x k matrix whose rows are the frame vectors.
WronskianValue connectionWronskian(const ProjectiveCurve& curve, const ChartConnection& conn);

/// Checks ord_{z0}(delta(f)^{k(k-1)/2} W) >= ord_{z0}(sigma o f) - k whenever
/// ord_{z0}(sigma o f) >= k+1 (true otherwise). The chart must contain f(z0):
/// throws std::invalid_argument when f_{conn.chart()}(z0) = 0.
bool zeroOrderInequalityCheck(const ProjectiveCurve& curve, const ChartConnection& conn,
                              const HomogeneousPolynomial& delta, const HomogeneousPolynomial& sigma,
                              const GaussianRational& z0);

/// Same check in the smallest chart j with f_j(z0) != 0.
bool zeroOrderInequalityCheck(const ProjectiveCurve& curve, const ChristoffelTensor& tensor,
                              const HomogeneousPolynomial& sigma, const GaussianRational& z0);

/// Orders from numeric Taylor coefficients (tolerance 1e-8) at a complex point.
bool zeroOrderInequalityCheck(const ProjectiveCurve& curve, const ChristoffelTensor& tensor,
                              const HomogeneousPolynomial& sigma, std::complex<double> z0);

}  // namespace tgc
