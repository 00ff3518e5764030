#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tgc/algebra/linear.hpp"
#include "tgc/algebra/polynomial.hpp"
#include "tgc/algebra/rational_function.hpp"

namespace tgc {

/// k+1 homogeneous polynomials S_0..S_k of a common degree d in X_0..X_k
/// whose Jacobian determinant does not vanish identically.
class LinearSystemBasis {
 public:
  /// Throws DegreeMismatch for malformed input and SingularSystem when
  /// det(dS_mu/dX_lambda) is identically zero.
  explicit LinearSystemBasis(std::vector<HomogeneousPolynomial> s);

  /// The coordinate basis S_mu = X_mu^d (d = 1 is the flat basis).
  static LinearSystemBasis fermat(int k, int d);

  int k() const { return static_cast<int>(s_.size()) - 1; }
  int numVars() const { return static_cast<int>(s_.size()); }
  int d() const { return s_.front().degree(); }
  const std::vector<HomogeneousPolynomial>& members() const { return s_; }
  const HomogeneousPolynomial& jacobianDeterminant() const { return delta_; }

  /// sum_mu coeffs[mu] * S_mu.
  HomogeneousPolynomial combination(const std::vector<GaussianRational>& coeffs) const;
  /// Coefficients c with sigma = sum c_mu S_mu, or nullopt when sigma is not
  /// in the linear system.
  std::optional<std::vector<GaussianRational>> spanCoefficients(const HomogeneousPolynomial& sigma) const;

 private:
  std::vector<HomogeneousPolynomial> s_;
  HomogeneousPolynomial delta_;
};

/// Entry (mu, lambda) = dS_mu/dX_lambda.
Matrix<Polynomial> jacobianMatrix(const LinearSystemBasis& basis);

/// Christoffel symbols Gamma^lambda_{ij} of the ambient connection d + Gamma
/// on C^{k+1}, together with the common denominator delta.
class ChristoffelTensor {
 public:
  ChristoffelTensor(int k, int d, std::vector<HomRationalFunction> entries, HomogeneousPolynomial delta);

  int k() const { return k_; }
  int d() const { return d_; }
  int numVars() const { return k_ + 1; }
  const HomogeneousPolynomial& delta() const { return delta_; }

  const HomRationalFunction& operator()(int lambda, int i, int j) const { return gamma_[index(lambda, i, j)]; }
  HomRationalFunction& operator()(int lambda, int i, int j) { return gamma_[index(lambda, i, j)]; }

  /// Numerator of Gamma^lambda_{ij} written over delta. Throws
  /// std::logic_error if the entry's denominator does not divide delta.
  Polynomial numeratorOverDelta(int lambda, int i, int j) const;

  bool isFlat() const;

 private:
  int index(int lambda, int i, int j) const { return (lambda * (k_ + 1) + i) * (k_ + 1) + j; }

  int k_;
  int d_;
  std::vector<HomRationalFunction> gamma_;
  HomogeneousPolynomial delta_;
};

/// Solves sum_lambda dS_mu/dX_lambda Gamma^lambda_{ij} = d^2 S_mu/dX_i dX_j
/// for all (i, j) with one shared fraction-free elimination.
ChristoffelTensor solveChristoffel(const LinearSystemBasis& basis);

struct GeodesicReport {
  struct Residual {
    int i;
    int j;
    HomRationalFunction value;
  };
  bool holds = true;
  std::vector<Residual> nonzero;  // (i, j) with i <= j
};

/// Exact residuals sum_lambda dsigma/dX_lambda Gamma^lambda_{ij} - d^2 sigma/dX_i dX_j.
/// Throws DegreeMismatch if sigma's degree or ring differs from the tensor's.
GeodesicReport verifyGeodesicIdentity(const ChristoffelTensor& tensor, const HomogeneousPolynomial& sigma);

/// Every nonzero entry has homogeneous degree exactly -1.
bool checkHomogeneityDegree(const ChristoffelTensor& tensor);

struct EulerReport {
  bool holds = true;
  double worstResidual = 0.0;
  int samplesUsed = 0;
  int rejectedNearPolar = 0;
};

struct EulerCheckOptions {
  int samples = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
  double polarCutoff = 1e-6;
};

/// Numeric test that contracting Gamma with the Euler field X gives
/// alpha * v + gamma(v) * X (and the mirrored contraction). Points are drawn
/// from the unit polydisk; those with |delta| < polarCutoff are rejected.
/// Throws SamplingFailure when no admissible point is found.
EulerReport checkEulerProperty(const ChristoffelTensor& tensor, const EulerCheckOptions& options = {});

struct PolarLocus {
  HomogeneousPolynomial delta;
  int degree;
};

/// delta and its degree; degree <= (k+1)(d-1).
PolarLocus polarDegree(const ChristoffelTensor& tensor);

/// How the ambient tensor is pushed to the affine chart {X_j = 1}.
enum class ChartDescent {
  /// Gamma'^l_{im} = (Gamma^l_{im} - X_l Gamma^j_{im}) at X_j = 1: the ambient
  /// derivative is projected onto the chart along the Euler field.
  EulerProjection,
  /// Gamma'^l_{im} = Gamma^l_{im} at X_j = 1 with index j dropped.
  Substitution,
};

/// Chart connection on U_j = {X_j != 0} in affine coordinates
/// w = (X_i / X_j)_{i != j}; indices run over 0..k-1 in that order.
class ChartConnection {
 public:
  ChartConnection(int k, int chart, std::vector<RationalFunction> entries);

  int k() const { return k_; }
  int chart() const { return chart_; }
  const RationalFunction& operator()(int lambda, int i, int m) const { return gamma_[(lambda * k_ + i) * k_ + m]; }
  /// Homogeneous index of affine coordinate a.
  int homogeneousIndex(int a) const { return a < chart_ ? a : a + 1; }
  bool isFlat() const;

 private:
  int k_;
  int chart_;
  std::vector<RationalFunction> gamma_;
};

ChartConnection chartRestrict(const ChristoffelTensor& tensor, int chart,
                              ChartDescent descent = ChartDescent::EulerProjection);

/// Chart form of the totally-geodesic identity for s = sigma(X_j = 1):
/// true when every d^2 s - ds . Gamma' entry is s times a rational function
/// (tested by exact divisibility of the residual numerators by s).
bool isTotallyGeodesicInChart(const ChartConnection& conn, const HomogeneousPolynomial& sigma);

}  // namespace tgc
