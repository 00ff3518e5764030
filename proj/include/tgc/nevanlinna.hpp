#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <vector>

#include "tgc/algebra/univariate.hpp"
#include "tgc/curve.hpp"

namespace tgc {

struct QuadratureSettings {
  /// Stop doubling once successive trapezoid sums differ by less than this.
  double tolerance = 1e-9;
  int initialNodes = 64;
  int maxNodes = 1 << 20;
};

/// (1/2pi) int_0^{2pi} g(r e^{i theta}) d theta by the trapezoid rule with node
/// doubling. Throws QuadratureFailure when the node budget is exhausted.
double circleMean(const std::function<double(std::complex<double>)>& g, double r,
                  const QuadratureSettings& settings = {});

enum class Spacing { Log, Linear };

/// Evaluation radii inside a disk of radius R (infinite for entire curves).
class RadiusGrid {
 public:
  RadiusGrid(std::vector<double> radii, double outer = std::numeric_limits<double>::infinity());
  static RadiusGrid make(double rMin, double rMax, int count, Spacing spacing,
                         double outer = std::numeric_limits<double>::infinity());

  const std::vector<double>& radii() const { return radii_; }
  double outer() const { return outer_; }
  bool entire() const { return outer_ == std::numeric_limits<double>::infinity(); }
  /// r_0 = r_min / 2, where characteristic functions are anchored.
  double anchor() const { return radii_.front() / 2.0; }

 private:
  std::vector<double> radii_;
  double outer_;
};

struct DivisorPoint {
  std::complex<double> location;
  int multiplicity;
};

struct DivisorOnDisk {
  std::vector<DivisorPoint> points;
};

/// Zeros of a nonzero polynomial with exact multiplicities; the point 0 is
/// located exactly. Throws ZeroPullback for the zero polynomial.
DivisorOnDisk zeroDivisor(const UniPolynomial& pull);

/// sum_{0<|a|<r} m(a) log(r/|a|) + m(0) log r, with multiplicities capped at
/// `truncation` when given.
double countingFunction(const DivisorOnDisk& divisor, double r, std::optional<int> truncation = std::nullopt);
double countingFunction(const UniPolynomial& pull, double r, std::optional<int> truncation = std::nullopt);

/// Circle mean of log max_i |f_i| at r minus the same mean at `anchor`.
double cartanCharacteristic(const ProjectiveCurve& curve, double r, double anchor,
                            const QuadratureSettings& settings = {});

/// Circle mean of log(max_i |f_i|^d / |sigma(f)|). Throws NearSingularRadius
/// when a zero of sigma o f lies within 1e-6 of |z| = r.
double proximity(const ProjectiveCurve& curve, const HomogeneousPolynomial& sigma, double r,
                 const QuadratureSettings& settings = {});

/// Moves r outward in steps of 1e-4 until it is 1e-6 away from every modulus.
double screenRadius(double r, const std::vector<double>& moduli);

/// d T_f(r) - m_f(r, sigma) - N(r, f*sigma) on the grid (radii screened).
std::vector<double> fmtResidual(const ProjectiveCurve& curve, const HomogeneousPolynomial& sigma,
                                const RadiusGrid& grid, const QuadratureSettings& settings = {});

/// Union of the zero sets of sigma_j o f and sigma_j o g, each point once.
struct SharingSet {
  /// Monic square-free polynomial whose roots are the points of S.
  UniPolynomial locus;
  DivisorOnDisk points;
  /// N(r, S) with every point counted once.
  double counting(double r) const { return countingFunction(points, r); }
};

SharingSet sharingSet(const ProjectiveCurve& f, const ProjectiveCurve& g,
                      const std::vector<HomogeneousPolynomial>& sigmas);

struct GrowthIndex {
  double value = 0.0;
  bool zeroByTheorem = false;
};

/// 0 for entire curves; otherwise the supplied value (MissingGrowthIndex if absent).
GrowthIndex growthIndex(double outerRadius, std::optional<double> userValue = std::nullopt);

struct NevanlinnaRow {
  double r = 0.0;
  double T = 0.0;
  std::vector<double> m;
  std::vector<double> N;
  std::vector<double> Nk;
  std::vector<double> residual;
};

struct NevanlinnaTable {
  int truncation = 1;
  double anchor = 0.0;
  std::vector<NevanlinnaRow> rows;

  /// r, T_f, m_j..., N_j..., Nk_j..., residual_j... with 12 significant digits.
  void writeCsv(std::ostream& out) const;
};

NevanlinnaTable evaluateNevanlinna(const ProjectiveCurve& curve, const std::vector<HomogeneousPolynomial>& sigmas,
                                   const RadiusGrid& grid, int truncation, const QuadratureSettings& settings = {});

}  // namespace tgc
