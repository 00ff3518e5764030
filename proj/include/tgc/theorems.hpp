#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgc/connection.hpp"
#include "tgc/curve.hpp"
#include "tgc/nevanlinna.hpp"

namespace tgc {

/// q - (k+1)/d - (k-1)k(k+1)(d-1)/(2d).
mpq_class smtCoefficient(int k, int d, int q);

/// (k^2 (k+1)^2 / 2)(1+eps)(c+eps) T + logConstant (log+ T + log+ r).
double smtErrorTermPrincipal(int k, double epsilon, double c, double T, double r, double logConstant = 0.0);

double logPlus(double x);

struct SMTConfig {
  LinearSystemBasis basis;
  std::vector<HomogeneousPolynomial> sigmas;
  ProjectiveCurve curve;
  RadiusGrid grid;
  double epsilon = 0.1;
  GrowthIndex growth{};
  /// Constant in front of log+ T + log+ r; 0 for entire curves.
  double logConstant = 0.0;
  QuadratureSettings quadrature{};
  std::uint64_t seed = 1;
};

struct SMTRow {
  double r = 0.0;
  double T = 0.0;
  double lhs = 0.0;
  double sumNk = 0.0;
  double errorTerm = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

struct SMTReport {
  int k = 0;
  int d = 0;
  int q = 0;
  int chart = 0;
  mpq_class coefficient;
  std::vector<SMTRow> rows;
  /// margin >= 0 at every radius r >= 2.
  bool strict = false;
  /// margin / T >= -0.05 on the outer quarter of the grid; only for c = 0.
  std::optional<bool> asymptotic;
  /// Least-squares C >= 0 with margin + C (log+ T + log+ r) fitted on r >= 2.
  double fittedC = 0.0;
  bool fitted = false;
  bool overall = false;
  std::vector<std::string> warnings;
};

/// Throws DegenerateCurve when W(f) vanishes identically, InvalidInput when a
/// sigma is not in the linear system, ZeroPullback when the curve lies in a sigma.
SMTReport smtVerify(const SMTConfig& config);

/// For linear sigmas: every min(q, k+1)-subset of coefficient vectors is independent.
bool hyperplanesInGeneralPosition(const std::vector<HomogeneousPolynomial>& sigmas);

/// Numeric spot check of smoothness and transversal pairwise intersections;
/// returns one warning per suspected violation.
std::vector<std::string> normalCrossingSpotCheck(const std::vector<HomogeneousPolynomial>& sigmas,
                                                 std::uint64_t seed = 1);

/// f_i g_j - f_j g_i for i < j.
std::vector<UniPolynomial> crossProducts(const ProjectiveCurve& f, const ProjectiveCurve& g);
bool curvesIdentical(const ProjectiveCurve& f, const ProjectiveCurve& g);
/// Every root of `locus` is a point where f and g agree in P^k (exact).
bool curvesAgreeOn(const ProjectiveCurve& f, const ProjectiveCurve& g, const UniPolynomial& locus);

struct SharingBoundRow {
  double r = 0.0;
  double Tf = 0.0;
  double Tg = 0.0;
  double NS = 0.0;
  double margin = 0.0;
};

struct SharingBoundReport {
  std::vector<SharingBoundRow> rows;
  SharingSet sharing;
  /// max - min of min(margin, 0) over the grid.
  double negativeSpread = 0.0;
  bool holds = false;
};

/// N(r, S) <= T_f + T_g + O(1). Throws CurvesIdentical or SharingViolated.
SharingBoundReport sharingBoundCheck(const ProjectiveCurve& f, const ProjectiveCurve& g,
                                     const std::vector<HomogeneousPolynomial>& sigmas, const RadiusGrid& grid,
                                     const QuadratureSettings& settings = {});

/// Coefficients a_{ml}, m < l, of sum a_{ml}(z_m w_l - z_l w_m).
using DiagonalCoefficients = std::map<std::pair<int, int>, GaussianRational>;

GaussianRational diagonalSection(const DiagonalCoefficients& a, const std::vector<GaussianRational>& z,
                                 const std::vector<GaussianRational>& w);
std::complex<double> diagonalSection(const DiagonalCoefficients& a, const std::vector<std::complex<double>>& z,
                                     const std::vector<std::complex<double>>& w);

struct ThresholdRow {
  std::string name;
  mpq_class bound;
  /// Smallest integer q strictly above the bound.
  long minQ = 0;
};

struct ThresholdTable {
  int k = 0;
  int d = 0;
  mpq_class c;
  std::vector<ThresholdRow> rows;

  /// Throws std::out_of_range for an unknown name.
  const ThresholdRow& row(const std::string& name) const;
};

/// Rows: "entire (i)", "entire (ii)", "disk (i)", "disk (ii)", "Dulock-Ru",
/// "Quang-An (a)", "Quang-An (b)", "Hilbert bound", "Fujimoto", "Chen-Yan".
ThresholdTable uniquenessThresholds(int k, int d, double cMax);

long binomial(int n, int r);

struct GroupPartition {
  /// Equivalence classes of sigma indices (0-based), ordered by smallest member.
  std::vector<std::vector<int>> classes;
  /// order[pos] = original index; classes occupy contiguous positions.
  std::vector<int> order;
  /// pairing[pos] = pos + k, wrapped modulo q.
  std::vector<int> pairing;
  /// P_pos = sigma_pos(f) sigma_{p(pos)}(g) - sigma_pos(g) sigma_{p(pos)}(f).
  std::vector<UniPolynomial> auxiliaries;
  bool classesAtMostK = false;
  /// Only meaningful when classesAtMostK.
  bool auxiliariesNonzero = false;
};

/// i ~ j iff sigma_i(f) sigma_j(g) = sigma_j(f) sigma_i(g).
GroupPartition ratioGroups(const ProjectiveCurve& f, const ProjectiveCurve& g,
                           const std::vector<HomogeneousPolynomial>& sigmas, int k);

struct HarnessInput {
  LinearSystemBasis basis;
  std::vector<HomogeneousPolynomial> sigmas;
  ProjectiveCurve f;
  ProjectiveCurve g;
  RadiusGrid grid;
  double epsilon = 0.1;
  double c = 0.0;
  double logConstant = 0.0;
  QuadratureSettings quadrature{};
  std::uint64_t seed = 1;
  /// Skip the f = g on S requirement.
  bool synthetic = false;
};

struct HarnessRow {
  double r = 0.0;
  double sharingMargin = 0.0;
  double smtMarginF = 0.0;
  double smtMarginG = 0.0;
  /// 2k N(r, S) - sum_j (N_k(f*sigma_j) + N_k(g*sigma_j)).
  double dominationMargin = 0.0;
  /// (2k/d + principal rate - coefficient)(T_f + T_g).
  double contradictionMargin = 0.0;
};

struct HarnessReport {
  bool identical = false;
  int q = 0;
  mpq_class threshold;
  bool aboveThreshold = false;
  std::vector<HarnessRow> rows;
  std::optional<SharingBoundReport> sharingBound;
  std::optional<SMTReport> smtF;
  std::optional<SMTReport> smtG;
  std::optional<GroupPartition> groups;
  std::vector<std::string> failed;
  std::string verdict;
};

HarnessReport uniquenessHarness(const HarnessInput& input);

}  // namespace tgc
