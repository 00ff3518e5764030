#include "tgc/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <stdexcept>

#include "tgc/error.hpp"

namespace tgc {

namespace {

constexpr double kScreenTolerance = 1e-6;
constexpr double kNudge = 1e-4;

// Double-precision copy of a polynomial for fast repeated evaluation.
class ComplexPoly {
 public:
  explicit ComplexPoly(const UniPolynomial& p) {
    for (const auto& c : p.coeffs()) c_.push_back(c.toComplex());
  }
  std::complex<double> operator()(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

 private:
  std::vector<std::complex<double>> c_;
};

class MaxNorm {
 public:
  explicit MaxNorm(const ProjectiveCurve& curve) {
    for (const auto& p : curve.components()) f_.emplace_back(p);
  }
  double log(std::complex<double> z) const {
    double m = 0.0;
    for (const auto& p : f_) m = std::max(m, std::abs(p(z)));
    return std::log(m);
  }

 private:
  std::vector<ComplexPoly> f_;
};

std::vector<double> moduli(const DivisorOnDisk& divisor) {
  std::vector<double> out;
  for (const auto& p : divisor.points) out.push_back(std::abs(p.location));
  return out;
}

double proximityOnCircle(const MaxNorm& norm, const ComplexPoly& pull, int d, const std::vector<double>& roots,
                         double r, const QuadratureSettings& settings) {
  for (double a : roots) {
    if (std::abs(a - r) < kScreenTolerance) {
      throw Error(ErrorKind::NearSingularRadius,
                  "a zero of sigma o f lies on |z| = " + std::to_string(r) + " (modulus " + std::to_string(a) + ")");
    }
  }
  return circleMean([&](std::complex<double> z) { return d * norm.log(z) - std::log(std::abs(pull(z))); }, r,
                    settings);
}

UniPolynomial nonzeroPullback(const ProjectiveCurve& curve, const HomogeneousPolynomial& sigma) {
  UniPolynomial pull = pullback(curve, sigma);
  if (pull.isZero()) {
    throw Error(ErrorKind::ZeroPullback, "the curve lies inside the hypersurface " + sigma.toString());
  }
  return pull;
}

}  // namespace

double circleMean(const std::function<double(std::complex<double>)>& g, double r, const QuadratureSettings& settings) {
  if (!(r > 0.0)) throw std::invalid_argument("circleMean: radius must be positive");
  auto node = [r](long j, long n) { return std::polar(r, 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n)); };
  long n = settings.initialNodes;
  double sum = 0.0;
  for (long j = 0; j < n; ++j) sum += g(node(j, n));
  double estimate = sum / static_cast<double>(n);
  while (2 * n <= settings.maxNodes) {
    // The refined rule reuses the old nodes; only odd nodes are new.
    for (long j = 1; j < 2 * n; j += 2) sum += g(node(j, 2 * n));
    n *= 2;
    double refined = sum / static_cast<double>(n);
    if (!std::isfinite(refined)) {
      throw Error(ErrorKind::QuadratureFailure, "non-finite integrand on |z| = " + std::to_string(r));
    }
    bool done = std::abs(refined - estimate) < settings.tolerance;
    estimate = refined;
    if (done) return estimate;
  }
  throw Error(ErrorKind::QuadratureFailure, "trapezoid rule did not reach tolerance within " +
                                                std::to_string(settings.maxNodes) + " nodes at r = " +
                                                std::to_string(r));
}

RadiusGrid::RadiusGrid(std::vector<double> radii, double outer) : radii_(std::move(radii)), outer_(outer) {
  if (radii_.empty()) throw std::invalid_argument("radius grid is empty");
  if (!(outer_ > 0.0)) throw std::invalid_argument("outer radius must be positive");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] > 0.0)) throw std::invalid_argument("radii must be positive");
    if (i > 0 && !(radii_[i] > radii_[i - 1])) throw std::invalid_argument("radii must be strictly increasing");
    if (!(radii_[i] < outer_)) throw std::invalid_argument("radii must lie inside the outer radius");
  }
}

RadiusGrid RadiusGrid::make(double rMin, double rMax, int count, Spacing spacing, double outer) {
  if (count < 1) throw std::invalid_argument("radius grid needs at least one point");
  if (!(rMin > 0.0) || rMax < rMin) throw std::invalid_argument("need 0 < rMin <= rMax");
  if (count == 1) return RadiusGrid({rMin}, outer);
  std::vector<double> radii;
  for (int i = 0; i < count; ++i) {
    double t = static_cast<double>(i) / (count - 1);
    radii.push_back(spacing == Spacing::Log ? rMin * std::pow(rMax / rMin, t) : rMin + t * (rMax - rMin));
  }
  radii.back() = rMax;
  return RadiusGrid(std::move(radii), outer);
}

DivisorOnDisk zeroDivisor(const UniPolynomial& pull) {
  if (pull.isZero()) throw Error(ErrorKind::ZeroPullback, "the zero polynomial has no divisor");
  DivisorOnDisk out;
  int m0 = pull.orderAt(GaussianRational(0));
  if (m0 > 0) out.points.push_back({0.0, m0});
  std::vector<GaussianRational> shifted(pull.coeffs().begin() + m0, pull.coeffs().end());
  for (const auto& sf : squareFree(UniPolynomial(std::move(shifted)))) {
    for (const auto& a : sf.factor.roots()) out.points.push_back({a, sf.multiplicity});
  }
  return out;
}

double countingFunction(const DivisorOnDisk& divisor, double r, std::optional<int> truncation) {
  if (!(r > 0.0)) throw std::invalid_argument("countingFunction: radius must be positive");
  if (truncation && *truncation < 1) throw std::invalid_argument("countingFunction: truncation must be >= 1");
  double n = 0.0;
  for (const auto& p : divisor.points) {
    int m = truncation ? std::min(p.multiplicity, *truncation) : p.multiplicity;
    double a = std::abs(p.location);
    if (a == 0.0) {
      n += m * std::log(r);
    } else if (a < r) {
      n += m * std::log(r / a);
    }
  }
  return n;
}

double countingFunction(const UniPolynomial& pull, double r, std::optional<int> truncation) {
  return countingFunction(zeroDivisor(pull), r, truncation);
}

double cartanCharacteristic(const ProjectiveCurve& curve, double r, double anchor, const QuadratureSettings& settings) {
  MaxNorm norm(curve);
  auto g = [&](std::complex<double> z) { return norm.log(z); };
  return circleMean(g, r, settings) - circleMean(g, anchor, settings);
}

double proximity(const ProjectiveCurve& curve, const HomogeneousPolynomial& sigma, double r,
                 const QuadratureSettings& settings) {
  UniPolynomial pull = nonzeroPullback(curve, sigma);
  return proximityOnCircle(MaxNorm(curve), ComplexPoly(pull), sigma.degree(), moduli(zeroDivisor(pull)), r,
                           settings);
}

double screenRadius(double r, const std::vector<double>& mods) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    bool clear = std::none_of(mods.begin(), mods.end(), [r](double a) { return std::abs(a - r) < kScreenTolerance; });
    if (clear) return r;
    r += kNudge;
  }
  throw Error(ErrorKind::NearSingularRadius, "could not move the radius off the root moduli");
}

std::vector<double> fmtResidual(const ProjectiveCurve& curve, const HomogeneousPolynomial& sigma,
                                const RadiusGrid& grid, const QuadratureSettings& settings) {
  UniPolynomial pull = nonzeroPullback(curve, sigma);
  DivisorOnDisk divisor = zeroDivisor(pull);
  std::vector<double> mods = moduli(divisor);
  MaxNorm norm(curve);
  ComplexPoly p(pull);
  auto logNorm = [&](std::complex<double> z) { return norm.log(z); };
  double base = circleMean(logNorm, grid.anchor(), settings);
  std::vector<double> out;
  for (double r0 : grid.radii()) {
    double r = screenRadius(r0, mods);
    double t = circleMean(logNorm, r, settings) - base;
    double m = proximityOnCircle(norm, p, sigma.degree(), mods, r, settings);
    out.push_back(sigma.degree() * t - m - countingFunction(divisor, r));
  }
  return out;
}

SharingSet sharingSet(const ProjectiveCurve& f, const ProjectiveCurve& g,
                      const std::vector<HomogeneousPolynomial>& sigmas) {
  UniPolynomial product(1);
  for (const auto& sigma : sigmas) {
    product = product * squareFreePart(nonzeroPullback(f, sigma));
    product = product * squareFreePart(nonzeroPullback(g, sigma));
  }
  SharingSet s;
  s.locus = squareFreePart(product);
  s.points = zeroDivisor(s.locus);
  return s;
}

GrowthIndex growthIndex(double outerRadius, std::optional<double> userValue) {
  if (!(outerRadius > 0.0)) throw std::invalid_argument("outer radius must be positive");
  if (outerRadius == std::numeric_limits<double>::infinity()) return {0.0, true};
  if (!userValue) {
    throw Error(ErrorKind::MissingGrowthIndex,
                "the disk has finite radius " + std::to_string(outerRadius) + "; supply the growth index c");
  }
  if (!(*userValue >= 0.0)) throw std::invalid_argument("growth index must be nonnegative");
  return {*userValue, false};
}

NevanlinnaTable evaluateNevanlinna(const ProjectiveCurve& curve, const std::vector<HomogeneousPolynomial>& sigmas,
                                   const RadiusGrid& grid, int truncation, const QuadratureSettings& settings) {
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  std::vector<DivisorOnDisk> divisors;
  std::vector<ComplexPoly> pulls;
  std::vector<std::vector<double>> mods;
  std::vector<double> allMods;
  for (const auto& sigma : sigmas) {
    UniPolynomial pull = nonzeroPullback(curve, sigma);
    divisors.push_back(zeroDivisor(pull));
    pulls.emplace_back(pull);
    mods.push_back(moduli(divisors.back()));
    allMods.insert(allMods.end(), mods.back().begin(), mods.back().end());
  }
  MaxNorm norm(curve);
  auto logNorm = [&](std::complex<double> z) { return norm.log(z); };
  NevanlinnaTable table;
  table.truncation = truncation;
  table.anchor = grid.anchor();
  double base = circleMean(logNorm, grid.anchor(), settings);
  for (double r0 : grid.radii()) {
    NevanlinnaRow row;
    row.r = screenRadius(r0, allMods);
    row.T = circleMean(logNorm, row.r, settings) - base;
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
      int d = sigmas[j].degree();
      double m = proximityOnCircle(norm, pulls[j], d, mods[j], row.r, settings);
      double n = countingFunction(divisors[j], row.r);
      row.m.push_back(m);
      row.N.push_back(n);
      row.Nk.push_back(countingFunction(divisors[j], row.r, truncation));
      row.residual.push_back(d * row.T - m - n);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void NevanlinnaTable::writeCsv(std::ostream& out) const {
  std::size_t q = rows.empty() ? 0 : rows.front().m.size();
  out << "r,T_f";
  for (const char* name : {"m", "N", "Nk", "residual"}) {
    for (std::size_t j = 1; j <= q; ++j) out << ',' << name << '_' << j;
  }
  out << '\n';
  auto flags = out.flags();
  auto precision = out.precision(12);
  for (const auto& row : rows) {
    out << row.r << ',' << row.T;
    for (const auto* col : {&row.m, &row.N, &row.Nk, &row.residual}) {
      for (double v : *col) out << ',' << v;
    }
    out << '\n';
  }
  out.precision(precision);
  out.flags(flags);
}

}  // namespace tgc
