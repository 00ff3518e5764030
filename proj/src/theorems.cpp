#include "tgc/theorems.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "tgc/error.hpp"

namespace tgc {

namespace {

constexpr double kBurnIn = 2.0;
constexpr double kAsymptoticFloor = -0.05;
constexpr double kNegativeSpread = 0.1;

bool nonnegative(double value, double scale) { return value >= -1e-9 * std::max(1.0, scale); }

mpq_class principalRate(int k, double epsilon, double c) {
  mpq_class kk(k);
  return kk * kk * (kk + 1) * (kk + 1) / 2 * (1 + exactRational(epsilon)) * (exactRational(c) + exactRational(epsilon));
}

std::vector<std::size_t> burnInRows(const std::vector<double>& radii) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] >= kBurnIn) out.push_back(i);
  }
  if (out.empty()) {
    out.resize(radii.size());
    std::iota(out.begin(), out.end(), 0);
  }
  return out;
}

}  // namespace

double logPlus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

mpq_class smtCoefficient(int k, int d, int q) {
  if (k < 1 || d < 1 || q < 1) throw std::invalid_argument("smtCoefficient needs k, d, q >= 1");
  mpq_class out = mpq_class(q) - mpq_class(k + 1, d) - mpq_class((k - 1) * k * (k + 1) * (d - 1), 2 * d);
  out.canonicalize();
  return out;
}

double smtErrorTermPrincipal(int k, double epsilon, double c, double T, double r, double logConstant) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (c < 0.0 || T < 0.0) throw std::invalid_argument("c and T must be nonnegative");
  double rate = k * k * (k + 1.0) * (k + 1.0) / 2.0 * (1.0 + epsilon) * (c + epsilon);
  return rate * T + logConstant * (logPlus(T) + logPlus(r));
}

bool hyperplanesInGeneralPosition(const std::vector<HomogeneousPolynomial>& sigmas) {
  if (sigmas.empty()) return true;
  int n = sigmas.front().numVars();
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& s : sigmas) {
    if (s.degree() != 1) throw std::invalid_argument("general position test expects hyperplanes");
    std::vector<GaussianRational> row(n);
    for (int i = 0; i < n; ++i) {
      Exponent e(n, 0);
      e[i] = 1;
      row[i] = s.poly().coefficient(e);
    }
    rows.push_back(std::move(row));
  }
  int q = static_cast<int>(rows.size());
  int size = std::min(q, n);
  std::vector<bool> pick(q, false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    Matrix<GaussianRational> m(size, n, GaussianRational());
    int r = 0;
    for (int i = 0; i < q; ++i) {
      if (!pick[i]) continue;
      for (int c = 0; c < n; ++c) m(r, c) = rows[i][c];
      ++r;
    }
    if (rank(m) < size) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

namespace {

using Vec = Eigen::VectorXcd;

struct NumericHypersurface {
  Polynomial p;
  std::vector<Polynomial> grad;

  explicit NumericHypersurface(const HomogeneousPolynomial& s) : p(s.poly()) {
    for (int i = 0; i < s.numVars(); ++i) grad.push_back(p.derivative(i));
  }
  std::complex<double> value(const Vec& x) const { return p.evaluate(std::span(x.data(), x.size())); }
  Vec gradient(const Vec& x) const {
    Vec g(x.size());
    for (int i = 0; i < x.size(); ++i) g(i) = grad[i].evaluate(std::span(x.data(), x.size()));
    return g;
  }
};

std::string sigmaName(std::size_t j) { return "sigma_" + std::to_string(j + 1); }

}  // namespace

std::vector<std::string> normalCrossingSpotCheck(const std::vector<HomogeneousPolynomial>& sigmas, std::uint64_t seed) {
  std::vector<std::string> warnings;
  if (sigmas.empty()) return warnings;
  int n = sigmas.front().numVars();
  int k = n - 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-5, 5);
  std::normal_distribution<double> normal;
  auto gaussianInt = [&] { return GaussianRational(mpq_class(small(rng)), mpq_class(small(rng))); };
  auto randomVec = [&] {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = {normal(rng), normal(rng)};
    return v;
  };
  std::vector<NumericHypersurface> hs;
  for (const auto& s : sigmas) hs.emplace_back(s);

  // Smoothness: gradients at the points where random lines meet each sigma.
  for (std::size_t j = 0; j < sigmas.size(); ++j) {
    bool flagged = false;
    for (int line = 0; line < 3 && !flagged; ++line) {
      std::vector<UniPolynomial> param;
      for (int i = 0; i < n; ++i) param.push_back(UniPolynomial({gaussianInt(), gaussianInt()}));
      UniPolynomial restricted = substitute(sigmas[j].poly(), param);
      if (restricted.degree() < 1) continue;
      for (const auto& t : squareFreePart(restricted).roots()) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x(i) = param[i].evaluate(t);
        if (x.norm() == 0.0) continue;
        x /= x.norm();
        if (hs[j].gradient(x).norm() < 1e-6) {
          warnings.push_back(sigmaName(j) + " looks singular near a sampled point");
          flagged = true;
          break;
        }
      }
    }
  }

  for (std::size_t a = 0; a < sigmas.size(); ++a) {
    for (std::size_t b = a + 1; b < sigmas.size(); ++b) {
      if (k == 1) {
        // Points of P^1: the two divisors must be disjoint.
        Exponent top{0, sigmas[a].degree()};
        Exponent topB{0, sigmas[b].degree()};
        bool atInfinity = sigmas[a].poly().coefficient(top).isZero() && sigmas[b].poly().coefficient(topB).isZero();
        std::vector<UniPolynomial> chart{UniPolynomial(1), UniPolynomial::z()};
        UniPolynomial pa = substitute(sigmas[a].poly(), chart);
        UniPolynomial pb = substitute(sigmas[b].poly(), chart);
        bool common = !pa.isZero() && !pb.isZero() && gcd(pa, pb).degree() > 0;
        if (atInfinity || common || pa.isZero() || pb.isZero()) {
          warnings.push_back(sigmaName(a) + " and " + sigmaName(b) + " share a point");
        }
        continue;
      }
      // Newton on sigma_a = sigma_b = 0 cut down to points by random linear forms.
      std::vector<Vec> forms;
      for (int i = 0; i < k - 1; ++i) forms.push_back(randomVec());
      bool flagged = false;
      for (int start = 0; start < 5 && !flagged; ++start) {
        Vec x = randomVec();
        bool converged = false;
        for (int it = 0; it < 60; ++it) {
          Vec f(n);
          Eigen::MatrixXcd jac(n, n);
          f(0) = hs[a].value(x);
          f(1) = hs[b].value(x);
          jac.row(0) = hs[a].gradient(x).transpose();
          jac.row(1) = hs[b].gradient(x).transpose();
          for (int i = 0; i < k - 1; ++i) {
            f(2 + i) = (forms[i].transpose() * x).value() - (i == 0 ? 1.0 : 0.0);
            jac.row(2 + i) = forms[i].transpose();
          }
          if (f.norm() < 1e-12) {
            converged = true;
            break;
          }
          Vec step = jac.colPivHouseholderQr().solve(f);
          if (!step.allFinite()) break;
          x -= step;
        }
        if (!converged || x.norm() == 0.0) continue;
        x /= x.norm();
        Eigen::MatrixXcd grads(2, n);
        grads.row(0) = hs[a].gradient(x).transpose();
        grads.row(1) = hs[b].gradient(x).transpose();
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(grads);
        auto s = svd.singularValues();
        if (s(0) == 0.0 || s(1) < 1e-6 * s(0)) {
          warnings.push_back(sigmaName(a) + " and " + sigmaName(b) + " meet non-transversally near a sampled point");
          flagged = true;
        }
      }
    }
  }
  return warnings;
}

SMTReport smtVerify(const SMTConfig& config) {
  const LinearSystemBasis& basis = config.basis;
  int k = basis.k();
  int d = basis.d();
  int q = static_cast<int>(config.sigmas.size());
  if (q < 1) throw Error(ErrorKind::InvalidInput, "at least one hypersurface is required");
  if (!(config.epsilon > 0.0)) throw Error(ErrorKind::InvalidInput, "epsilon must be positive");
  if (config.curve.k() != k) {
    throw Error(ErrorKind::DegreeMismatch, "curve maps to P^" + std::to_string(config.curve.k()) +
                                               ", the linear system lives on P^" + std::to_string(k));
  }
  for (int j = 0; j < q; ++j) {
    if (!basis.spanCoefficients(config.sigmas[j])) {
      throw Error(ErrorKind::InvalidInput, sigmaName(j) + " is not in the linear system spanned by the basis");
    }
  }
  ProjectiveCurve f = reduce(config.curve);
  ChristoffelTensor tensor = solveChristoffel(basis);
  SMTReport report;
  report.k = k;
  report.d = d;
  report.q = q;
  report.chart = defaultChart(f);
  WronskianValue w = connectionWronskian(f, chartRestrict(tensor, report.chart));
  if (w.identicallyZero) {
    throw Error(ErrorKind::DegenerateCurve, "the connection Wronskian of the curve vanishes identically");
  }
  report.coefficient = smtCoefficient(k, d, q);
  if (d == 1) {
    if (!hyperplanesInGeneralPosition(config.sigmas)) report.warnings.push_back("hyperplanes not in general position");
  } else {
    report.warnings.push_back("general position of degree-" + std::to_string(d) + " hypersurfaces is not verified");
  }
  for (auto& msg : normalCrossingSpotCheck(config.sigmas, config.seed)) report.warnings.push_back(std::move(msg));
  if (sgn(report.coefficient) <= 0) {
    report.warnings.push_back("coefficient " + report.coefficient.get_str() +
                              " is not positive; the inequality holds trivially");
  }

  NevanlinnaTable table = evaluateNevanlinna(f, config.sigmas, config.grid, k, config.quadrature);
  double coeff = report.coefficient.get_d();
  double c = config.growth.value;
  std::vector<double> radii;
  for (const auto& row : table.rows) {
    SMTRow out;
    out.r = row.r;
    out.T = row.T;
    out.lhs = coeff * d * row.T;
    for (double v : row.Nk) out.sumNk += v;
    out.errorTerm = smtErrorTermPrincipal(k, config.epsilon, c, std::max(row.T, 0.0), row.r, config.logConstant);
    out.rhs = out.sumNk + out.errorTerm;
    out.margin = out.rhs - out.lhs;
    radii.push_back(row.r);
    report.rows.push_back(out);
  }

  std::vector<std::size_t> burn = burnInRows(radii);
  report.strict = std::all_of(burn.begin(), burn.end(), [&](std::size_t i) {
    const SMTRow& row = report.rows[i];
    return nonnegative(row.margin, std::abs(row.lhs) + std::abs(row.rhs));
  });

  double num = 0.0;
  double den = 0.0;
  for (std::size_t i : burn) {
    const SMTRow& row = report.rows[i];
    double l = logPlus(row.T) + logPlus(row.r);
    num += row.margin * l;
    den += l * l;
  }
  report.fittedC = den > 0.0 ? std::max(0.0, -num / den) : 0.0;
  report.fitted = std::all_of(burn.begin(), burn.end(), [&](std::size_t i) {
    const SMTRow& row = report.rows[i];
    double shifted = row.margin + report.fittedC * (logPlus(row.T) + logPlus(row.r));
    return nonnegative(shifted, std::abs(row.lhs) + std::abs(row.rhs));
  });

  if (c == 0.0) {
    std::size_t n = report.rows.size();
    std::size_t tail = std::max<std::size_t>(1, n / 4);
    bool ok = true;
    for (std::size_t i = n - tail; i < n; ++i) {
      const SMTRow& row = report.rows[i];
      ok = ok && (row.T > 0.0 ? row.margin / row.T >= kAsymptoticFloor : nonnegative(row.margin, std::abs(row.rhs)));
    }
    report.asymptotic = ok;
  }
  report.overall = report.strict || report.fitted || report.asymptotic.value_or(false);
  return report;
}

std::vector<UniPolynomial> crossProducts(const ProjectiveCurve& f, const ProjectiveCurve& g) {
  if (f.k() != g.k()) throw std::invalid_argument("curves map to projective spaces of different dimension");
  std::vector<UniPolynomial> out;
  for (int i = 0; i <= f.k(); ++i) {
    for (int j = i + 1; j <= f.k(); ++j) out.push_back(f[i] * g[j] - f[j] * g[i]);
  }
  return out;
}

bool curvesIdentical(const ProjectiveCurve& f, const ProjectiveCurve& g) {
  auto cp = crossProducts(f, g);
  return std::all_of(cp.begin(), cp.end(), [](const UniPolynomial& p) { return p.isZero(); });
}

bool curvesAgreeOn(const ProjectiveCurve& f, const ProjectiveCurve& g, const UniPolynomial& locus) {
  if (locus.isZero()) throw std::invalid_argument("curvesAgreeOn: zero locus");
  UniPolynomial s = squareFreePart(locus);
  if (s.degree() <= 0) return true;
  auto cp = crossProducts(reduce(f), reduce(g));
  return std::all_of(cp.begin(), cp.end(), [&](const UniPolynomial& p) { return s.divides(p); });
}

namespace {

SharingBoundReport sharingBoundRows(const ProjectiveCurve& f, const ProjectiveCurve& g, SharingSet sharing,
                                    const RadiusGrid& grid, const QuadratureSettings& settings) {
  SharingBoundReport report;
  report.sharing = std::move(sharing);
  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (double r : grid.radii()) {
    SharingBoundRow row;
    row.r = r;
    row.Tf = cartanCharacteristic(f, r, grid.anchor(), settings);
    row.Tg = cartanCharacteristic(g, r, grid.anchor(), settings);
    row.NS = report.sharing.counting(r);
    row.margin = row.Tf + row.Tg - row.NS;
    double neg = std::min(row.margin, 0.0);
    lo = first ? neg : std::min(lo, neg);
    hi = first ? neg : std::max(hi, neg);
    first = false;
    report.rows.push_back(row);
  }
  report.negativeSpread = hi - lo;
  report.holds = report.negativeSpread < kNegativeSpread;
  return report;
}

}  // namespace

SharingBoundReport sharingBoundCheck(const ProjectiveCurve& f, const ProjectiveCurve& g,
                                     const std::vector<HomogeneousPolynomial>& sigmas, const RadiusGrid& grid,
                                     const QuadratureSettings& settings) {
  ProjectiveCurve fr = reduce(f);
  ProjectiveCurve gr = reduce(g);
  if (curvesIdentical(fr, gr)) throw Error(ErrorKind::CurvesIdentical, "f and g are the same projective curve");
  SharingSet s = sharingSet(fr, gr, sigmas);
  if (!curvesAgreeOn(fr, gr, s.locus)) {
    throw Error(ErrorKind::SharingViolated, "f and g differ at some point of the sharing set");
  }
  return sharingBoundRows(fr, gr, std::move(s), grid, settings);
}

namespace {

template <class T>
T diagonalSectionImpl(const DiagonalCoefficients& a, const std::vector<T>& z, const std::vector<T>& w,
                      const std::function<T(const GaussianRational&)>& lift) {
  if (z.size() != w.size()) throw std::invalid_argument("diagonalSection: points of different dimension");
  int n = static_cast<int>(z.size());
  bool any = false;
  T out{};
  for (const auto& [idx, c] : a) {
    auto [m, l] = idx;
    if (m < 0 || m >= l || l >= n) throw std::invalid_argument("diagonalSection: need 0 <= m < l <= k");
    if (c.isZero()) continue;
    any = true;
    out = out + lift(c) * (z[m] * w[l] - z[l] * w[m]);
  }
  if (!any) throw std::invalid_argument("diagonalSection: all coefficients vanish");
  return out;
}

}  // namespace

GaussianRational diagonalSection(const DiagonalCoefficients& a, const std::vector<GaussianRational>& z,
                                 const std::vector<GaussianRational>& w) {
  return diagonalSectionImpl<GaussianRational>(a, z, w, [](const GaussianRational& c) { return c; });
}

std::complex<double> diagonalSection(const DiagonalCoefficients& a, const std::vector<std::complex<double>>& z,
                                     const std::vector<std::complex<double>>& w) {
  return diagonalSectionImpl<std::complex<double>>(a, z, w,
                                                   [](const GaussianRational& c) { return c.toComplex(); });
}

long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  if (!out.fits_slong_p()) throw std::overflow_error("binomial coefficient too large");
  return out.get_si();
}

const ThresholdRow& ThresholdTable::row(const std::string& name) const {
  for (const auto& r : rows) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no threshold row named " + name);
}

ThresholdTable uniquenessThresholds(int k, int d, double cMax) {
  if (k < 1 || d < 1) throw std::invalid_argument("thresholds need k, d >= 1");
  if (!(cMax >= 0.0) || !std::isfinite(cMax)) throw std::invalid_argument("growth index must be finite and >= 0");
  ThresholdTable table;
  table.k = k;
  table.d = d;
  table.c = exactRational(cMax);
  auto add = [&](std::string name, mpq_class bound) {
    bound.canonicalize();
    mpz_class floor;
    mpz_fdiv_q(floor.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    table.rows.push_back({std::move(name), bound, floor.get_si() + 1});
  };
  mpq_class kk(k);
  mpq_class dd(d);
  mpq_class geodesic = (kk - 1) * kk * (kk + 1) * (dd - 1) / (2 * dd);
  mpq_class entireI = (3 * kk + 1) / dd + geodesic;
  mpq_class entireII = 2 * ((kk + 1) / dd + geodesic);
  mpq_class growth = kk * kk * (kk + 1) * (kk + 1) * table.c;
  add("entire (i)", entireI);
  add("entire (ii)", entireII);
  add("disk (i)", entireI + growth / 2);
  add("disk (ii)", entireII + growth / dd);
  mpz_class base = mpz_class(1) << (k - 1);
  base *= (k + 1) * k;
  base *= mpz_class(d) * (d + 1);
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
  mpq_class m(2 * d * power);
  add("Dulock-Ru", kk + 1 + 2 * m / dd + mpq_class(1, 2));
  mpq_class h(binomial(k + d, d));
  add("Quang-An (a)", 2 * (h - 1) / dd + h);
  add("Quang-An (b)", 2 * h);
  add("Hilbert bound", h);
  add("Fujimoto", 3 * kk + 1);
  add("Chen-Yan", 2 * kk + 2);
  return table;
}

GroupPartition ratioGroups(const ProjectiveCurve& f, const ProjectiveCurve& g,
                           const std::vector<HomogeneousPolynomial>& sigmas, int k) {
  int q = static_cast<int>(sigmas.size());
  if (q < 1) throw std::invalid_argument("ratioGroups needs at least one hypersurface");
  if (k < 1) throw std::invalid_argument("ratioGroups needs k >= 1");
  std::vector<UniPolynomial> pf;
  std::vector<UniPolynomial> pg;
  for (int j = 0; j < q; ++j) {
    pf.push_back(pullback(f, sigmas[j]));
    pg.push_back(pullback(g, sigmas[j]));
    if (pf.back().isZero() || pg.back().isZero()) {
      throw Error(ErrorKind::ZeroPullback, "a curve lies inside " + sigmaName(j));
    }
  }
  std::vector<int> parent(q);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (pf[i] * pg[j] == pf[j] * pg[i]) {
        int a = find(i);
        int b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  GroupPartition out;
  std::vector<int> classOf(q, -1);
  for (int i = 0; i < q; ++i) {
    int root = find(i);
    if (classOf[root] < 0) {
      classOf[root] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[classOf[root]].push_back(i);
  }
  for (const auto& cls : out.classes) out.order.insert(out.order.end(), cls.begin(), cls.end());
  out.classesAtMostK = std::all_of(out.classes.begin(), out.classes.end(),
                                   [k](const std::vector<int>& c) { return static_cast<int>(c.size()) <= k; });
  out.auxiliariesNonzero = true;
  for (int pos = 0; pos < q; ++pos) {
    int partner = (pos + k) % q;
    out.pairing.push_back(partner);
    int i = out.order[pos];
    int j = out.order[partner];
    out.auxiliaries.push_back(pf[i] * pg[j] - pg[i] * pf[j]);
    out.auxiliariesNonzero = out.auxiliariesNonzero && !out.auxiliaries.back().isZero();
  }
  return out;
}

HarnessReport uniquenessHarness(const HarnessInput& input) {
  int k = input.basis.k();
  int d = input.basis.d();
  HarnessReport report;
  report.q = static_cast<int>(input.sigmas.size());
  report.threshold = uniquenessThresholds(k, d, input.c).row("disk (i)").bound;
  report.aboveThreshold = mpq_class(report.q) > report.threshold;
  ProjectiveCurve f = reduce(input.f);
  ProjectiveCurve g = reduce(input.g);
  if (f.k() != k || g.k() != k) throw Error(ErrorKind::DegreeMismatch, "curves and linear system disagree on k");
  if (curvesIdentical(f, g)) {
    report.identical = true;
    report.verdict = "consistent with f ≡ g conclusion";
    return report;
  }
  SharingSet sharing = sharingSet(f, g, input.sigmas);
  if (!input.synthetic && !curvesAgreeOn(f, g, sharing.locus)) {
    throw Error(ErrorKind::SharingViolated, "f and g differ at some point of the sharing set");
  }
  report.sharingBound = sharingBoundRows(f, g, sharing, input.grid, input.quadrature);
  GrowthIndex growth{input.c, false};
  report.smtF = smtVerify({input.basis, input.sigmas, f, input.grid, input.epsilon, growth, input.logConstant,
                           input.quadrature, input.seed});
  report.smtG = smtVerify({input.basis, input.sigmas, g, input.grid, input.epsilon, growth, input.logConstant,
                           input.quadrature, input.seed});
  report.groups = ratioGroups(f, g, input.sigmas, k);

  std::vector<DivisorOnDisk> divF;
  std::vector<DivisorOnDisk> divG;
  for (const auto& s : input.sigmas) {
    divF.push_back(zeroDivisor(pullback(f, s)));
    divG.push_back(zeroDivisor(pullback(g, s)));
  }
  mpq_class gapExact = mpq_class(2 * k, d) + principalRate(k, input.epsilon, input.c) - smtCoefficient(k, d, report.q);
  double gap = gapExact.get_d();
  bool domination = true;
  bool contradiction = true;
  const auto& bound = *report.sharingBound;
  for (std::size_t i = 0; i < bound.rows.size(); ++i) {
    const SharingBoundRow& sb = bound.rows[i];
    HarnessRow row;
    row.r = sb.r;
    row.sharingMargin = sb.margin;
    row.smtMarginF = report.smtF->rows[i].margin;
    row.smtMarginG = report.smtG->rows[i].margin;
    double sum = 0.0;
    for (std::size_t j = 0; j < input.sigmas.size(); ++j) {
      sum += countingFunction(divF[j], sb.r, k) + countingFunction(divG[j], sb.r, k);
    }
    row.dominationMargin = 2.0 * k * sb.NS - sum;
    row.contradictionMargin =
        gap * (sb.Tf + sb.Tg) + input.logConstant * (logPlus(sb.Tf) + logPlus(sb.Tg) + logPlus(sb.r));
    domination = domination && nonnegative(row.dominationMargin, sum);
    if (sb.r >= kBurnIn) contradiction = contradiction && nonnegative(row.contradictionMargin, sb.Tf + sb.Tg);
    report.rows.push_back(row);
  }
  if (!bound.holds) report.failed.push_back("sharing bound");
  if (!report.smtF->overall) report.failed.push_back("SMT for f");
  if (!report.smtG->overall) report.failed.push_back("SMT for g");
  if (!domination) report.failed.push_back("domination");
  if (!contradiction) report.failed.push_back("contradiction margin");
  if (report.failed.empty()) {
    report.verdict = "inequalities hold, no contradiction";
  } else {
    report.verdict = "failed:";
    for (std::size_t i = 0; i < report.failed.size(); ++i) report.verdict += (i ? ", " : " ") + report.failed[i];
  }
  return report;
}

}  // namespace tgc
