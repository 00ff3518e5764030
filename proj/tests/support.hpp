#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "tgc/algebra/linear.hpp"
#include "tgc/algebra/parse.hpp"
#include "tgc/connection.hpp"
#include "tgc/curve.hpp"
#include "tgc/error.hpp"

namespace tgc::testing {

inline HomogeneousPolynomial hom(const std::string& text, int numVars) { return parseHomogeneous(text, numVars); }
inline UniPolynomial uni(const std::string& text) { return parseUniPolynomial(text); }

inline ProjectiveCurve curve(std::initializer_list<const char*> parts) {
  std::vector<UniPolynomial> c;
  for (const char* p : parts) c.push_back(uni(p));
  return ProjectiveCurve(std::move(c));
}

inline std::vector<HomogeneousPolynomial> sigmas(std::initializer_list<const char*> parts, int numVars) {
  std::vector<HomogeneousPolynomial> out;
  for (const char* p : parts) out.push_back(hom(p, numVars));
  return out;
}

// ---- generators ----

inline GaussianRational randomScalar(std::mt19937& rng, int range = 5, bool complex = true) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  mpq_class re(num(rng), den(rng));
  mpq_class im(complex ? num(rng) : 0, den(rng));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

inline GaussianRational randomNonzero(std::mt19937& rng, int range = 5) {
  for (;;) {
    GaussianRational c = randomScalar(rng, range);
    if (!c.isZero()) return c;
  }
}

inline Polynomial randomPolynomial(std::mt19937& rng, int numVars, int maxDegree, int terms) {
  Polynomial p(numVars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(numVars, 0);
    int budget = maxDegree;
    for (int v = 0; v < numVars; ++v) {
      e[v] = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= e[v];
    }
    p.addTerm(e, randomScalar(rng, 4));
  }
  return p;
}

inline std::vector<Exponent> monomialsOfDegree(int numVars, int d) {
  std::vector<Exponent> out;
  Exponent e(numVars, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == numVars - 1) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[v] = a;
      self(self, v + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline HomogeneousPolynomial randomHomogeneous(std::mt19937& rng, int numVars, int d, int terms) {
  auto monos = monomialsOfDegree(numVars, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  Polynomial p(numVars);
  for (int t = 0; t < terms; ++t) p.addTerm(monos[pick(rng)], randomScalar(rng, 4));
  if (p.isZero()) p.addTerm(monos.front(), 1);
  return HomogeneousPolynomial(p, d);
}

/// X_mu^d plus one or two small random terms; retried until nonsingular.
inline LinearSystemBasis perturbedBasis(std::mt19937& rng, int k, int d) {
  auto monos = monomialsOfDegree(k + 1, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    std::vector<HomogeneousPolynomial> s;
    for (int mu = 0; mu <= k; ++mu) {
      Exponent e(k + 1, 0);
      e[mu] = d;
      Polynomial p = Polynomial::monomial(e, 1);
      for (int t = 0; t < 2; ++t) p.addTerm(monos[pick(rng)], coef(rng));
      if (p.isZero()) p.addTerm(e, 1);
      s.push_back(HomogeneousPolynomial(p, d));
    }
    try {
      return LinearSystemBasis(s);
    } catch (const Error&) {
    }
  }
}

inline UniPolynomial randomUni(std::mt19937& rng, int degree, int range = 4) {
  std::vector<GaussianRational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(randomScalar(rng, range, false));
  if (c.back().isZero()) c.back() = 1;
  return UniPolynomial(c);
}

/// f_0 = 1 and f_i of strictly increasing degree, so the curve is nondegenerate.
inline ProjectiveCurve randomCurve(std::mt19937& rng, int k, int baseDegree = 1) {
  std::vector<UniPolynomial> c{UniPolynomial(1)};
  for (int i = 1; i <= k; ++i) c.push_back(randomUni(rng, baseDegree + i - 1));
  return ProjectiveCurve(c);
}

// ---- oracles ----

/// Cofactor expansion along the first row.
template <class T>
T laplace(const std::vector<std::vector<T>>& m, const T& zero) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  T sum = zero;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(row);
    }
    T term = m[0][c] * laplace(minor, zero);
    sum = (c % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

inline Polynomial laplaceDeterminant(const Matrix<Polynomial>& m) {
  std::vector<std::vector<Polynomial>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) rows[r].push_back(m(r, c));
  }
  return laplace(rows, Polynomial(m(0, 0).numVars()));
}

/// Classical Wronskian of the affine coordinates f_i/f_chart: rows are the
/// successive z-derivatives, quotient rule done by hand.
inline UniRational classicalWronskian(const ProjectiveCurve& f, int chart) {
  std::vector<std::pair<UniPolynomial, UniPolynomial>> coords;
  for (int i = 0; i <= f.k(); ++i) {
    if (i != chart) coords.push_back({f[i], f[chart]});
  }
  auto diff = [](const std::pair<UniPolynomial, UniPolynomial>& q) {
    return std::make_pair(q.first.derivative() * q.second - q.first * q.second.derivative(),
                          q.second * q.second);
  };
  int k = f.k();
  std::vector<std::vector<UniRational>> rows(k);
  for (auto& q : coords) {
    auto cur = q;
    for (int m = 0; m < k; ++m) {
      cur = diff(cur);
      rows[m].push_back(UniRational(cur.first, cur.second));
    }
  }
  return laplace(rows, UniRational(UniPolynomial()));
}

/// Plain trapezoid circle mean, fixed node count.
template <class F>
double circleAverage(F&& g, double r, int nodes = 1 << 14) {
  double sum = 0.0;
  for (int t = 0; t < nodes; ++t) {
    double theta = 2.0 * std::numbers::pi * (t + 0.5) / nodes;
    sum += g(std::polar(r, theta));
  }
  return sum / nodes;
}

/// Jensen: N(r, p) = mean log|p| on |z| = r - log|leading Taylor coefficient at 0|.
inline double jensenCounting(const UniPolynomial& p, double r) {
  int m0 = 0;
  while (p.coeff(m0).isZero()) ++m0;
  double c0 = std::abs(p.coeff(m0).toComplex());
  double mean = circleAverage([&](std::complex<double> z) { return std::log(std::abs(p.evaluate(z))); }, r);
  return mean - std::log(c0);
}

/// prod (z - a)^m for explicit roots.
inline UniPolynomial fromRoots(const std::vector<std::pair<GaussianRational, int>>& roots) {
  UniPolynomial p(1);
  for (const auto& [a, m] : roots) p = p * UniPolynomial::linear(a).pow(m);
  return p;
}

/// Counting function straight from the definition with known roots.
inline double countingFromRoots(const std::vector<std::pair<GaussianRational, int>>& roots, double r, int cap = 1 << 30) {
  double n = 0.0;
  for (const auto& [a, m] : roots) {
    double mod = std::abs(a.toComplex());
    int w = std::min(m, cap);
    if (mod == 0.0) {
      n += w * std::log(r);
    } else if (mod < r) {
      n += w * std::log(r / mod);
    }
  }
  return n;
}

}  // namespace tgc::testing
